#include "gauss/realizability.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "gauss/errors.hpp"
#include "gauss/parallel.hpp"

namespace gauss {

std::uint64_t RotationSystem::mask() const {
  std::uint64_t m = 0;
  for (std::size_t c = 0; c < bits.size() && c < 64; ++c)
    if (bits[c]) m |= std::uint64_t{1} << c;
  return m;
}

namespace {

RotationSystem system_from_mask(int n, std::uint64_t mask) {
  RotationSystem rs;
  rs.bits.resize(n);
  for (int c = 0; c < n; ++c) rs.bits[c] = static_cast<std::uint8_t>((mask >> c) & 1u);
  return rs;
}

// The four darts at a crossing, in the bit-0 cyclic order
// (first-in, second-in, first-out, second-out).
std::array<int, 4> crossing_darts(const GaussDiagram& d, int chord) {
  const auto [s1, s2] = d.chord_slots(chord);
  return {dart::backward(s1), dart::backward(s2), dart::forward(s1), dart::forward(s2)};
}

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[perm[k]] = static_cast<int>(k);
  return inv;
}

std::vector<int> map_code(const std::vector<int>& sigma, const std::vector<int>& alpha, int start) {
  const int darts = static_cast<int>(sigma.size());
  std::vector<int> label(darts, -1);
  std::vector<int> order;
  order.reserve(darts);
  label[start] = 0;
  order.push_back(start);
  std::vector<int> code;
  code.reserve(2 * darts);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int d = order[k];
    for (int next : {sigma[d], alpha[d]}) {
      if (label[next] < 0) {
        label[next] = static_cast<int>(order.size());
        order.push_back(next);
      }
      code.push_back(label[next]);
    }
  }
  return code;
}

}  // namespace

std::vector<RotationSystem> transverse_rotation_systems(const GaussDiagram& d) {
  const int n = d.chord_count();
  std::vector<RotationSystem> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(system_from_mask(n, mask));
  return out;
}

std::vector<int> segment_involution(const GaussDiagram& d) {
  const int m = d.slot_count();
  std::vector<int> alpha(2 * m);
  for (int s = 0; s < m; ++s) {
    alpha[dart::forward(s)] = dart::backward(d.wrap(s + 1));
    alpha[dart::backward(d.wrap(s + 1))] = dart::forward(s);
  }
  return alpha;
}

std::vector<int> rotation_permutation(const GaussDiagram& d, const RotationSystem& rs) {
  std::vector<int> sigma(2 * d.slot_count());
  for (int c = 0; c < d.chord_count(); ++c) {
    const auto ring = crossing_darts(d, c);
    // bit 1 walks the same ring backwards.
    const int step = rs.bits[c] ? 3 : 1;
    for (int k = 0; k < 4; ++k) sigma[ring[k]] = ring[(k + step) % 4];
  }
  return sigma;
}

EmbeddingReport trace_faces(const GaussDiagram& d, const RotationSystem& rs) {
  const auto alpha = segment_involution(d);
  const auto sigma = rotation_permutation(d, rs);
  const int darts = static_cast<int>(alpha.size());
  EmbeddingReport e;
  e.rotation = rs;
  std::vector<char> seen(darts, 0);
  for (int start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    for (int x = start; !seen[x]; x = sigma[alpha[x]]) {
      seen[x] = 1;
      face.push_back(x);
    }
    e.faces.push_back(std::move(face));
  }
  e.face_count = static_cast<int>(e.faces.size());
  // V - E + F = 2 - 2g with V = n, E = 2n.
  e.genus = (2 + d.chord_count() - e.face_count) / 2;
  return e;
}

std::vector<EmbeddingReport> realize_all(const GaussDiagram& d) {
  std::vector<EmbeddingReport> out;
  const int n = d.chord_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto e = trace_faces(d, system_from_mask(n, mask));
    if (e.genus == 0) out.push_back(std::move(e));
  }
  return out;
}

bool is_realizable(const GaussDiagram& d) {
  const int n = d.chord_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (trace_faces(d, system_from_mask(n, mask)).genus == 0) return true;
  return false;
}

int min_genus(const GaussDiagram& d) {
  const int n = d.chord_count();
  int best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && best > 0; ++mask)
    best = std::min(best, trace_faces(d, system_from_mask(n, mask)).genus);
  return best;
}

bool gadget_planarity(const GaussDiagram& d) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>>;
  // Gadget corners are the darts themselves.
  const int corners = 2 * d.slot_count();
  std::set<std::pair<int, int>> edges;
  auto add = [&](int a, int b) { edges.emplace(std::min(a, b), std::max(a, b)); };
  for (int c = 0; c < d.chord_count(); ++c) {
    const auto ring = crossing_darts(d, c);
    for (int k = 0; k < 4; ++k) add(ring[k], ring[(k + 1) % 4]);
  }
  const auto alpha = segment_involution(d);
  for (int x = 0; x < corners; ++x) add(x, alpha[x]);
  // Parallel edges are dropped above; they never affect planarity.
  if (corners >= 3 && static_cast<long>(edges.size()) > 3L * corners - 6) return false;

  Graph g(corners);
  for (const auto& [a, b] : edges) boost::add_edge(a, b, g);
  return boost::boyer_myrvold_planarity_test(g);
}

CurveCode curve_code(const GaussDiagram& d, const EmbeddingReport& e) {
  if (e.genus != 0)
    throw NotPlaneCurveError("embedding has genus " + std::to_string(e.genus) + ", not a plane curve");
  const auto alpha = segment_involution(d);
  const auto sigma = rotation_permutation(d, e.rotation);
  const auto mirror = invert(sigma);
  std::vector<int> best;
  for (const auto* rot : {&sigma, &mirror}) {
    for (int start = 0; start < static_cast<int>(alpha.size()); ++start) {
      auto code = map_code(*rot, alpha, start);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  std::string text = "n" + std::to_string(d.chord_count()) + ":";
  for (std::size_t k = 0; k < best.size(); ++k) {
    if (k > 0) text += '.';
    text += std::to_string(best[k]);
  }
  return CurveCode{std::move(text)};
}

CurveInvariants curve_invariants(const EmbeddingReport& e) {
  CurveInvariants inv;
  for (const auto& f : e.faces) inv.face_degrees.push_back(static_cast<int>(f.size()));
  std::sort(inv.face_degrees.begin(), inv.face_degrees.end());
  inv.face_count = e.face_count;
  return inv;
}

std::string dart_text(const GaussDiagram& d, int dart_id) {
  const int slot = dart::slot_of(dart_id);
  return "(" + chord_name(d.chord_at(slot), d.chord_count()) + "," + std::to_string(slot) +
         (dart::is_forward(dart_id) ? "+" : "-") + ")";
}

std::string faces_text(const GaussDiagram& d, const EmbeddingReport& e) {
  std::ostringstream os;
  for (const auto& f : e.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << dart_text(d, f[k]);
    os << '\n';
  }
  return os.str();
}

OracleSweepReport oracle_sweep(int max_n, unsigned threads) {
  OracleSweepReport report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    const auto diagrams = enumerate_diagrams(n);
    report.diagrams_per_n.push_back(static_cast<int>(diagrams.size()));

    struct Outcome {
      bool realizable = false;
      bool agree = true;
      bool parity_ok = true;
      bool euler_ok = true;
    };
    std::vector<Outcome> outcomes(diagrams.size());
    parallel_for(diagrams.size(), threads, [&](std::size_t i) {
      const auto& d = diagrams[i];
      Outcome o;
      bool any_planar = false;
      for (const auto& rs : transverse_rotation_systems(d)) {
        const auto e = trace_faces(d, rs);
        int darts = 0;
        for (const auto& f : e.faces) darts += static_cast<int>(f.size());
        const int chi = d.chord_count() - 2 * d.chord_count() + e.face_count;
        if (darts != 4 * n || chi % 2 != 0 || chi > 2 || chi != 2 - 2 * e.genus) o.euler_ok = false;
        any_planar = any_planar || e.genus == 0;
      }
      o.realizable = is_realizable(d);
      o.agree = o.realizable == any_planar && o.realizable == gadget_planarity(d);
      o.parity_ok = !o.realizable || parity_check(d);
      outcomes[i] = o;
    });
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      const auto& o = outcomes[i];
      ++report.diagrams_checked;
      if (o.realizable) ++report.realizable_count;
      if (!o.agree) report.oracle_disagreements.push_back(diagrams[i].word());
      if (!o.parity_ok) report.parity_violations.push_back(diagrams[i].word());
      if (!o.euler_ok) report.euler_violations.push_back(diagrams[i].word());
    }
  }
  return report;
}

}  // namespace gauss
