#include "gauss/flips.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <set>

#include "gauss/errors.hpp"
#include "gauss/parallel.hpp"
#include "gauss/realizability.hpp"

namespace gauss {

namespace {

std::optional<FlipSite> site_at(const GaussDiagram& d, int i) {
  if (d.chord_count() < 2) return std::nullopt;
  const int j = d.partner(i);
  const int i1 = d.wrap(i + 1);
  if (d.partner(i1) != d.wrap(j + 1) || d.chord_at(i) == d.chord_at(i1)) return std::nullopt;
  FlipSite s;
  s.i = d.wrap(i);
  s.j = j;
  s.p = d.chord_at(i);
  s.q = d.chord_at(i1);
  s.arc_begin = d.wrap(i + 2);
  s.arc_length = d.wrap(j - i - 2);
  return s;
}

}  // namespace

std::vector<FlipSite> flip_sites(const GaussDiagram& d) {
  std::vector<FlipSite> out;
  for (int i = 0; i < d.slot_count(); ++i)
    if (auto s = site_at(d, i)) out.push_back(*s);
  return out;
}

GaussDiagram apply_flip(const GaussDiagram& d, const FlipSite& s) {
  // Chord ids may be renumbered by an earlier flip; only positions must match.
  const auto live = s.i >= 0 && s.i < d.slot_count() ? site_at(d, s.i) : std::nullopt;
  if (!live || live->j != s.j || live->arc_begin != s.arc_begin || live->arc_length != s.arc_length)
    throw StaleSiteError("flip site at slots " + std::to_string(s.i) + "," + std::to_string(s.j) +
                         " does not match diagram " + d.word());
  const int m = d.slot_count();
  std::vector<int> moved(m);
  for (int t = 0; t < m; ++t) moved[t] = t;
  for (int t = 0; t < s.arc_length; ++t) moved[d.wrap(s.arc_begin + t)] = d.wrap(s.arc_begin + s.arc_length - 1 - t);
  std::vector<int> partner(m);
  for (int t = 0; t < m; ++t) partner[moved[t]] = moved[d.partner(t)];
  return GaussDiagram::from_partners(std::move(partner));
}

bool FlipOrbit::homogeneous() const {
  return std::adjacent_find(realizable.begin(), realizable.end(), std::not_equal_to<>()) == realizable.end();
}

int FlipOrbit::index_of(const CanonicalWord& w) const {
  const auto it = std::lower_bound(members.begin(), members.end(), w);
  return it != members.end() && *it == w ? static_cast<int>(it - members.begin()) : -1;
}

FlipOrbit flip_orbit(const GaussDiagram& d) {
  std::set<CanonicalWord> seen;
  struct RawEdge {
    CanonicalWord from;
    FlipSite site;
    CanonicalWord to;
  };
  std::vector<RawEdge> raw;
  std::queue<CanonicalWord> pending;
  auto start = canonical_form(d);
  seen.insert(start);
  pending.push(std::move(start));
  while (!pending.empty()) {
    const CanonicalWord cur = std::move(pending.front());
    pending.pop();
    const GaussDiagram rep = cur.diagram();
    for (const auto& s : flip_sites(rep)) {
      auto next = canonical_form(apply_flip(rep, s));
      if (seen.insert(next).second) pending.push(next);
      raw.push_back({cur, s, std::move(next)});
    }
  }
  FlipOrbit orbit;
  for (const auto& w : seen) {
    orbit.realizable.push_back(is_realizable(w.diagram()));
    orbit.members.push_back(w);
  }
  for (auto& e : raw) orbit.edges.push_back({orbit.index_of(e.from), e.site, orbit.index_of(e.to)});
  return orbit;
}

FlipTheoremReport verify_flip_theorem(int max_n, unsigned threads) {
  FlipTheoremReport report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    const auto diagrams = enumerate_diagrams(n);
    report.diagrams_per_n.push_back(static_cast<int>(diagrams.size()));

    struct Outcome {
      long sites = 0;
      long identity = 0;
      std::vector<FlipCounterexample> bad;
    };
    std::vector<Outcome> outcomes(diagrams.size());
    parallel_for(diagrams.size(), threads, [&](std::size_t k) {
      const auto& d = diagrams[k];
      const bool before = is_realizable(d);
      Outcome o;
      for (const auto& s : flip_sites(d)) {
        ++o.sites;
        if (s.arc_length == 0) ++o.identity;
        const auto flipped = apply_flip(d, s);
        const bool after = is_realizable(flipped);
        if (after != before) o.bad.push_back({d.word(), s, flipped.word(), before, after});
      }
      outcomes[k] = std::move(o);
    });
    for (auto& o : outcomes) {
      ++report.diagrams_checked;
      report.sites_checked += o.sites;
      report.identity_sites += o.identity;
      for (auto& c : o.bad) report.counterexamples.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace gauss
