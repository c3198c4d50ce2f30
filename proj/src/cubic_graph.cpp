#include "gauss/cubic_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "gauss/errors.hpp"
#include "gauss/realizability.hpp"

namespace gauss {

CubicGraph::CubicGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count), adj_(std::max(vertex_count, 0)) {
  if (vertex_count <= 0) throw NotCubicError("graph has no vertices");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw NotCubicError("edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
    if (u == v) throw NotCubicError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  std::sort(edges_.begin(), edges_.end());
  std::string bad;
  for (int v = 0; v < n_; ++v) {
    std::sort(adj_[v].begin(), adj_[v].end());
    if (adj_[v].size() != 3) {
      if (!bad.empty()) bad += ", ";
      bad += "vertex " + std::to_string(v) + " has degree " + std::to_string(adj_[v].size());
    }
  }
  if (!bad.empty()) throw NotCubicError("graph is not cubic: " + bad);
}

int CubicGraph::multiplicity(int u, int v) const {
  return static_cast<int>(std::count(adj_[u].begin(), adj_[u].end(), v));
}

bool CubicGraph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  for (int root = 0; root < n_; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj_[u]) {
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string CubicGraph::to_edge_list() const {
  std::ostringstream os;
  for (const auto& e : edges_) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string CubicGraph::to_dot(std::string_view name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < n_; ++v) os << "  " << v << ";\n";
  for (const auto& e : edges_) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

HamCycle::HamCycle(std::vector<int> order) : order_(std::move(order)) {
  if (order_.empty()) return;
  const auto first = std::min_element(order_.begin(), order_.end());
  std::rotate(order_.begin(), first, order_.end());
  if (order_.size() > 2 && order_[1] > order_.back()) std::reverse(order_.begin() + 1, order_.end());
}

bool HamCycle::is_cycle_of(const CubicGraph& g) const {
  const int m = g.vertex_count();
  if (size() != m) return false;
  std::vector<char> seen(m, 0);
  for (int v : order_) {
    if (v < 0 || v >= m || seen[v]) return false;
    seen[v] = 1;
  }
  std::map<std::pair<int, int>, int> used;
  for (int k = 0; k < m; ++k) {
    int a = order_[k];
    int b = order_[(k + 1) % m];
    if (a > b) std::swap(a, b);
    if (a == b || ++used[{a, b}] > g.multiplicity(a, b)) return false;
  }
  return true;
}

std::string HamCycle::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(order_[k]);
  }
  return out;
}

CubicGraph moebius_ladder(int rungs) {
  if (rungs < 3)
    throw UnsupportedOrderError("Moebius ladder needs at least 3 rungs, got " + std::to_string(rungs));
  const int m = 2 * rungs;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(i, (i + 1) % m);
  for (int i = 0; i < rungs; ++i) edges.emplace_back(i, i + rungs);
  return CubicGraph(m, std::move(edges));
}

namespace {

struct CycleSearch {
  const CubicGraph& g;
  std::vector<int> path;
  std::vector<char> on_path;
  std::vector<HamCycle> found;

  void extend() {
    const int m = g.vertex_count();
    const int last = path.back();
    if (static_cast<int>(path.size()) == m) {
      // Closing edge; a 2-cycle needs two parallel edges.
      const int need = m == 2 ? 2 : 1;
      if (g.multiplicity(last, path.front()) >= need && (m <= 2 || path[1] < path.back()))
        found.emplace_back(path);
      return;
    }
    const auto& nbrs = g.neighbors(last);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const int w = nbrs[k];
      if (k > 0 && nbrs[k - 1] == w) continue;  // parallel copies give the same sequence
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      extend();
      path.pop_back();
      on_path[w] = 0;
    }
  }
};

}  // namespace

std::vector<HamCycle> hamiltonian_cycles(const CubicGraph& g) {
  CycleSearch search{g, {0}, std::vector<char>(g.vertex_count(), 0), {}};
  search.on_path[0] = 1;
  if (g.vertex_count() == 1) return {};
  search.extend();
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

GaussDiagram diagram_from_cycle(const CubicGraph& g, const HamCycle& h) {
  if (!h.is_cycle_of(g)) throw CycleMismatchError("sequence " + h.to_string() + " is not a Hamiltonian cycle of the graph");
  const int m = g.vertex_count();
  std::vector<int> pos(m);
  for (int k = 0; k < m; ++k) pos[h.order()[k]] = k;

  std::map<std::pair<int, int>, int> remaining;
  for (const auto& e : g.edges()) ++remaining[{e.u, e.v}];
  for (int k = 0; k < m; ++k) {
    int a = h.order()[k];
    int b = h.order()[(k + 1) % m];
    if (a > b) std::swap(a, b);
    --remaining[{a, b}];
  }
  std::vector<int> partner(m, -1);
  for (const auto& [e, count] : remaining) {
    for (int c = 0; c < count; ++c) {
      const int a = pos[e.first];
      const int b = pos[e.second];
      if (partner[a] >= 0 || partner[b] >= 0)
        throw CycleMismatchError("non-cycle edges do not form a perfect matching");
      partner[a] = b;
      partner[b] = a;
    }
  }
  if (std::count(partner.begin(), partner.end(), -1) != 0)
    throw CycleMismatchError("non-cycle edges do not form a perfect matching");
  return GaussDiagram::from_partners(std::move(partner));
}

DiagramGraph graph_from_diagram(const GaussDiagram& d) {
  const int m = d.slot_count();
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < m; ++k) edges.emplace_back(k, (k + 1) % m);
  for (int c = 0; c < d.chord_count(); ++c) edges.push_back(d.chord_slots(c));
  std::vector<int> order(m);
  for (int k = 0; k < m; ++k) order[k] = k;
  return {CubicGraph(m, std::move(edges)), HamCycle(std::move(order))};
}

namespace {

std::vector<int> distance_profile(const CubicGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> count;
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    if (static_cast<int>(count.size()) <= dist[u]) count.resize(dist[u] + 1, 0);
    ++count[dist[u]];
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return count;
}

std::vector<int> multiplicity_pattern(const CubicGraph& g, int v) {
  std::vector<int> pat;
  const auto& nb = g.neighbors(v);
  for (std::size_t k = 0; k < nb.size();) {
    std::size_t e = k;
    while (e < nb.size() && nb[e] == nb[k]) ++e;
    pat.push_back(static_cast<int>(e - k));
    k = e;
  }
  std::sort(pat.begin(), pat.end());
  return pat;
}

// Color refinement run jointly on both graphs so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const CubicGraph& g1, const CubicGraph& g2) {
  const CubicGraph* graphs[2] = {&g1, &g2};
  std::vector<int> colors[2];
  {
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> ids;
    for (int side = 0; side < 2; ++side)
      for (int v = 0; v < graphs[side]->vertex_count(); ++v)
        ids.emplace(std::pair{multiplicity_pattern(*graphs[side], v), distance_profile(*graphs[side], v)}, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int side = 0; side < 2; ++side) {
      colors[side].resize(graphs[side]->vertex_count());
      for (int v = 0; v < graphs[side]->vertex_count(); ++v)
        colors[side][v] = ids.at({multiplicity_pattern(*graphs[side], v), distance_profile(*graphs[side], v)});
    }
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> keys[2];
    for (int side = 0; side < 2; ++side) {
      for (int v = 0; v < graphs[side]->vertex_count(); ++v) {
        std::vector<int> nb;
        for (int w : graphs[side]->neighbors(v)) nb.push_back(colors[side][w]);
        std::sort(nb.begin(), nb.end());
        keys[side].emplace_back(colors[side][v], std::move(nb));
        ids.emplace(keys[side].back(), 0);
      }
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int side = 0; side < 2; ++side)
      for (int v = 0; v < graphs[side]->vertex_count(); ++v) colors[side][v] = ids.at(keys[side][v]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {colors[0], colors[1]};
}

}  // namespace

bool verify_isomorphism(const CubicGraph& g1, const CubicGraph& g2, const std::vector<int>& map) {
  const int m = g1.vertex_count();
  if (g2.vertex_count() != m || static_cast<int>(map.size()) != m) return false;
  std::vector<char> hit(m, 0);
  for (int v : map) {
    if (v < 0 || v >= m || hit[v]) return false;
    hit[v] = 1;
  }
  std::vector<Edge> image;
  for (const auto& e : g1.edges()) {
    int a = map[e.u];
    int b = map[e.v];
    if (a > b) std::swap(a, b);
    image.push_back({a, b});
  }
  std::sort(image.begin(), image.end());
  return image == g2.edges();
}

std::optional<std::vector<int>> find_isomorphism(const CubicGraph& g1, const CubicGraph& g2) {
  const int m = g1.vertex_count();
  if (g2.vertex_count() != m || g1.edges().size() != g2.edges().size()) return std::nullopt;

  const auto [c1, c2] = refine_colors(g1, g2);
  {
    auto h1 = c1;
    auto h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }

  // Visit g1 in BFS order from the rarest color so every later vertex has an
  // already-mapped neighbor.
  std::map<int, int> freq;
  for (int c : c1) ++freq[c];
  std::vector<int> order;
  std::vector<char> queued(m, 0);
  while (static_cast<int>(order.size()) < m) {
    int root = -1;
    for (int v = 0; v < m; ++v)
      if (!queued[v] && (root < 0 || freq[c1[v]] < freq[c1[root]])) root = v;
    std::queue<int> q;
    q.push(root);
    queued[root] = 1;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      order.push_back(u);
      for (int w : g1.neighbors(u))
        if (!queued[w]) {
          queued[w] = 1;
          q.push(w);
        }
    }
  }

  std::vector<int> map(m, -1);
  std::vector<char> used(m, 0);
  std::vector<int> placed;  // g1 vertices already mapped

  auto consistent = [&](int u, int cand) {
    for (int x : placed)
      if (g1.multiplicity(u, x) != g2.multiplicity(cand, map[x])) return false;
    return true;
  };

  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    const int u = order[depth];
    std::vector<int> candidates;
    int anchor = -1;
    for (int w : g1.neighbors(u))
      if (map[w] >= 0) {
        anchor = w;
        break;
      }
    if (anchor >= 0) {
      candidates = g2.neighbors(map[anchor]);
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
      for (int v = 0; v < m; ++v) candidates.push_back(v);
    }
    for (int cand : candidates) {
      if (used[cand] || c2[cand] != c1[u] || !consistent(u, cand)) continue;
      map[u] = cand;
      used[cand] = 1;
      placed.push_back(u);
      if (self(self, depth + 1)) return true;
      placed.pop_back();
      used[cand] = 0;
      map[u] = -1;
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return map;
}

CubicGraph parse_graph(std::string_view text) {
  constexpr std::string_view kMobius = "mobius:";
  if (text.substr(0, kMobius.size()) == kMobius) {
    const std::string arg(text.substr(kMobius.size()));
    std::size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(arg, &used);
    } catch (const std::exception&) {
      throw Error("bad Moebius ladder order '" + arg + "'");
    }
    if (used != arg.size()) throw Error("bad Moebius ladder order '" + arg + "'");
    return moebius_ladder(k);
  }
  std::istringstream is{std::string(text)};
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  int line_no = 0;
  for (std::string line; std::getline(is, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int u = 0;
    int v = 0;
    if (!(ls >> u)) continue;  // blank line
    std::string rest;
    if (!(ls >> v) || (ls >> rest))
      throw Error("edge list line " + std::to_string(line_no) + ": expected two vertex labels");
    if (u < 0 || v < 0) throw Error("edge list line " + std::to_string(line_no) + ": negative vertex label");
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (edges.empty()) throw NotCubicError("edge list is empty");
  return CubicGraph(max_vertex + 1, std::move(edges));
}

CensusReport ham_census(const CubicGraph& g) {
  CensusReport report;
  std::map<CanonicalWord, CensusEntry> by_class;
  for (const auto& h : hamiltonian_cycles(g)) {
    ++report.total_cycles;
    auto canon = canonical_form(diagram_from_cycle(g, h));
    auto it = by_class.find(canon);
    if (it == by_class.end()) {
      const GaussDiagram rep = canon.diagram();
      CensusEntry entry{canon, 0, is_realizable(rep), 0, h};
      entry.min_genus = entry.realizable ? 0 : min_genus(rep);
      it = by_class.emplace(std::move(canon), std::move(entry)).first;
    }
    ++it->second.cycle_count;
  }
  for (auto& [canon, entry] : by_class) report.classes.push_back(std::move(entry));
  return report;
}

}  // namespace gauss
