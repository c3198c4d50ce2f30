#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

struct Edge {
  int u;
  int v;  // u < v

  auto operator<=>(const Edge&) const = default;
};

/// 3-regular multigraph. Parallel edges are allowed, self-loops are not.
class CubicGraph {
 public:
  /// Throws NotCubicError (with a degree diagnostic) on self-loops,
  /// out-of-range endpoints or any vertex whose degree is not 3.
  CubicGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  /// Sorted edge multiset.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbors of v with multiplicity, ascending.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int multiplicity(int u, int v) const;

  bool is_bipartite() const;

  /// One "u v" line per edge.
  std::string to_edge_list() const;
  std::string to_dot(std::string_view name = "G") const;

  bool operator==(const CubicGraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Hamiltonian cycle stored canonically: starts at vertex 0 and the second
/// vertex is not larger than the last.
class HamCycle {
 public:
  /// Canonicalizes an arbitrary rotation/direction of a vertex cycle.
  explicit HamCycle(std::vector<int> order);

  const std::vector<int>& order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(order_.size()); }

  /// Checks the permutation and edge conditions against `g` (edge use is
  /// counted with multiplicity).
  bool is_cycle_of(const CubicGraph& g) const;

  std::string to_string() const;

  auto operator<=>(const HamCycle&) const = default;

 private:
  std::vector<int> order_;
};

/// Cycle 0..2k-1 plus the k antipodal rungs {i, i+k}.
CubicGraph moebius_ladder(int rungs);

/// All Hamiltonian cycles, once each up to rotation and reflection, in
/// ascending lexicographic order of their canonical sequences.
std::vector<HamCycle> hamiltonian_cycles(const CubicGraph& g);

/// Diagram whose slots are the positions along `h` and whose chords are the
/// non-cycle edges. Throws CycleMismatchError when `h` is not a Hamiltonian
/// cycle of `g` or the leftover edges are not a perfect matching.
GaussDiagram diagram_from_cycle(const CubicGraph& g, const HamCycle& h);

struct DiagramGraph {
  CubicGraph graph;
  HamCycle cycle;
};

/// Vertices are slots; edges are the circle {k, k+1} plus the chords.
DiagramGraph graph_from_diagram(const GaussDiagram& d);

/// Vertex bijection g1 -> g2 preserving edge multiplicities, if one exists.
std::optional<std::vector<int>> find_isomorphism(const CubicGraph& g1, const CubicGraph& g2);

inline bool are_isomorphic(const CubicGraph& g1, const CubicGraph& g2) {
  return find_isomorphism(g1, g2).has_value();
}

/// True iff `map` is a bijection carrying the edge multiset of g1 onto g2's.
bool verify_isomorphism(const CubicGraph& g1, const CubicGraph& g2, const std::vector<int>& map);

/// Parses edge-list text ("u v" per line; '#' starts a comment) or the
/// builtin "mobius:<k>".
CubicGraph parse_graph(std::string_view text);

struct CensusEntry {
  CanonicalWord canonical;
  int cycle_count = 0;
  bool realizable = false;
  int min_genus = 0;
  HamCycle example;
};

struct CensusReport {
  int total_cycles = 0;
  std::vector<CensusEntry> classes;  // ascending canonical word
};

/// Groups every Hamiltonian cycle of `g` by the canonical class of the
/// diagram it produces, with a realizability verdict per class.
CensusReport ham_census(const CubicGraph& g);

}  // namespace gauss
