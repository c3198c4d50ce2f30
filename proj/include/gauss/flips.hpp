#pragma once

#include <string>
#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

/// Two interlaced chords at adjacent positions: chord P at slots i and j,
/// chord Q at slots i+1 and j+1 (all mod 2n). Flipping reverses the arc
/// strictly between slot i+1 and slot j, i.e. slots i+2 .. j-1.
struct FlipSite {
  int i = 0;
  int j = 0;
  int p = 0;  // chord at i and j
  int q = 0;  // chord at i+1 and j+1
  int arc_begin = 0;
  int arc_length = 0;

  auto operator<=>(const FlipSite&) const = default;
};

/// Every site, one per starting slot i, ascending by i. Both arcs at a chord
/// pair appear: as (i, j) and as (j, i).
std::vector<FlipSite> flip_sites(const GaussDiagram& d);

/// Reverses the site's arc. Throws StaleSiteError if `s` is not a site of d.
GaussDiagram apply_flip(const GaussDiagram& d, const FlipSite& s);

struct OrbitEdge {
  int from = 0;  // member index
  FlipSite site;  // site of the member's canonical representative
  int to = 0;
};

struct FlipOrbit {
  std::vector<CanonicalWord> members;  // ascending
  std::vector<bool> realizable;        // parallel to members
  std::vector<OrbitEdge> edges;

  bool homogeneous() const;
  int index_of(const CanonicalWord& w) const;  // -1 if absent
};

/// Closure of d's canonical class under flips.
FlipOrbit flip_orbit(const GaussDiagram& d);

struct FlipCounterexample {
  std::string diagram;  // canonical word
  FlipSite site;
  std::string flipped;  // word after the flip
  bool before = false;
  bool after = false;
};

struct FlipTheoremReport {
  int max_n = 0;
  std::vector<int> diagrams_per_n;  // index n-1, n = 1..max_n
  long diagrams_checked = 0;
  long sites_checked = 0;
  long identity_sites = 0;  // sites with an empty arc
  std::vector<FlipCounterexample> counterexamples;
};

/// Checks is_realizable(apply_flip(d, s)) == is_realizable(d) for every
/// canonical diagram with at most max_n chords and every site.
FlipTheoremReport verify_flip_theorem(int max_n, unsigned threads = 1);

}  // namespace gauss
