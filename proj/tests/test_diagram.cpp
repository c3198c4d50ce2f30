#include <doctest.h>

#include <random>
#include <set>

#include "gauss/cubic_graph.hpp"
#include "gauss/diagram.hpp"
#include "gauss/errors.hpp"
#include "oracles.hpp"

using namespace gauss;

namespace {

const char* const kParityTrap = "AEBACBDCED";
const char* const kStarCurve = "ADBECADBEC";
const char* const kStarNeighbour = "ACDECABDEB";

GaussDiagram random_diagram(int n, std::mt19937& rng) {
  std::vector<int> slots(2 * n);
  for (int k = 0; k < 2 * n; ++k) slots[k] = k;
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(slots[2 * k], slots[2 * k + 1]);
  return from_chord_pairs(pairs);
}

}  // namespace

TEST_CASE("parse_word reads slot pairs") {
  const auto d = parse_word(kParityTrap);
  CHECK(d.chord_count() == 5);
  const std::vector<std::pair<int, int>> expected{{0, 3}, {1, 8}, {2, 5}, {4, 7}, {6, 9}};
  std::set<std::pair<int, int>> got;
  for (int c = 0; c < 5; ++c) got.insert(d.chord_slots(c));
  CHECK(got == std::set<std::pair<int, int>>(expected.begin(), expected.end()));

  const auto aa = parse_word("AA");
  CHECK(aa.chord_count() == 1);
  CHECK(aa.partner(0) == 1);
}

TEST_CASE("parse_word errors") {
  try {
    parse_word("ABA");
    FAIL("expected MalformedWordError");
  } catch (const MalformedWordError& e) {
    CHECK(e.token() == "B");
    CHECK(e.occurrences() == 1);
  }
  CHECK_THROWS_AS(parse_word(""), EmptyDiagramError);
  CHECK_THROWS_AS(parse_word("   "), EmptyDiagramError);
  CHECK_THROWS_AS(parse_word("AAA"), MalformedWordError);
  CHECK_THROWS_AS(parse_word("A B A"), MalformedWordError);
}

TEST_CASE("multi-character tokens") {
  const auto d = parse_word("x10 y20 x10 y20");
  CHECK(d == parse_word("ABAB"));
  const auto big = parse_word("c1 c2 c1 c2");
  CHECK(big.word() == "ABAB");
}

TEST_CASE("from_chord_pairs matches fixture words") {
  const std::vector<std::pair<int, int>> star{{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  CHECK(from_chord_pairs(star) == parse_word(kStarCurve));
  const std::vector<std::pair<int, int>> neighbour{{0, 5}, {1, 4}, {2, 7}, {3, 8}, {6, 9}};
  CHECK(from_chord_pairs(neighbour) == parse_word(kStarNeighbour));
  const std::vector<std::pair<int, int>> one{{0, 1}};
  CHECK(from_chord_pairs(one).word() == "AA");
  CHECK(parse_chord_pairs("0-5,1-6,2-7,3-8,4-9") == parse_word(kStarCurve));
  CHECK(parse_diagram("0-5, 1-4, 2-7, 3-8, 6-9") == parse_word(kStarNeighbour));
}

TEST_CASE("from_chord_pairs partition errors") {
  const std::vector<std::pair<int, int>> repeated{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(from_chord_pairs(repeated), PartitionError);
  const std::vector<std::pair<int, int>> missing{{0, 1}, {2, 5}};
  CHECK_THROWS_AS(from_chord_pairs(missing), PartitionError);
  const std::vector<std::pair<int, int>> loop{{0, 0}};
  CHECK_THROWS_AS(from_chord_pairs(loop), PartitionError);
  CHECK_THROWS_AS(parse_chord_pairs("0-1,x-3"), PartitionError);
  CHECK_THROWS_AS(parse_chord_pairs("0-1,23"), PartitionError);
}

TEST_CASE("canonical_form examples") {
  CHECK(canonical_form(parse_word("DBECADBECA")) == canonical_form(parse_word(kStarCurve)));
  CHECK(canonical_form(parse_word(kStarCurve)) != canonical_form(parse_word(kParityTrap)));
  const auto neighbour = parse_word(kStarNeighbour);
  CHECK(canonical_form(neighbour.reflected()) == canonical_form(neighbour));
  // Frozen by hand: all-diameters diagram, and the 5-cycle diagram.
  CHECK(canonical_form(parse_word(kStarCurve)).text() == "ABCDEABCDE");
  CHECK(canonical_form(parse_word(kParityTrap)).text() == "ABCADCEDBE");
  const auto c = canonical_form(neighbour);
  CHECK(canonical_form(c.diagram()) == c);
}

TEST_CASE("canonical_form is invariant under every rotation and reflection") {
  std::mt19937 rng(12345);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto d = random_diagram(n, rng);
      const auto c = canonical_form(d);
      for (int k = 0; k < 2 * n; ++k) {
        CHECK(canonical_form(d.rotated(k)) == c);
        CHECK(canonical_form(d.rotated(k).reflected()) == c);
      }
    }
  }
}

TEST_CASE("interlacement_graph examples") {
  const auto g1 = interlacement_graph(parse_word(kParityTrap));
  CHECK(g1.degrees() == std::vector<int>{2, 2, 2, 2, 2});
  // Five edges forming a single cycle.
  CHECK(g1.edges().size() == 5);
  const auto g2 = interlacement_graph(parse_word(kStarCurve));
  CHECK(g2.edges().size() == 10);
  const auto g0 = interlacement_graph(parse_word("AABB"));
  CHECK(g0.vertex_count() == 2);
  CHECK(g0.edges().empty());
}

TEST_CASE("interlacement agrees with straight-chord geometry and is symmetric") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      const auto g = interlacement_graph(d);
      for (int x = 0; x < n; ++x) {
        CHECK_FALSE(g.adjacent(x, x));
        for (int y = 0; y < n; ++y) {
          CHECK(g.adjacent(x, y) == g.adjacent(y, x));
          if (x != y) CHECK(g.adjacent(x, y) == oracle::segments_cross(2 * n, d.chord_slots(x), d.chord_slots(y)));
        }
      }
    }
  }
}

TEST_CASE("parity_check examples") {
  CHECK(parity_check(parse_word(kParityTrap)));
  CHECK_FALSE(parity_check(parse_word("ABAB")));
  CHECK(parity_check(parse_word("AABB")));
}

TEST_CASE("parity: even degrees <=> opposite-parity slots <=> bipartite graph") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_diagrams(n)) {
      bool opposite = true;
      for (int c = 0; c < n; ++c) {
        const auto [a, b] = d.chord_slots(c);
        opposite = opposite && (a + b) % 2 == 1;
      }
      const auto graph = graph_from_diagram(d).graph;
      CHECK(parity_check(d) == opposite);
      CHECK(parity_check(d) == graph.is_bipartite());
      if (n <= 4) {
        std::multiset<std::pair<int, int>> edges;
        for (const auto& e : graph.edges()) edges.insert({e.u, e.v});
        CHECK(graph.is_bipartite() == oracle::bipartite_by_colouring(2 * n, edges));
      }
    }
  }
}

TEST_CASE("enumerate_diagrams counts match brute-force orbit counting") {
  // Frozen from oracle::count_classes(n, true).
  const std::vector<int> expected{1, 2, 5, 17, 79, 554};
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_diagrams(n);
    CHECK(static_cast<int>(all.size()) == expected[n - 1]);
    CHECK(oracle::count_classes(n, true) == expected[n - 1]);
  }
  CHECK(enumerate_diagrams(1).front().word() == "AA");
  const auto two = enumerate_diagrams(2);
  CHECK(two[0].word() == "AABB");
  CHECK(two[1].word() == "ABAB");
}

TEST_CASE("rotation-only class counts differ from rotation+reflection counts") {
  const std::vector<int> rotation_only{1, 2, 5, 18, 105, 902};
  for (int n = 1; n <= 6; ++n) CHECK(oracle::count_classes(n, false) == rotation_only[n - 1]);
}

TEST_CASE("enumeration is sorted, distinct, and covers random words") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 6; ++n) {
    const auto all = enumerate_diagrams(n);
    std::vector<CanonicalWord> words;
    for (const auto& d : all) {
      const auto c = canonical_form(d);
      CHECK(c.diagram() == d);
      words.push_back(c);
    }
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(std::adjacent_find(words.begin(), words.end()) == words.end());
    const std::set<CanonicalWord> members(words.begin(), words.end());
    for (int sample = 0; sample < 200; ++sample) CHECK(members.count(canonical_form(random_diagram(n, rng))) == 1);
  }
}

TEST_CASE("word spelling beyond 26 chords") {
  std::string text;
  for (int c = 0; c < 30; ++c) text += "t" + std::to_string(c) + " ";
  for (int c = 29; c >= 0; --c) text += "t" + std::to_string(c) + " ";
  const auto d = parse_word(text);
  CHECK(d.chord_count() == 30);
  CHECK(parse_word(d.word()) == d);
  CHECK(parse_word(canonical_form(d).text()) == canonical_form(d).diagram());
}
