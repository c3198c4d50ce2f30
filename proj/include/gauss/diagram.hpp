#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gauss {

/// A Gauss diagram: 2n points on a circle (slots) paired into n chords.
///
/// Stored as a fixed-point-free involution on slot indices. Chord identifiers
/// are assigned in order of first occurrence, so chord 0 always owns slot 0.
/// Two diagrams compare equal iff their pairings are identical; the token
/// names used to spell a word are not part of the value.
class GaussDiagram {
 public:
  /// Builds a diagram from a partner table (slot -> partner slot).
  /// Throws PartitionError unless `partner` is a fixed-point-free involution.
  static GaussDiagram from_partners(std::vector<int> partner);

  int chord_count() const noexcept { return static_cast<int>(chords_.size()); }
  int slot_count() const noexcept { return static_cast<int>(partner_.size()); }

  int partner(int slot) const { return partner_[wrap(slot)]; }
  int chord_at(int slot) const { return label_[wrap(slot)]; }

  /// Slots of a chord as (first visit, second visit), first < second.
  std::pair<int, int> chord_slots(int chord) const { return chords_[chord]; }

  const std::vector<int>& partners() const noexcept { return partner_; }
  const std::vector<int>& labels() const noexcept { return label_; }

  /// Reduces any integer to the range [0, 2n).
  int wrap(int slot) const noexcept {
    const int m = slot_count();
    const int r = slot % m;
    return r < 0 ? r + m : r;
  }

  /// Same circle read starting at slot k.
  GaussDiagram rotated(int k) const;
  /// Same circle read in the opposite direction, starting at slot 0.
  GaussDiagram reflected() const;

  /// Word spelling using first-occurrence labels (letters up to 26 chords,
  /// whitespace-separated decimal tokens beyond).
  std::string word() const;

  /// "a-b" pair syntax, chords in first-occurrence order.
  std::string pair_text() const;

  bool operator==(const GaussDiagram& other) const noexcept { return partner_ == other.partner_; }

 private:
  GaussDiagram() = default;

  std::vector<int> partner_;
  std::vector<int> label_;
  std::vector<std::pair<int, int>> chords_;
};

/// Representative of a diagram's class under rotation and reflection: the
/// lexicographically smallest first-occurrence label sequence.
struct CanonicalWord {
  std::vector<int> labels;

  std::string text() const;
  /// The representative diagram whose word is this canonical word.
  GaussDiagram diagram() const;

  auto operator<=>(const CanonicalWord&) const = default;
};

/// Simple graph on chords; two chords are adjacent iff they interlace.
class InterlacementGraph {
 public:
  explicit InterlacementGraph(int vertex_count);

  int vertex_count() const noexcept { return n_; }
  bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a) * n_ + b] != 0; }
  int degree(int a) const;
  std::vector<int> degrees() const;
  std::vector<std::pair<int, int>> edges() const;

  void connect(int a, int b);

  /// Graphviz export; vertices are named by chord letter.
  std::string to_dot(std::string_view name = "interlacement") const;

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
};

/// Label used for chord `c` in words and reports.
std::string chord_name(int chord, int chord_count);

/// Parses a double occurrence word. Tokens are single characters unless the
/// text contains whitespace, in which case tokens are whitespace-separated.
GaussDiagram parse_word(std::string_view text);

GaussDiagram from_chord_pairs(std::span<const std::pair<int, int>> pairs);

/// Parses "a-b,c-d,..." chord-pair syntax.
GaussDiagram parse_chord_pairs(std::string_view text);

/// Word or pair syntax, chosen by the presence of '-'.
GaussDiagram parse_diagram(std::string_view text);

CanonicalWord canonical_form(const GaussDiagram& d);

InterlacementGraph interlacement_graph(const GaussDiagram& d);

/// True iff every chord interlaces an even number of chords.
bool parity_check(const GaussDiagram& d);

/// One representative per rotation/reflection class of n-chord diagrams, in
/// ascending canonical order. Each representative spells its canonical word.
std::vector<GaussDiagram> enumerate_diagrams(int n);

}  // namespace gauss
