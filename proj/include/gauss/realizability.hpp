#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gauss/diagram.hpp"

namespace gauss {

// Darts of the 4-regular map of a curve with Gauss diagram d.
//
// The curve runs through slots 0, 1, ..., 2n-1 in order; curve segment k
// joins slot k to slot k+1. Each slot contributes two darts leaving its
// crossing: the forward dart 2k runs along segment k, the backward dart
// 2k+1 runs back along segment k-1.
namespace dart {
inline int forward(int slot) { return 2 * slot; }
inline int backward(int slot) { return 2 * slot + 1; }
inline int slot_of(int d) { return d / 2; }
inline bool is_forward(int d) { return d % 2 == 0; }
}  // namespace dart

/// One transverse cyclic order per crossing. With the crossing's slots
/// s1 < s2, bit 0 is the cyclic order (first-in, second-in, first-out,
/// second-out) and bit 1 its reflection.
struct RotationSystem {
  std::vector<std::uint8_t> bits;  // indexed by chord

  std::uint64_t mask() const;
  auto operator<=>(const RotationSystem&) const = default;
};

struct EmbeddingReport {
  RotationSystem rotation;
  std::vector<std::vector<int>> faces;  // each a cyclic dart sequence
  int face_count = 0;
  int genus = 0;
};

struct CurveCode {
  std::string text;
  auto operator<=>(const CurveCode&) const = default;
};

struct CurveInvariants {
  std::vector<int> face_degrees;  // ascending
  int face_count = 0;
};

/// All 2^n rotation systems in ascending bit-vector order (chord 0 is the
/// least significant bit).
std::vector<RotationSystem> transverse_rotation_systems(const GaussDiagram& d);

/// Dart permutations of the map: the segment involution and the rotation.
std::vector<int> segment_involution(const GaussDiagram& d);
std::vector<int> rotation_permutation(const GaussDiagram& d, const RotationSystem& rs);

EmbeddingReport trace_faces(const GaussDiagram& d, const RotationSystem& rs);

/// Genus-0 embeddings, in rotation-system order. Empty iff unrealizable.
std::vector<EmbeddingReport> realize_all(const GaussDiagram& d);

bool is_realizable(const GaussDiagram& d);

/// Smallest genus over all rotation systems.
int min_genus(const GaussDiagram& d);

/// Independent check: replace every crossing by a 4-cycle whose corners carry
/// the strand ends in transverse order and test ordinary planarity.
bool gadget_planarity(const GaussDiagram& d);

/// Canonical code of a genus-0 embedding, identifying curves up to sphere
/// homeomorphism (either orientation). Throws NotPlaneCurveError otherwise.
CurveCode curve_code(const GaussDiagram& d, const EmbeddingReport& e);

CurveInvariants curve_invariants(const EmbeddingReport& e);

/// "(A,3+)" for the forward dart at slot 3 of chord A.
std::string dart_text(const GaussDiagram& d, int dart_id);

/// Faces as text, one face per line: darts separated by spaces.
std::string faces_text(const GaussDiagram& d, const EmbeddingReport& e);

struct OracleSweepReport {
  int max_n = 0;
  std::vector<int> diagrams_per_n;  // index n-1
  long diagrams_checked = 0;
  long realizable_count = 0;
  std::vector<std::string> oracle_disagreements;  // canonical words
  std::vector<std::string> parity_violations;     // realizable but parity fails
  std::vector<std::string> euler_violations;
};

/// is_realizable vs gadget_planarity, parity soundness and Euler consistency
/// over every canonical diagram with 1..max_n chords.
OracleSweepReport oracle_sweep(int max_n, unsigned threads = 1);

}  // namespace gauss
