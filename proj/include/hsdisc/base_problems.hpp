#pragma once

// The source problems of the reductions: k-Sum and affine degeneracy
// testing, with brute-force and meet-in-the-middle deciders used as oracles.

#include <cstddef>
#include <optional>
#include <vector>

#include "hsdisc/exact.hpp"

namespace hsdisc {

struct KSumInstance {
  std::vector<ExactInt> values;
  std::size_t k = 3;

  bool operator==(const KSumInstance& other) const = default;
};

// How a k-Sum witness may select values.
//  kMultiset: k index slots, repeats allowed (i_1 <= ... <= i_k). This is the
//             problem the halfspace reduction decides.
//  kDistinct: k pairwise distinct indices (i_1 < ... < i_k).
enum class KSumMode { kMultiset, kDistinct };

struct KSumWitness {
  std::vector<std::size_t> indices;  // nondecreasing

  bool operator==(const KSumWitness& other) const = default;
};

// Exhaustive scan in lexicographic index order; returns the smallest
// witness. Throws Error(kTooFewValues) when |values| < k or k < 1.
std::optional<KSumWitness> ksum_bruteforce(const KSumInstance& inst, KSumMode mode = KSumMode::kMultiset);

// Meet in the middle: index tuples of size ceil(k/2) are joined against a
// sorted table of floor(k/2)-tuples. Same decision as ksum_bruteforce.
std::optional<KSumWitness> ksum_mitm(const KSumInstance& inst, KSumMode mode = KSumMode::kMultiset);

// True iff the witness has k valid indices (distinct in kDistinct mode) whose
// values sum to zero.
bool is_ksum_witness(const KSumInstance& inst, const KSumWitness& w, KSumMode mode = KSumMode::kMultiset);

struct PointSetInstance {
  std::size_t dim = 2;
  std::vector<std::vector<ExactInt>> points;
  std::optional<ExactInt> coord_bound;  // nullopt: derive from the points

  // max(1, max |coordinate|) unless an explicit bound is set.
  ExactInt bound() const;
  // Throws Error(kDimensionMismatch) on ragged points and
  // Error(kOutOfRange) if an explicit bound is violated.
  void validate() const;

  bool operator==(const PointSetInstance& other) const = default;
};

struct DegeneracyWitness {
  std::vector<std::size_t> indices;  // d+1 increasing positions

  bool operator==(const DegeneracyWitness& other) const = default;
};

// det of the (d+1) x (d+1) matrix whose rows are [x_i, 1].
ExactInt homogeneous_det(const std::vector<std::vector<ExactInt>>& points);

// Lexicographically smallest degenerate (d+1)-tuple, if any.
// Throws Error(kTooFewPoints) when fewer than d+1 points are given.
std::optional<DegeneracyWitness> degeneracy_bruteforce(const PointSetInstance& inst);

bool is_degeneracy_witness(const PointSetInstance& inst, const DegeneracyWitness& w);

}  // namespace hsdisc
