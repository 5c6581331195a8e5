#pragma once

// k-Sum -> MaxHalfspace and AffineDegeneracy -> MaxHalfspace, the maps back
// from a high-discrepancy halfspace to a source witness, and end-to-end
// verifiers that compare each side against its brute-force oracle.

#include <cstddef>
#include <optional>
#include <vector>

#include "hsdisc/base_problems.hpp"
#include "hsdisc/geometry.hpp"
#include "hsdisc/solvers.hpp"

namespace hsdisc {

struct GadgetSlot {
  std::size_t source = 0;  // i, index into the source values
  std::size_t line = 0;    // j in 0..d
  std::size_t red = 0;     // position in instance.red
  std::size_t blue = 0;    // position in instance.blue
};

struct KSumReduction {
  ColoredInstance instance;
  ExactScalar gamma;
  std::vector<GadgetSlot> index_map;
  KSumInstance source;
};

// z_{i,j}: the unshifted gadget point for value a on line j of a d-dim
// construction.
Point gadget_point(const ExactInt& a, std::size_t line, std::size_t d);

// Throws Error(kUnsupportedK) for k <= 2 and Error(kGammaOutOfRange) unless
// 0 < gamma < 1/(4d). Default gamma is 1/(8d).
KSumReduction reduce_ksum(const KSumInstance& src, std::optional<ExactScalar> gamma = std::nullopt);

struct DegeneracyReduction {
  ColoredInstance instance;  // red[i] = x_i + gamma e_1, blue[i] = x_i - gamma e_1
  ExactScalar gamma;
  PointSetInstance source;
};

// gamma = 1 / (6 d^(d+2) N^(2d)).
ExactScalar degeneracy_gamma(std::size_t d, const ExactInt& n_bound);

// Throws Error(kTooFewPoints) when fewer than d+1 points are given.
DegeneracyReduction reduce_degeneracy(const PointSetInstance& src);

// Where the boundary of h meets gadget line j, and which source pair it
// splits there.
struct LineCrossing {
  std::size_t line = 0;
  ExactScalar beta;           // first coordinate of the crossing
  std::size_t source = 0;     // i_j
  ExactScalar alpha;          // first coordinate of z_{i_j, j}
};

// Throws Error(kNoStraddledPair) if some line has no split pair (or h has
// abs-discrepancy below k), Error(kBoundaryThroughPoint) if the boundary
// contains a reduced point.
std::vector<LineCrossing> ksum_crossings(const KSumReduction& red, const Halfspace& h);

// Sorted source indices of the split pairs; Error(kNonzeroSum) if their
// values do not sum to zero.
KSumWitness recover_ksum_witness(const KSumReduction& red, const Halfspace& h);

struct DegeneracyCrossing {
  std::vector<std::size_t> indices;  // d+1 split pairs, increasing
  std::vector<ExactScalar> lambda;   // x_i + lambda_i gamma e_1 lies on the boundary
};

DegeneracyCrossing degeneracy_crossing(const DegeneracyReduction& red, const Halfspace& h);

// Error(kNotDegenerate) if the recovered points have nonzero homogeneous
// determinant.
DegeneracyWitness recover_degeneracy_witness(const DegeneracyReduction& red, const Halfspace& h);

struct KSumVerdict {
  bool oracle = false;
  bool reduced = false;
  bool agree = false;
  ExactInt optimum;  // abs-optimum of the reduced instance
  bool cap_holds = false;  // optimum <= k
  std::optional<KSumWitness> oracle_witness;
  std::optional<KSumWitness> witness;  // recovered from the solver optimum
  bool witness_valid = false;
};

struct VerifyOptions {
  KSumMode mode = KSumMode::kMultiset;
  unsigned threads = 1;
  // Degeneracy only: shear the source first so that no degenerate tuple's
  // affine hull is parallel to e_1.
  bool shear = true;
};

// The construction is applied to the distinct values of src; a recovered
// witness is reported with first-occurrence indices.
KSumVerdict verify_equivalence_ksum(const KSumInstance& src, const VerifyOptions& opts = {});

struct DegeneracyVerdict {
  bool oracle = false;
  bool reduced = false;
  bool agree = false;
  ExactInt optimum;
  bool sheared = false;
  std::optional<DegeneracyWitness> oracle_witness;
  std::optional<DegeneracyWitness> witness;
  bool witness_valid = false;
};

// The unimodular shear x_j -> x_j - K^(j-1) x_1 (j >= 2) with K larger than
// every cofactor of a (d-1)-point difference matrix of the source.
PointSetInstance shear_points(const PointSetInstance& src);

DegeneracyVerdict verify_equivalence_degeneracy(const PointSetInstance& src, const VerifyOptions& opts = {});

}  // namespace hsdisc
