#pragma once

// MaxHalfspace solvers: an exact recursive contact-hyperplane enumeration,
// two independent oracles (1-d sweep, subset realizability) and a sampling
// eps-approximation. All sidedness work is counted.

#include <cstddef>
#include <cstdint>

#include "hsdisc/geometry.hpp"

namespace hsdisc {

struct SolveStats {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t candidates = 0;  // contact hyperplanes (or thresholds / subsets) examined
};

struct SolveResult {
  Halfspace halfspace;
  ExactInt value;
  std::uint64_t queries = 0;
  bool abs_mode = false;
  bool swapped = false;  // abs mode picked the coloring with R and B exchanged
  SolveStats stats;
};

struct ExactOptions {
  bool abs_mode = false;
  unsigned threads = 1;
};

// Maximum of phi over all closed halfspaces (of max(phi, -phi) in abs mode).
// Ties between optimal halfspaces are broken by enumeration order: all-space,
// empty, then contact hyperplanes in increasing canonical key order with the
// positive orientation first. The result does not depend on `threads`.
SolveResult max_halfspace_exact(const ColoredInstance& inst, const ExactOptions& opts = {});

// Threshold sweep for dim = 1. Throws Error(kWrongDimension).
SolveResult max_halfspace_1d(const ColoredInstance& inst, bool abs_mode = false);

// Brute force over all 2^n subsets with a Fourier-Motzkin feasibility test.
// Throws Error(kTooLarge) if n > max_points or dim > 4.
SolveResult realizable_subset_oracle(const ColoredInstance& inst, bool abs_mode = false,
                                     std::size_t max_points = 12);

struct ApproxParams {
  ExactScalar epsilon{1, 10};
  ExactScalar delta{1, 10};
  std::uint64_t seed = 0;
  ExactScalar c{4};
};

// ceil(c (d + ln(1/delta)) / epsilon^2). Throws Error(kOutOfRange) unless
// epsilon, delta are in (0, 1) and c > 0.
std::uint64_t approx_sample_size(const ApproxParams& params, std::size_t d);

// Samples each color class with replacement (whole class when the sample
// would be at least as large), solves the reweighted sample exactly and
// reports the value of that halfspace on the full instance.
SolveResult max_halfspace_approx(const ColoredInstance& inst, const ApproxParams& params,
                                 const ExactOptions& opts = {});

struct QueryReport {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  std::uint64_t queries = 0;
  std::uint64_t candidates = 0;
};

QueryReport query_report(const SolveResult& result);

// Exact solver on integer-weighted points. Exposed for the sampling solver
// and tests; value is the maximum total weight inside a closed halfspace.
struct WeightedPoints {
  std::size_t dim = 1;
  std::vector<Point> points;
  std::vector<std::int64_t> weights;
};

SolveResult max_weight_halfspace(const WeightedPoints& cloud, const ExactOptions& opts = {});

}  // namespace hsdisc
