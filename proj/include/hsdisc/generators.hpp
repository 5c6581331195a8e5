#pragma once

// Seeded instance generators. The same spec always yields the same instance.

#include <cstddef>
#include <cstdint>

#include "hsdisc/base_problems.hpp"
#include "hsdisc/geometry.hpp"

namespace hsdisc {

struct GenSpec {
  std::size_t n = 8;
  std::size_t k_or_d = 3;   // k for k-Sum, d for point sets
  std::int64_t bound = 9;   // values / coordinates drawn from [-bound, bound]
  bool planted = false;
  std::uint64_t seed = 0;
  bool distinct = true;     // k-Sum only: pairwise distinct values
};

// Planted instances hold a zero-sum k-tuple of distinct positions (and
// distinct values when spec.distinct). Throws Error(kInfeasiblePlant) if the
// bound leaves no room, Error(kInvalidArgument) unless n >= k >= 3.
KSumInstance gen_ksum(const GenSpec& spec);

// Planted instances hold d+1 points, one an integer affine combination of
// the others. N is left to be derived from the points.
// Throws Error(kInfeasiblePlant), Error(kInvalidArgument) unless n >= d+1.
PointSetInstance gen_points(const GenSpec& spec);

// n points with integer coordinates in [-bound, bound], each colored by a
// fair coin.
ColoredInstance gen_colored(std::size_t n, std::size_t d, std::int64_t bound, std::uint64_t seed);

}  // namespace hsdisc
