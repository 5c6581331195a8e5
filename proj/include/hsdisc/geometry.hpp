#pragma once

// Points, closed halfspaces, two-colored instances, and the discrepancy
// statistics evaluated on them. Every point/halfspace classification goes
// through side_of so that QueryCounter totals bound the classification work.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hsdisc/exact.hpp"

namespace hsdisc {

using Point = RatVector;

// Accumulator for sidedness queries. Counters from separate workers merge
// by summation.
class QueryCounter {
 public:
  void add(std::uint64_t n = 1) { count_ += n; }
  void merge(const QueryCounter& other) { count_ += other.count_; }
  std::uint64_t count() const { return count_; }

 private:
  std::uint64_t count_ = 0;
};

// {x : <w, x> - xi >= 0}. Always stored canonically: (w, xi) is divided by
// the absolute value of the first nonzero coordinate of w, so that
// coordinate is +1 or -1. Positive rescalings of the same halfspace compare
// equal.
class Halfspace {
 public:
  // Throws Error(kInvalidArgument) when w is zero or empty.
  Halfspace(RatVector w, ExactScalar xi);

  const RatVector& w() const { return w_; }
  const ExactScalar& xi() const { return xi_; }
  std::size_t dim() const { return w_.size(); }

  bool operator==(const Halfspace& other) const = default;

 private:
  RatVector w_;
  ExactScalar xi_;
};

struct ColoredInstance {
  std::size_t dim = 1;
  std::vector<Point> red;
  std::vector<Point> blue;

  std::size_t size() const { return red.size() + blue.size(); }
  // Throws Error(kDimensionMismatch) if some point has the wrong length.
  void validate() const;

  bool operator==(const ColoredInstance& other) const = default;
};

// sign(<w, p> - xi) in {-1, 0, +1}; adds exactly one query.
int side_of(const Halfspace& h, const Point& p, QueryCounter& qc);
int side_of(const Halfspace& h, const Point& p);

struct Membership {
  std::uint64_t red_in = 0;
  std::uint64_t blue_in = 0;
};

// Closed membership counts (side_of >= 0), multiplicities respected.
Membership count_inside(const ColoredInstance& inst, const Halfspace& h, QueryCounter& qc);

// |h n R| - |h n B|.
ExactInt phi(const ColoredInstance& inst, const Halfspace& h, QueryCounter& qc);
ExactInt phi(const ColoredInstance& inst, const Halfspace& h);

// Misclassification fraction (|R| - phi(h)) / n. Throws Error(kEmptyInstance).
ExactScalar psi(const ColoredInstance& inst, const Halfspace& h);

// |mu_R(h) - mu_B(h)|. Throws Error(kEmptyColorClass).
ExactScalar phi_parallel(const ColoredInstance& inst, const Halfspace& h);

enum class AlphaForm {
  kAsPrinted,  // alpha |h n R| + (1 - alpha) |h n B|
  kSigned,     // alpha |h n R| - (1 - alpha) |h n B|
};

// Throws Error(kOutOfRange) unless 0 <= alpha <= 1.
ExactScalar phi_alpha(const ColoredInstance& inst, const Halfspace& h, const ExactScalar& alpha,
                      AlphaForm form = AlphaForm::kAsPrinted);

// Certified enclosure of the Bernoulli KL divergence
//   mu_R log(mu_R / mu_B) + (1 - mu_R) log((1 - mu_R) / (1 - mu_B)).
// lower <= true value <= upper; both bounds are dyadic rationals.
struct PoissonValue {
  bool infinite = false;
  ExactScalar lower;
  ExactScalar upper;
  double approx = 0.0;
};

// Evaluates the divergence for given fractions. Conventions: 0 log(0/x) = 0,
// y log(y/0) = +infinity for y > 0. `precision_bits` is the working precision
// of the logarithms.
PoissonValue bernoulli_kl(const ExactScalar& mu_r, const ExactScalar& mu_b, unsigned precision_bits = 64);

// Throws Error(kEmptyColorClass).
PoissonValue phi_poisson(const ColoredInstance& inst, const Halfspace& h, unsigned precision_bits = 64);

// Hyperplane through d affinely independent points of R^d. With an
// invertible coordinate matrix X the normal is X^-1 1 and xi = 1; hyperplanes
// through the origin come from the null vector of [X | -1].
// Throws Error(kAffinelyDependent).
Halfspace hyperplane_through(const std::vector<Point>& points);

// Smallest / largest first coordinate over both colors (nullopt when empty).
std::optional<ExactScalar> min_first_coordinate(const ColoredInstance& inst);
std::optional<ExactScalar> max_first_coordinate(const ColoredInstance& inst);

// Halfspaces containing every point / no point of inst, with w = e_1.
Halfspace all_space(const ColoredInstance& inst);
Halfspace empty_space(const ColoredInstance& inst);

}  // namespace hsdisc
