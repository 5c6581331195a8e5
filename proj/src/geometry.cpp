#include "hsdisc/geometry.hpp"

#include <mpfr.h>

#include <algorithm>
#include <limits>

namespace hsdisc {

Halfspace::Halfspace(RatVector w, ExactScalar xi) : w_(std::move(w)), xi_(std::move(xi)) {
  auto it = std::find_if(w_.begin(), w_.end(), [](const ExactScalar& c) { return c != 0; });
  if (it == w_.end()) throw Error(ErrorCode::kInvalidArgument, "halfspace normal must be nonzero");
  const ExactScalar scale = abs(*it);
  if (scale != 1) {
    for (auto& c : w_) c /= scale;
    xi_ /= scale;
  }
}

void ColoredInstance::validate() const {
  if (dim == 0) throw Error(ErrorCode::kDimensionMismatch, "instance dimension must be positive");
  for (const auto* set : {&red, &blue})
    for (const auto& p : *set)
      if (p.size() != dim) throw Error(ErrorCode::kDimensionMismatch, "point length differs from instance dimension");
}

int side_of(const Halfspace& h, const Point& p, QueryCounter& qc) {
  if (p.size() != h.dim()) throw Error(ErrorCode::kDimensionMismatch, "point and halfspace dimensions differ");
  qc.add();
  ExactScalar s = -h.xi();
  for (std::size_t i = 0; i < p.size(); ++i) s += h.w()[i] * p[i];
  return sgn(s);
}

int side_of(const Halfspace& h, const Point& p) {
  QueryCounter qc;
  return side_of(h, p, qc);
}

Membership count_inside(const ColoredInstance& inst, const Halfspace& h, QueryCounter& qc) {
  if (inst.dim != h.dim()) throw Error(ErrorCode::kDimensionMismatch, "instance and halfspace dimensions differ");
  Membership m;
  for (const auto& p : inst.red)
    if (side_of(h, p, qc) >= 0) ++m.red_in;
  for (const auto& p : inst.blue)
    if (side_of(h, p, qc) >= 0) ++m.blue_in;
  return m;
}

ExactInt phi(const ColoredInstance& inst, const Halfspace& h, QueryCounter& qc) {
  const Membership m = count_inside(inst, h, qc);
  return ExactInt(static_cast<unsigned long>(m.red_in)) - ExactInt(static_cast<unsigned long>(m.blue_in));
}

ExactInt phi(const ColoredInstance& inst, const Halfspace& h) {
  QueryCounter qc;
  return phi(inst, h, qc);
}

namespace {

ExactScalar count(std::size_t n) { return ExactScalar(static_cast<unsigned long>(n)); }

void require_both_colors(const ColoredInstance& inst) {
  if (inst.red.empty() || inst.blue.empty())
    throw Error(ErrorCode::kEmptyColorClass, "statistic needs at least one red and one blue point");
}

}  // namespace

ExactScalar psi(const ColoredInstance& inst, const Halfspace& h) {
  if (inst.size() == 0) throw Error(ErrorCode::kEmptyInstance, "psi of an empty instance");
  return (count(inst.red.size()) - ExactScalar(phi(inst, h))) / count(inst.size());
}

ExactScalar phi_parallel(const ColoredInstance& inst, const Halfspace& h) {
  require_both_colors(inst);
  QueryCounter qc;
  const Membership m = count_inside(inst, h, qc);
  return abs(count(m.red_in) / count(inst.red.size()) - count(m.blue_in) / count(inst.blue.size()));
}

ExactScalar phi_alpha(const ColoredInstance& inst, const Halfspace& h, const ExactScalar& alpha, AlphaForm form) {
  if (alpha < 0 || alpha > 1) throw Error(ErrorCode::kOutOfRange, "alpha must lie in [0, 1]");
  QueryCounter qc;
  const Membership m = count_inside(inst, h, qc);
  const ExactScalar blue_term = (1 - alpha) * count(m.blue_in);
  const ExactScalar red_term = alpha * count(m.red_in);
  return form == AlphaForm::kAsPrinted ? ExactScalar(red_term + blue_term) : ExactScalar(red_term - blue_term);
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(unsigned prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

ExactScalar to_exact(mpfr_ptr x) {
  ExactScalar q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// Enclosure of y * log(y / x) for rational 0 < y, 0 < x.
void kl_term(const ExactScalar& y, const ExactScalar& x, unsigned prec, ExactScalar& lo, ExactScalar& hi) {
  const ExactScalar ratio = y / x;
  Mpfr r_lo(prec), r_hi(prec), l_lo(prec), l_hi(prec);
  mpfr_set_q(r_lo.get(), ratio.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r_hi.get(), ratio.get_mpq_t(), MPFR_RNDU);
  mpfr_log(l_lo.get(), r_lo.get(), MPFR_RNDD);
  mpfr_log(l_hi.get(), r_hi.get(), MPFR_RNDU);
  // y >= 0 keeps the interval ordering under multiplication.
  mpfr_mul_q(l_lo.get(), l_lo.get(), y.get_mpq_t(), MPFR_RNDD);
  mpfr_mul_q(l_hi.get(), l_hi.get(), y.get_mpq_t(), MPFR_RNDU);
  lo = to_exact(l_lo.get());
  hi = to_exact(l_hi.get());
}

}  // namespace

PoissonValue bernoulli_kl(const ExactScalar& mu_r, const ExactScalar& mu_b, unsigned precision_bits) {
  if (mu_r < 0 || mu_r > 1 || mu_b < 0 || mu_b > 1)
    throw Error(ErrorCode::kOutOfRange, "fractions must lie in [0, 1]");
  if (precision_bits < 2) throw Error(ErrorCode::kInvalidArgument, "precision too small");
  PoissonValue out;
  const std::pair<ExactScalar, ExactScalar> terms[] = {{mu_r, mu_b}, {1 - mu_r, 1 - mu_b}};
  for (const auto& [y, x] : terms) {
    if (y == 0) continue;
    if (x == 0) {
      out.infinite = true;
      continue;
    }
    ExactScalar lo, hi;
    kl_term(y, x, precision_bits, lo, hi);
    out.lower += lo;
    out.upper += hi;
  }
  if (out.infinite) {
    out.lower = out.upper = 0;
    out.approx = std::numeric_limits<double>::infinity();
  } else {
    out.approx = ExactScalar((out.lower + out.upper) / 2).get_d();
  }
  return out;
}

PoissonValue phi_poisson(const ColoredInstance& inst, const Halfspace& h, unsigned precision_bits) {
  require_both_colors(inst);
  QueryCounter qc;
  const Membership m = count_inside(inst, h, qc);
  return bernoulli_kl(count(m.red_in) / count(inst.red.size()), count(m.blue_in) / count(inst.blue.size()),
                      precision_bits);
}

Halfspace hyperplane_through(const std::vector<Point>& points) {
  const std::size_t d = points.size();
  if (d == 0) throw Error(ErrorCode::kAffinelyDependent, "no points given");
  for (const auto& p : points)
    if (p.size() != d) throw Error(ErrorCode::kDimensionMismatch, "need exactly d points in R^d");

  RatMatrix x(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) x(i, j) = points[i][j];
  try {
    return Halfspace(solve(x, RatVector(d, ExactScalar(1))), ExactScalar(1));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingularMatrix) throw;
  }

  // Null space of the d x (d+1) system [X | -1] (w, xi) = 0 by row reduction.
  const std::size_t cols = d + 1;
  RatMatrix a(d, cols);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a(i, j) = points[i][j];
    a(i, d) = -1;
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < d; ++c) {
    std::size_t p = row;
    while (p < d && a(p, c) == 0) ++p;
    if (p == d) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a(row, j), a(p, j));
    const ExactScalar inv = 1 / a(row, c);
    for (std::size_t j = 0; j < cols; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || a(i, c) == 0) continue;
      const ExactScalar f = a(i, c);
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  if (pivots.size() != d) throw Error(ErrorCode::kAffinelyDependent, "points are affinely dependent");
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  RatVector sol(cols);
  sol[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) sol[pivots[r]] = -a(r, free_col);
  RatVector w(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(d));
  ExactScalar xi = sol[d];
  const auto first = std::find_if(w.begin(), w.end(), [](const ExactScalar& c) { return c != 0; });
  if (first != w.end() && *first < 0) {
    for (auto& c : w) c = -c;
    xi = -xi;
  }
  return Halfspace(std::move(w), std::move(xi));
}

std::optional<ExactScalar> min_first_coordinate(const ColoredInstance& inst) {
  std::optional<ExactScalar> best;
  for (const auto* set : {&inst.red, &inst.blue})
    for (const auto& p : *set)
      if (!best || p[0] < *best) best = p[0];
  return best;
}

std::optional<ExactScalar> max_first_coordinate(const ColoredInstance& inst) {
  std::optional<ExactScalar> best;
  for (const auto* set : {&inst.red, &inst.blue})
    for (const auto& p : *set)
      if (!best || p[0] > *best) best = p[0];
  return best;
}

namespace {

RatVector unit_first(std::size_t dim) {
  RatVector w(dim);
  w[0] = 1;
  return w;
}

}  // namespace

Halfspace all_space(const ColoredInstance& inst) {
  const ExactScalar lo = std::min(ExactScalar(0), min_first_coordinate(inst).value_or(ExactScalar(0)));
  return Halfspace(unit_first(inst.dim), lo - 1);
}

Halfspace empty_space(const ColoredInstance& inst) {
  const ExactScalar hi = std::max(ExactScalar(0), max_first_coordinate(inst).value_or(ExactScalar(0)));
  return Halfspace(unit_first(inst.dim), hi + 1);
}

}  // namespace hsdisc
