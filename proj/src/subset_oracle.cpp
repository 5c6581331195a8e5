// Independent MaxHalfspace oracle: every subset T of the points is tested for
// T = h n P by Fourier-Motzkin elimination over the unknowns (w, xi).

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hsdisc/solvers.hpp"

namespace hsdisc {

namespace {

// a . x + b >= 0 over the unknowns x = (w_1..w_d, xi); `origin` records the
// input constraints combined into this one.
struct Row {
  std::vector<ExactInt> a;
  ExactInt b;
  std::uint64_t origin = 0;
};

void reduce(Row& r) {
  ExactInt g = abs(r.b);
  for (const auto& x : r.a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : r.a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(r.b.get_mpz_t(), r.b.get_mpz_t(), g.get_mpz_t());
  }
}

// Feasible (w, xi) for the integer system, or nullopt.
std::optional<RatVector> fourier_motzkin(std::vector<Row> rows, std::size_t vars) {
  // Eliminate xi first: every row has coefficient +-1 on it.
  std::vector<std::size_t> order{vars - 1};
  for (std::size_t v = 0; v + 1 < vars; ++v) order.push_back(v);

  std::vector<std::vector<Row>> stages;
  for (std::size_t step = 0; step < order.size(); ++step) {
    const std::size_t v = order[step];
    stages.push_back(rows);
    std::vector<Row> next, lower, upper;
    for (auto& r : rows) {
      const int s = sgn(r.a[v]);
      if (s > 0)
        lower.push_back(r);
      else if (s < 0)
        upper.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const std::uint64_t origin = lo.origin | up.origin;
        // Chernikov: after eliminating step+1 unknowns a row built from more
        // than step+2 inputs is implied by the others.
        if (static_cast<std::size_t>(std::popcount(origin)) > step + 2) continue;
        Row r;
        r.a.resize(vars);
        const ExactInt cl = -up.a[v];
        const ExactInt cu = lo.a[v];
        for (std::size_t k = 0; k < vars; ++k) r.a[k] = cl * lo.a[k] + cu * up.a[k];
        r.b = cl * lo.b + cu * up.b;
        r.origin = origin;
        reduce(r);
        next.push_back(std::move(r));
      }
    }
    rows.clear();
    for (auto& r : next) {
      if (std::all_of(r.a.begin(), r.a.end(), [](const ExactInt& x) { return x == 0; })) {
        if (r.b < 0) return std::nullopt;
        continue;
      }
      rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
      if (x.a != y.a) return x.a < y.a;
      if (x.b != y.b) return x.b < y.b;
      return std::popcount(x.origin) < std::popcount(y.origin);
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const Row& x, const Row& y) { return x.a == y.a && x.b == y.b; }),
               rows.end());
  }

  // Back substitution, last eliminated unknown first.
  RatVector x(vars);
  for (std::size_t step = order.size(); step-- > 0;) {
    const std::size_t v = order[step];
    std::optional<ExactScalar> lo, hi;
    for (const auto& r : stages[step]) {
      if (r.a[v] == 0) continue;
      ExactScalar rest = r.b;
      for (std::size_t k = 0; k < vars; ++k)
        if (k != v) rest += ExactScalar(r.a[k]) * x[k];
      const ExactScalar bound = -rest / ExactScalar(r.a[v]);
      if (r.a[v] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      x[v] = (*lo + *hi) / 2;
    else if (lo)
      x[v] = *lo;
    else if (hi)
      x[v] = *hi;
    else
      x[v] = 0;
  }
  return x;
}

}  // namespace

SolveResult realizable_subset_oracle(const ColoredInstance& inst, bool abs_mode, std::size_t max_points) {
  inst.validate();
  const std::size_t n = inst.size();
  const std::size_t d = inst.dim;
  if (n > max_points || n > 40 || d > 4) throw Error(ErrorCode::kTooLarge, "instance too large for subset enumeration");

  std::vector<const Point*> pts;
  std::vector<int> weight;
  for (const auto& p : inst.red) {
    pts.push_back(&p);
    weight.push_back(1);
  }
  for (const auto& p : inst.blue) {
    pts.push_back(&p);
    weight.push_back(-1);
  }

  // Integer constraint rows for "p inside" (<w,p> - xi >= 0); "p outside"
  // is its negation minus one.
  std::vector<Row> inside(n);
  for (std::size_t i = 0; i < n; ++i) {
    ExactInt den = 1;
    for (const auto& c : *pts[i]) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    Row r;
    for (const auto& c : *pts[i]) r.a.push_back(ExactInt(c.get_num() * (den / c.get_den())));
    r.a.push_back(-den);
    r.b = 0;
    r.origin = std::uint64_t{1} << i;
    inside[i] = std::move(r);
  }

  const std::uint64_t full = (n == 0) ? 0 : ((std::uint64_t{1} << n) - 1);
  struct Cand {
    long long value;
    std::uint64_t mask;
    int sign;
  };
  std::vector<Cand> cands;
  for (std::uint64_t mask = 0;; ++mask) {
    long long v = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) v += weight[i];
    cands.push_back({v, mask, 1});
    if (abs_mode) cands.push_back({-v, mask, -1});
    if (mask == full) break;
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    if (x.value != y.value) return x.value > y.value;
    if (x.mask != y.mask) return x.mask < y.mask;
    return x.sign > y.sign;
  });

  std::uint64_t tested = 0;
  for (const auto& cand : cands) {
    ++tested;
    std::optional<Halfspace> h;
    if (cand.mask == full) {
      h = all_space(inst);
    } else if (cand.mask == 0) {
      h = empty_space(inst);
    } else {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < n; ++i) {
        Row r = inside[i];
        if (!(cand.mask >> i & 1)) {
          for (auto& x : r.a) x = -x;
          r.b = -1;
        }
        rows.push_back(std::move(r));
      }
      const auto sol = fourier_motzkin(std::move(rows), d + 1);
      if (!sol) continue;
      h = Halfspace(RatVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d)), (*sol)[d]);
    }
    QueryCounter qc;
    const ExactInt achieved = phi(inst, *h, qc);
    if (achieved != ExactInt(static_cast<long>(cand.sign * cand.value)))
      throw std::logic_error("subset oracle: realized halfspace does not match the subset");
    SolveResult res{*h, ExactInt(static_cast<long>(cand.value)), qc.count(), abs_mode, cand.sign < 0, {}};
    res.stats = {n, d, tested};
    return res;
  }
  throw std::logic_error("subset oracle: no realizable subset");
}

}  // namespace hsdisc
