#include "hsdisc/solvers.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "hsdisc/rng.hpp"

namespace hsdisc {

SolveResult max_halfspace_1d(const ColoredInstance& inst, bool abs_mode) {
  inst.validate();
  if (inst.dim != 1) throw Error(ErrorCode::kWrongDimension, "sweep needs dim = 1");

  struct Slot {
    std::vector<const Point*> members;
  };
  std::map<ExactScalar, Slot> slots;
  for (const auto& p : inst.red) slots[p[0]].members.push_back(&p);
  for (const auto& p : inst.blue) slots[p[0]].members.push_back(&p);
  std::vector<ExactScalar> xs;
  std::vector<const Slot*> at;
  for (const auto& [x, s] : slots) {
    xs.push_back(x);
    at.push_back(&s);
  }
  const std::size_t m = xs.size();
  const Point* red_begin = inst.red.data();
  const Point* red_end = red_begin + inst.red.size();

  // Threshold i separates positions [0, i) from [i, m).
  auto gap = [&](std::size_t i) -> ExactScalar {
    if (m == 0) return 0;
    if (i == 0) return xs[0] - 1;
    if (i == m) return xs[m - 1] + 1;
    return (xs[i - 1] + xs[i]) / 2;
  };

  QueryCounter qc;
  // upper[i]: weight of positions >= i, lower[i]: weight of positions < i.
  // Each point is classified once per sweep direction as the threshold
  // passes it.
  std::vector<long long> upper(m + 1, 0), lower(m + 1, 0);
  for (std::size_t i = m; i-- > 0;) {
    const Halfspace h(RatVector{1}, gap(i));
    long long w = 0;
    for (const Point* p : at[i]->members)
      if (side_of(h, *p, qc) >= 0) w += (p >= red_begin && p < red_end) ? 1 : -1;
    upper[i] = upper[i + 1] + w;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Halfspace h(RatVector{-1}, -gap(i + 1));
    long long w = 0;
    for (const Point* p : at[i]->members)
      if (side_of(h, *p, qc) >= 0) w += (p >= red_begin && p < red_end) ? 1 : -1;
    lower[i + 1] = lower[i] + w;
  }

  struct Pick {
    long long value;
    int kind;  // 0 all, 1 empty, 2 upward threshold, 3 downward threshold
    std::size_t i;
  };
  std::optional<Pick> plus, minus;
  auto offer = [](std::optional<Pick>& best, const Pick& p) {
    if (!best || p.value > best->value) best = p;
  };
  const long long total = upper[0];
  std::uint64_t candidates = 2;
  offer(plus, {total, 0, 0});
  offer(minus, {-total, 0, 0});
  offer(plus, {0, 1, 0});
  offer(minus, {0, 1, 0});
  for (std::size_t i = 1; i < m; ++i, ++candidates) {
    offer(plus, {upper[i], 2, i});
    offer(minus, {-upper[i], 2, i});
  }
  for (std::size_t i = 1; i < m; ++i, ++candidates) {
    offer(plus, {lower[i], 3, i});
    offer(minus, {-lower[i], 3, i});
  }
  const bool swapped = abs_mode && minus->value > plus->value;
  const Pick& best = swapped ? *minus : *plus;
  auto realize = [&]() -> Halfspace {
    switch (best.kind) {
      case 0: return all_space(inst);
      case 1: return empty_space(inst);
      case 2: return Halfspace(RatVector{1}, gap(best.i));
      default: return Halfspace(RatVector{-1}, -gap(best.i));
    }
  };
  SolveResult res{realize(), ExactInt(static_cast<long>(best.value)), qc.count(), abs_mode, swapped, {}};
  res.stats = {inst.size(), 1, candidates};
  return res;
}

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

ExactInt ceil_of(const ExactScalar& q) {
  ExactInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

std::uint64_t approx_sample_size(const ApproxParams& params, std::size_t d) {
  if (params.epsilon <= 0 || params.epsilon >= 1) throw Error(ErrorCode::kOutOfRange, "epsilon must lie in (0, 1)");
  if (params.delta <= 0 || params.delta >= 1) throw Error(ErrorCode::kOutOfRange, "delta must lie in (0, 1)");
  if (params.c <= 0) throw Error(ErrorCode::kOutOfRange, "sample constant must be positive");
  const ExactScalar inv_delta = 1 / params.delta;
  const ExactScalar scale = params.c / (params.epsilon * params.epsilon);
  // ln(1/delta) is irrational, so the enclosure eventually fixes the ceiling.
  for (mpfr_prec_t prec = 64; prec <= 1 << 14; prec *= 2) {
    Mpfr lo(prec), hi(prec);
    mpfr_set_q(lo.get(), inv_delta.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi.get(), inv_delta.get_mpq_t(), MPFR_RNDU);
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    ExactScalar ln_lo, ln_hi;
    mpfr_get_q(ln_lo.get_mpq_t(), lo.get());
    mpfr_get_q(ln_hi.get_mpq_t(), hi.get());
    const ExactInt m_lo = ceil_of(scale * (ExactScalar(static_cast<unsigned long>(d)) + ln_lo));
    const ExactInt m_hi = ceil_of(scale * (ExactScalar(static_cast<unsigned long>(d)) + ln_hi));
    if (m_lo == m_hi) {
      if (!m_lo.fits_ulong_p()) throw Error(ErrorCode::kTooLarge, "sample size does not fit 64 bits");
      return m_lo.get_ui();
    }
  }
  throw Error(ErrorCode::kOutOfRange, "could not resolve the sample size");
}

SolveResult max_halfspace_approx(const ColoredInstance& inst, const ApproxParams& params, const ExactOptions& opts) {
  inst.validate();
  const std::uint64_t m = approx_sample_size(params, inst.dim);
  SplitMix64 rng(params.seed);
  auto draw = [&](std::size_t size, std::uint64_t& taken) {
    std::vector<std::uint64_t> counts(size, 0);
    if (m >= size) {
      std::fill(counts.begin(), counts.end(), 1);
      taken = size;
    } else {
      for (std::uint64_t t = 0; t < m; ++t) ++counts[rng.uniform(size)];
      taken = m;
    }
    return counts;
  };
  std::uint64_t s_red = 0, s_blue = 0;
  const auto red_counts = draw(inst.red.size(), s_red);
  const auto blue_counts = draw(inst.blue.size(), s_blue);

  // Sample weights |R|/s_R and -|B|/s_B, cleared of denominators.
  const ExactInt red_unit = ExactInt(static_cast<unsigned long>(inst.red.size())) * std::max<std::uint64_t>(s_blue, 1);
  const ExactInt blue_unit = ExactInt(static_cast<unsigned long>(inst.blue.size())) * std::max<std::uint64_t>(s_red, 1);
  WeightedPoints cloud;
  cloud.dim = inst.dim;
  auto add = [&](const std::vector<Point>& pts, const std::vector<std::uint64_t>& counts, const ExactInt& unit,
                 int sign) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (counts[i] == 0) continue;
      const ExactInt w = unit * ExactInt(static_cast<unsigned long>(counts[i]));
      if (!w.fits_slong_p()) throw Error(ErrorCode::kTooLarge, "sample weight overflows");
      cloud.points.push_back(pts[i]);
      cloud.weights.push_back(sign * static_cast<std::int64_t>(w.get_si()));
    }
  };
  add(inst.red, red_counts, red_unit, 1);
  add(inst.blue, blue_counts, blue_unit, -1);

  SolveResult res = max_weight_halfspace(cloud, opts);
  QueryCounter qc;
  qc.add(res.queries);
  const ExactInt achieved = phi(inst, res.halfspace, qc);
  res.value = res.swapped ? ExactInt(-achieved) : achieved;
  res.queries = qc.count();
  res.stats.n = inst.size();
  return res;
}

QueryReport query_report(const SolveResult& result) {
  return {result.stats.n, result.stats.d, result.queries, result.stats.candidates};
}

}  // namespace hsdisc
