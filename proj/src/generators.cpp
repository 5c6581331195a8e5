#include "hsdisc/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hsdisc/rng.hpp"

namespace hsdisc {

namespace {

constexpr int kAttempts = 10000;

template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.uniform(i)]);
}

}  // namespace

KSumInstance gen_ksum(const GenSpec& spec) {
  const std::size_t k = spec.k_or_d;
  if (k < 3 || spec.n < k) throw Error(ErrorCode::kInvalidArgument, "need n >= k >= 3");
  if (spec.bound < 1) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  const std::int64_t b = spec.bound;
  if (spec.distinct && static_cast<std::uint64_t>(2 * b + 1) < spec.n)
    throw Error(ErrorCode::kInfeasiblePlant, "too few distinct values in range");
  SplitMix64 rng(spec.seed);

  std::vector<std::int64_t> values;
  std::set<std::int64_t> used;
  if (spec.planted) {
    bool ok = false;
    for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
      values.clear();
      used.clear();
      std::int64_t sum = 0;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        const std::int64_t v = rng.range(-b, b);
        values.push_back(v);
        used.insert(v);
        sum += v;
      }
      const std::int64_t last = -sum;
      ok = last >= -b && last <= b && (!spec.distinct || (used.size() == k - 1 && !used.count(last)));
      if (ok) {
        values.push_back(last);
        used.insert(last);
      }
    }
    if (!ok) throw Error(ErrorCode::kInfeasiblePlant, "could not plant a zero-sum tuple within the bound");
  }
  while (values.size() < spec.n) {
    const std::int64_t v = rng.range(-b, b);
    if (spec.distinct && used.count(v)) continue;
    values.push_back(v);
    used.insert(v);
  }
  shuffle(values, rng);

  KSumInstance inst;
  inst.k = k;
  for (auto v : values) inst.values.emplace_back(static_cast<long>(v));
  if (spec.planted && !ksum_mitm(inst, KSumMode::kDistinct))
    throw std::logic_error("planted k-Sum instance has no witness");
  return inst;
}

PointSetInstance gen_points(const GenSpec& spec) {
  const std::size_t d = spec.k_or_d;
  if (d < 1 || spec.n < d + 1) throw Error(ErrorCode::kInvalidArgument, "need n >= d+1");
  if (spec.bound < 1) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  const std::int64_t b = spec.bound;
  SplitMix64 rng(spec.seed);
  auto random_point = [&] {
    std::vector<std::int64_t> p(d);
    for (auto& c : p) c = rng.range(-b, b);
    return p;
  };

  std::vector<std::vector<std::int64_t>> pts;
  if (spec.planted) {
    bool ok = false;
    for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
      pts.clear();
      for (std::size_t i = 0; i < d; ++i) pts.push_back(random_point());
      // Integer coefficients summing to one.
      std::vector<std::int64_t> coef(d);
      std::int64_t rest = 1;
      for (std::size_t i = 0; i + 1 < d; ++i) {
        coef[i] = rng.range(-2, 2);
        rest -= coef[i];
      }
      coef[d - 1] = rest;
      std::vector<std::int64_t> q(d, 0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < d; ++c) q[c] += coef[i] * pts[i][c];
      ok = std::all_of(q.begin(), q.end(), [&](std::int64_t c) { return c >= -b && c <= b; });
      if (ok) pts.push_back(q);
    }
    if (!ok) throw Error(ErrorCode::kInfeasiblePlant, "could not plant a degenerate tuple within the bound");
  }
  while (pts.size() < spec.n) pts.push_back(random_point());
  shuffle(pts, rng);

  PointSetInstance inst;
  inst.dim = d;
  for (const auto& p : pts) {
    std::vector<ExactInt> row;
    for (auto c : p) row.emplace_back(static_cast<long>(c));
    inst.points.push_back(std::move(row));
  }
  if (spec.planted && !degeneracy_bruteforce(inst)) throw std::logic_error("planted point set is not degenerate");
  return inst;
}

ColoredInstance gen_colored(std::size_t n, std::size_t d, std::int64_t bound, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ColoredInstance inst;
  inst.dim = d;
  for (std::size_t i = 0; i < n; ++i) {
    Point p(d);
    for (auto& c : p) c = ExactScalar(static_cast<long>(rng.range(-bound, bound)));
    (rng.next() & 1 ? inst.red : inst.blue).push_back(std::move(p));
  }
  return inst;
}

}  // namespace hsdisc
