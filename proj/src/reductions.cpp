#include "hsdisc/reductions.hpp"

#include <algorithm>

namespace hsdisc {

namespace {

ExactInt ipow(const ExactInt& base, unsigned long e) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

ExactInt as_int(std::size_t v) { return ExactInt(static_cast<unsigned long>(v)); }

Point shifted(Point p, const ExactScalar& delta) {
  p[0] += delta;
  return p;
}

Point to_point(const std::vector<ExactInt>& x) {
  Point p;
  for (const auto& c : x) p.emplace_back(c);
  return p;
}

void require_threshold(const ColoredInstance& inst, const Halfspace& h, std::size_t threshold) {
  if (abs(phi(inst, h)) < as_int(threshold))
    throw Error(ErrorCode::kNoStraddledPair, "halfspace discrepancy is below the recovery threshold");
  for (const auto* set : {&inst.red, &inst.blue})
    for (const auto& p : *set)
      if (side_of(h, p) == 0) throw Error(ErrorCode::kBoundaryThroughPoint, "boundary passes through a reduced point");
}

bool split(const Halfspace& h, const Point& red, const Point& blue) {
  return side_of(h, red) * side_of(h, blue) < 0;
}

}  // namespace

Point gadget_point(const ExactInt& a, std::size_t line, std::size_t d) {
  Point z(d);
  if (line == 0) {
    z[0] = ExactScalar(-a) / ExactScalar(as_int(2 * d) - 3);
  } else if (line < d) {
    z[0] = ExactScalar(a, 2);
    z[0].canonicalize();
    z[line] = 1;
  } else {
    z[0] = -a;
    for (std::size_t k = 1; k < d; ++k) z[k] = 2;
  }
  return z;
}

KSumReduction reduce_ksum(const KSumInstance& src, std::optional<ExactScalar> gamma) {
  if (src.k <= 2) throw Error(ErrorCode::kUnsupportedK, "the construction needs k >= 3");
  const std::size_t d = src.k - 1;
  const ExactScalar limit(1, as_int(4 * d));
  const ExactScalar g = gamma.value_or(ExactScalar(1, as_int(8 * d)));
  if (g <= 0 || g >= limit) throw Error(ErrorCode::kGammaOutOfRange, "gamma must lie in (0, 1/(4d))");

  KSumReduction red;
  red.source = src;
  red.gamma = g;
  red.instance.dim = d;
  for (std::size_t i = 0; i < src.values.size(); ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      const Point z = gadget_point(src.values[i], j, d);
      red.index_map.push_back({i, j, red.instance.red.size(), red.instance.blue.size()});
      red.instance.red.push_back(shifted(z, g));
      red.instance.blue.push_back(shifted(z, -g));
    }
  }
  return red;
}

ExactScalar degeneracy_gamma(std::size_t d, const ExactInt& n_bound) {
  const unsigned long dd = d;
  return ExactScalar(1, 6 * ipow(as_int(d), dd + 2) * ipow(n_bound, 2 * dd));
}

DegeneracyReduction reduce_degeneracy(const PointSetInstance& src) {
  src.validate();
  if (src.points.size() < src.dim + 1) throw Error(ErrorCode::kTooFewPoints, "fewer than d+1 points");
  DegeneracyReduction red;
  red.source = src;
  red.gamma = degeneracy_gamma(src.dim, src.bound());
  red.instance.dim = src.dim;
  for (const auto& x : src.points) {
    const Point p = to_point(x);
    red.instance.red.push_back(shifted(p, red.gamma));
    red.instance.blue.push_back(shifted(p, -red.gamma));
  }
  return red;
}

std::vector<LineCrossing> ksum_crossings(const KSumReduction& red, const Halfspace& h) {
  require_threshold(red.instance, h, red.source.k);
  const std::size_t d = red.instance.dim;
  const auto& w = h.w();
  std::vector<LineCrossing> out;
  for (std::size_t j = 0; j <= d; ++j) {
    std::optional<LineCrossing> pick;
    ExactScalar best_gap;
    for (const auto& slot : red.index_map) {
      if (slot.line != j) continue;
      if (!split(h, red.instance.red[slot.red], red.instance.blue[slot.blue])) continue;
      // A split pair differs only in x_1, so w_1 != 0 here.
      const Point z = gadget_point(red.source.values[slot.source], j, d);
      ExactScalar rest = h.xi();
      for (std::size_t k = 1; k < d; ++k) rest -= w[k] * z[k];
      const ExactScalar beta = rest / w[0];
      const ExactScalar gap = abs(beta - z[0]);
      if (!pick || gap < best_gap) {
        pick = LineCrossing{j, beta, slot.source, z[0]};
        best_gap = gap;
      }
    }
    if (!pick) throw Error(ErrorCode::kNoStraddledPair, "boundary splits no pair on gadget line " + std::to_string(j));
    out.push_back(*pick);
  }
  return out;
}

KSumWitness recover_ksum_witness(const KSumReduction& red, const Halfspace& h) {
  KSumWitness wit;
  for (const auto& c : ksum_crossings(red, h)) wit.indices.push_back(c.source);
  std::sort(wit.indices.begin(), wit.indices.end());
  if (!is_ksum_witness(red.source, wit, KSumMode::kMultiset))
    throw Error(ErrorCode::kNonzeroSum, "recovered values do not sum to zero");
  return wit;
}

DegeneracyCrossing degeneracy_crossing(const DegeneracyReduction& red, const Halfspace& h) {
  const std::size_t d = red.instance.dim;
  require_threshold(red.instance, h, d + 1);
  DegeneracyCrossing out;
  for (std::size_t i = 0; i < red.source.points.size() && out.indices.size() < d + 1; ++i) {
    if (!split(h, red.instance.red[i], red.instance.blue[i])) continue;
    const Point x = to_point(red.source.points[i]);
    ExactScalar s = h.xi();
    for (std::size_t k = 0; k < d; ++k) s -= h.w()[k] * x[k];
    out.indices.push_back(i);
    out.lambda.push_back(s / (red.gamma * h.w()[0]));
  }
  if (out.indices.size() < d + 1) throw Error(ErrorCode::kNoStraddledPair, "fewer than d+1 split pairs");
  return out;
}

DegeneracyWitness recover_degeneracy_witness(const DegeneracyReduction& red, const Halfspace& h) {
  DegeneracyWitness wit{degeneracy_crossing(red, h).indices};
  if (!is_degeneracy_witness(red.source, wit))
    throw Error(ErrorCode::kNotDegenerate, "recovered points are in general position");
  return wit;
}

KSumVerdict verify_equivalence_ksum(const KSumInstance& src, const VerifyOptions& opts) {
  KSumVerdict v;
  v.oracle_witness = ksum_bruteforce(src, opts.mode);
  v.oracle = v.oracle_witness.has_value();
  // Equal values put coincident pairs on a gadget line, and one hyperplane
  // splits all of them. Repeats add nothing once indices may repeat, so the
  // construction gets each value once.
  KSumInstance set{{}, src.k};
  std::vector<std::size_t> first;
  for (std::size_t i = 0; i < src.values.size(); ++i) {
    if (std::find(set.values.begin(), set.values.end(), src.values[i]) != set.values.end()) continue;
    set.values.push_back(src.values[i]);
    first.push_back(i);
  }
  const KSumReduction red = reduce_ksum(set);
  const SolveResult res = max_halfspace_exact(red.instance, {true, opts.threads});
  v.optimum = res.value;
  v.reduced = res.value >= as_int(src.k);
  v.cap_holds = res.value <= as_int(src.k);
  v.agree = v.oracle == v.reduced;
  if (v.reduced) {
    KSumWitness w = recover_ksum_witness(red, res.halfspace);
    for (auto& i : w.indices) i = first[i];
    std::sort(w.indices.begin(), w.indices.end());
    v.witness_valid = is_ksum_witness(src, w, KSumMode::kMultiset);
    v.witness = std::move(w);
  }
  return v;
}

PointSetInstance shear_points(const PointSetInstance& src) {
  src.validate();
  const std::size_t d = src.dim;
  ExactInt fact = 1;
  for (std::size_t i = 2; i < d; ++i) fact *= as_int(i);
  const ExactInt k = fact * ipow(2 * src.bound(), d - 1) + 1;
  PointSetInstance out;
  out.dim = d;
  for (const auto& x : src.points) {
    std::vector<ExactInt> y = x;
    ExactInt factor = 1;
    for (std::size_t j = 1; j < d; ++j) {
      factor *= k;
      y[j] -= factor * x[0];
    }
    out.points.push_back(std::move(y));
  }
  return out;
}

DegeneracyVerdict verify_equivalence_degeneracy(const PointSetInstance& src, const VerifyOptions& opts) {
  DegeneracyVerdict v;
  v.oracle_witness = degeneracy_bruteforce(src);
  v.oracle = v.oracle_witness.has_value();
  v.sheared = opts.shear;
  const DegeneracyReduction red = reduce_degeneracy(opts.shear ? shear_points(src) : src);
  const SolveResult res = max_halfspace_exact(red.instance, {true, opts.threads});
  v.optimum = res.value;
  v.reduced = res.value >= as_int(src.dim + 1);
  v.agree = v.oracle == v.reduced;
  if (v.reduced) {
    v.witness = recover_degeneracy_witness(red, res.halfspace);
    v.witness_valid = is_degeneracy_witness(src, *v.witness);
  }
  return v;
}

}  // namespace hsdisc
