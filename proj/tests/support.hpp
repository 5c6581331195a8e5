#pragma once

// Independent oracles and small builders shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <vector>

#include "hsdisc/exact.hpp"
#include "hsdisc/geometry.hpp"
#include "hsdisc/rng.hpp"

namespace hsdisc::test {

inline ExactScalar q(long p, long d = 1) {
  ExactScalar r(p, d);
  r.canonicalize();
  return r;
}

inline Point pt(std::initializer_list<ExactScalar> c) { return Point(c); }

inline IntMatrix random_int_matrix(SplitMix64& rng, std::size_t d, long n_bound) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = rng.range(-n_bound, n_bound);
  return m;
}

// Sum over permutations with explicit sign.
inline ExactInt leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ExactInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline IntMatrix leibniz_adjugate(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c)
          if (c != i) minor(mr, mc++) = m(r, c);
        ++mr;
      }
      const ExactInt cof = leibniz_det(minor);
      adj(i, j) = (i + j) % 2 ? ExactInt(-cof) : cof;
    }
  return adj;
}

// Inverse through the adjugate formula, independent of elimination.
inline RatMatrix cramer_inverse(const IntMatrix& m) {
  const ExactInt det = leibniz_det(m);
  const IntMatrix adj = leibniz_adjugate(m);
  RatMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inv(i, j) = ExactScalar(adj(i, j), det);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) inv(i, j).canonicalize();
  return inv;
}

// Membership count by direct arithmetic, no side_of.
inline long direct_phi(const ColoredInstance& inst, const RatVector& w, const ExactScalar& xi) {
  auto inside = [&](const Point& p) {
    ExactScalar s = 0;
    for (std::size_t k = 0; k < p.size(); ++k) s += w[k] * p[k];
    return s >= xi;
  };
  long v = 0;
  for (const auto& p : inst.red) v += inside(p);
  for (const auto& p : inst.blue) v -= inside(p);
  return v;
}

}  // namespace hsdisc::test
