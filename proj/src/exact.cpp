#include "hsdisc/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace hsdisc {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kZeroDenominator: return "ZeroDenominator";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kEmptyColorClass: return "EmptyColorClass";
    case ErrorCode::kAffinelyDependent: return "AffinelyDependent";
    case ErrorCode::kTooFewValues: return "TooFewValues";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kWrongDimension: return "WrongDimension";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kUnsupportedK: return "UnsupportedK";
    case ErrorCode::kGammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::kNoStraddledPair: return "NoStraddledPair";
    case ErrorCode::kBoundaryThroughPoint: return "BoundaryThroughPoint";
    case ErrorCode::kNonzeroSum: return "NonzeroSum";
    case ErrorCode::kNotDegenerate: return "NotDegenerate";
    case ErrorCode::kInfeasiblePlant: return "InfeasiblePlant";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_text(const ExactScalar& value) { return value.get_str(10); }
std::string to_text(const ExactInt& value) { return value.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

ExactInt parse_int(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (!all_digits(body)) throw Error(ErrorCode::kParse, "malformed integer '" + std::string(text) + "'");
  return ExactInt(std::string(text), 10);
}

ExactScalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactScalar(parse_int(text));
  const ExactInt num = parse_int(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  const ExactInt den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::kZeroDenominator, "zero denominator in '" + std::string(text) + "'");
  ExactScalar q(num, den);
  q.canonicalize();
  return q;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ExactScalar(m(i, j));
  return r;
}

namespace {

template <class T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::kDimensionMismatch, "matrix product shape mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

void require_square(const auto& m) {
  if (!m.square()) throw Error(ErrorCode::kDimensionMismatch, "matrix is not square");
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl(a, b); }
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return multiply_impl(a, b); }

RatVector multiply(const RatMatrix& a, const RatVector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::kDimensionMismatch, "matrix-vector shape mismatch");
  RatVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

ExactInt entry_bound(const IntMatrix& m) {
  ExactInt bound = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const ExactInt a = abs(m(i, j));
      if (a > bound) bound = a;
    }
  return bound;
}

ExactInt det(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  ExactInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExactInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  ExactInt result = a(n - 1, n - 1);
  return sign > 0 ? result : ExactInt(-result);
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m);
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  IntMatrix minor(n - 1, n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // adj(c, r) is the signed minor removing row r and column c.
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      ExactInt cof = det(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : ExactInt(-cof);
    }
  }
  return adj;
}

namespace {

// Reduces [m | rhs] in place; rhs has any number of columns.
void gauss_jordan(RatMatrix& m, RatMatrix& rhs) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      for (std::size_t j = 0; j < rhs.cols(); ++j) std::swap(rhs(k, j), rhs(p, j));
    }
    const ExactScalar inv = 1 / m(k, k);
    for (std::size_t j = 0; j < n; ++j) m(k, j) *= inv;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(k, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const ExactScalar f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(k, j);
    }
  }
}

}  // namespace

RatVector solve(const RatMatrix& m, const RatVector& v) {
  require_square(m);
  if (v.size() != m.rows()) throw Error(ErrorCode::kDimensionMismatch, "rhs length mismatch");
  RatMatrix a = m;
  RatMatrix rhs(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) rhs(i, 0) = v[i];
  gauss_jordan(a, rhs);
  RatVector x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = rhs(i, 0);
  return x;
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m);
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(m.rows());
  gauss_jordan(a, inv);
  return inv;
}

namespace {

ExactInt ipow(const ExactInt& base, unsigned long e) {
  ExactInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

bool hadamard_check(const IntMatrix& m) {
  require_square(m);
  const unsigned long d = m.rows();
  const ExactInt n_bound = entry_bound(m);
  const ExactInt dt = det(m);
  const ExactInt sq = dt * dt;
  const ExactInt bound = ipow(ExactInt(d), d) * ipow(n_bound, 2 * d);
  if (sq > bound) return false;
  return dt == 0 || sq >= 1;
}

RatMatrix sherman_morrison_remainder(const IntMatrix& m, const RatVector& u, const RatVector& v) {
  require_square(m);
  const std::size_t d = m.rows();
  if (u.size() != d || v.size() != d) throw Error(ErrorCode::kDimensionMismatch, "update vector length mismatch");
  const RatMatrix inv = inverse(to_rational(m));
  const RatVector inv_u = multiply(inv, u);
  // row vector v^T M^-1
  RatVector vt_inv(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) vt_inv[j] += v[i] * inv(i, j);
  ExactScalar denom = 1;
  for (std::size_t i = 0; i < d; ++i) denom += v[i] * inv_u[i];
  if (denom == 0) throw Error(ErrorCode::kZeroDenominator, "1 + v^T M^-1 u = 0");
  RatMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = inv_u[i] * vt_inv[j] / denom;
  return out;
}

bool hdet_bound_check(const IntMatrix& m, const RatVector& lambda) {
  require_square(m);
  const std::size_t d = m.rows();
  if (lambda.size() != d) throw Error(ErrorCode::kDimensionMismatch, "lambda length mismatch");
  for (const auto& l : lambda)
    if (abs(l) > 1) throw Error(ErrorCode::kOutOfRange, "lambda coordinate outside [-1, 1]");
  const ExactInt dt = det(m);
  if (dt == 0) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
  // det(M) M^-1 = adj(M), so det(M) (M^-1 lambda) = adj(M) lambda.
  const IntMatrix adj = adjugate(m);
  const ExactInt n_bound = entry_bound(m);
  const ExactInt bound = ipow(ExactInt(static_cast<unsigned long>(d)), d + 1) * ipow(n_bound, 2 * (d - 1));
  for (std::size_t i = 0; i < d; ++i) {
    ExactScalar s = 0;
    for (std::size_t j = 0; j < d; ++j) s += ExactScalar(adj(i, j)) * lambda[j];
    if (s * s > ExactScalar(bound)) return false;
  }
  return true;
}

}  // namespace hsdisc
