#pragma once

// Exact integer/rational arithmetic and small dense linear algebra.
//
// ExactInt and ExactScalar are GMP values; ExactScalar is always kept in
// canonical form (positive denominator, reduced). Matrices are plain
// row-major grids; all routines are pure and never round.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "hsdisc/error.hpp"

namespace hsdisc {

using ExactInt = mpz_class;
using ExactScalar = mpq_class;
using RatVector = std::vector<ExactScalar>;

// Canonical text encoding: "p" when the denominator is 1, else "p/q" with
// q > 0 and gcd(|p|, q) = 1.
std::string to_text(const ExactScalar& value);
std::string to_text(const ExactInt& value);

// Accepts [-]digits[/digits]; the result is canonicalized. Throws
// Error(kParse) on malformed text and Error(kZeroDenominator) on "p/0".
ExactScalar parse_scalar(std::string_view text);
ExactInt parse_int(std::string_view text);

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
    for (const auto& v : row) data_.push_back(v);
  }
}

using IntMatrix = Matrix<ExactInt>;
using RatMatrix = Matrix<ExactScalar>;

RatMatrix to_rational(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
RatVector multiply(const RatMatrix& a, const RatVector& v);

// max(1, max |entry|): the N of Z_N^{d x d}.
ExactInt entry_bound(const IntMatrix& m);

// Fraction-free (Bareiss) elimination with row swaps.
ExactInt det(const IntMatrix& m);

// adj(M)_{i,j} = (-1)^{i+j} det(M without row j and column i). The 1x1
// adjugate is [[1]], so M * adj(M) = det(M) * I holds for every square M.
IntMatrix adjugate(const IntMatrix& m);

// Exact Gauss-Jordan. Throws Error(kSingularMatrix).
RatVector solve(const RatMatrix& m, const RatVector& v);
RatMatrix inverse(const RatMatrix& m);

// det(M)^2 <= d^d N^{2d}, and det(M)^2 >= 1 whenever M is invertible.
bool hadamard_check(const IntMatrix& m);

// (M^-1 u v^T M^-1) / (1 + v^T M^-1 u).
// Throws Error(kSingularMatrix) or Error(kZeroDenominator).
RatMatrix sherman_morrison_remainder(const IntMatrix& m, const RatVector& u, const RatVector& v);

// For every i: (det(M) (M^-1 lambda)_i)^2 <= d^{d+1} N^{2(d-1)}.
// Requires |lambda_i| <= 1 (Error(kOutOfRange)) and invertible M.
bool hdet_bound_check(const IntMatrix& m, const RatVector& lambda);

}  // namespace hsdisc
