#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "jmg/error.hpp"

namespace jmg {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Complex& x) { return x == Complex{}; }
inline Rational conj_scalar(const Rational& x) { return x; }
inline Complex conj_scalar(const Complex& x) { return std::conj(x); }

/**
 * Dense row-major matrix over an exact (Rational) or floating (Complex)
 * scalar. 0×0 matrices are legal values.
 *
 * Products skip zero entries of both operands, so the block-diagonal and
 * rank-one operators built by the realizer multiply in time proportional
 * to their nonzeros rather than n³ GMP operations.
 */
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!jmg::is_zero(x)) return false;
    return true;
  }

  /// Conjugate transpose (plain transpose in the rational regime).
  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj_scalar((*this)(r, c));
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    // Nonzero column indices of each row of b; realizations are mostly zeros.
    std::vector<std::vector<std::size_t>> b_nonzero(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!jmg::is_zero(b(k, j))) b_nonzero[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (jmg::is_zero(aik)) continue;
        for (std::size_t j : b_nonzero[k]) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using ComplexMatrix = Matrix<Complex>;
using RationalVector = std::vector<Rational>;

/// ab − ba. Both operands must be square of equal size.
template <typename T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("commutator: operands must be square of equal size");
  return a * b - b * a;
}

namespace detail {

/// Column indices of the nonzero entries of each row.
template <typename T>
std::vector<std::vector<std::size_t>> nonzero_columns(const Matrix<T>& m) {
  std::vector<std::vector<std::size_t>> nz(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) nz[r].push_back(c);
  return nz;
}

/// Writes row i of ab into out (sized b.cols(), zeroed by the caller).
template <typename T>
void product_row(const Matrix<T>& a, const Matrix<T>& b, const std::vector<std::vector<std::size_t>>& b_nz,
                 std::size_t i, std::vector<T>& out) {
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const T& aik = a(i, k);
    if (is_zero(aik)) continue;
    for (std::size_t j : b_nz[k]) out[j] += aik * b(k, j);
  }
}

}  // namespace detail

/// True iff ab = ba; exact in the rational regime. Compares row by row
/// without forming either product, stopping at the first difference.
template <typename T>
bool commutes(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw DimensionError("commutes: operands must be square of equal size");
  const std::size_t n = a.rows();
  const auto a_nz = detail::nonzero_columns(a);
  const auto b_nz = detail::nonzero_columns(b);
  std::vector<T> ab(n), ba(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ab[j] = ba[j] = T(0);
    detail::product_row(a, b, b_nz, i, ab);
    detail::product_row(b, a, a_nz, i, ba);
    if (ab != ba) return false;
  }
  return true;
}

/// True iff ab = c, compared row by row.
template <typename T>
bool product_equals(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  if (a.cols() != b.rows() || c.rows() != a.rows() || c.cols() != b.cols())
    throw DimensionError("product_equals: shapes do not match");
  const auto b_nz = detail::nonzero_columns(b);
  std::vector<T> row(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (auto& x : row) x = T(0);
    detail::product_row(a, b, b_nz, i, row);
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (row[j] != c(i, j)) return false;
  }
  return true;
}

/// Block-diagonal matrix; an empty list yields the 0×0 matrix.
template <typename T>
Matrix<T> direct_sum(std::span<const Matrix<T>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) throw DimensionError("direct_sum: blocks must be square");
    n += b.rows();
  }
  Matrix<T> out(n, n);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(offset + r, offset + c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

template <typename T>
Matrix<T> direct_sum(std::initializer_list<Matrix<T>> blocks) {
  return direct_sum(std::span<const Matrix<T>>(blocks.begin(), blocks.size()));
}

template <typename T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
  return direct_sum(std::span<const Matrix<T>>(blocks));
}

inline ComplexMatrix to_complex(const RationalMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Complex(m(r, c).get_d(), 0.0);
  return out;
}

/// Outer product |u⟩⟨v| in the rational regime.
inline RationalMatrix outer(const RationalVector& u, const RationalVector& v) {
  RationalMatrix out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(v[j])) out(i, j) = u[i] * v[j];
  }
  return out;
}

/// Diagonal matrix with a single 1 at (i, i).
template <typename T>
Matrix<T> basis_projector(std::size_t n, std::size_t i) {
  Matrix<T> out(n, n);
  out(i, i) = T(1);
  return out;
}

double frobenius_norm(const ComplexMatrix& m);
double frobenius_norm(const RationalMatrix& m);
bool all_finite(const ComplexMatrix& m);

}  // namespace jmg
