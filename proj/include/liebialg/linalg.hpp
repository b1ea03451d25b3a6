#pragma once

// Dense exact linear algebra: matrices, reduced row echelon form, kernels,
// inverses and proportionality of vectors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "liebialg/scalar.hpp"

namespace liebialg {

template <Field F>
using Vector = std::vector<F>;

template <Field F>
Vector<F> zero_vector(std::size_t n) {
  return Vector<F>(n, F::zero());
}

template <Field F>
Vector<F> unit_vector(std::size_t n, std::size_t i) {
  Vector<F> v(n, F::zero());
  v.at(i) = F::one();
  return v;
}

template <Field F>
bool is_zero(const Vector<F>& v) {
  return std::ranges::all_of(v, [](const F& x) { return x.is_zero(); });
}

template <Field F>
Vector<F> operator+(Vector<F> a, const Vector<F>& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <Field F>
Vector<F> operator-(Vector<F> a, const Vector<F>& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <Field F>
Vector<F> operator*(const F& c, Vector<F> v) {
  for (auto& x : v) x *= c;
  return v;
}

template <Field F>
F dot(const Vector<F>& a, const Vector<F>& b) {
  if (a.size() != b.size()) throw InputError("vector length mismatch");
  F s = F::zero();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  static Matrix from_rows(const std::vector<Vector<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Square matrix from row-major entries; the entry count must be a square.
  static Matrix from_row_major(const std::vector<F>& entries) {
    std::size_t n = 0;
    while (n * n < entries.size()) ++n;
    if (n * n != entries.size())
      throw InputError("matrix entry count " + std::to_string(entries.size()) + " is not a square");
    Matrix m(n, n);
    m.data_ = entries;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Vector<F> row(std::size_t r) const {
    return Vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  [[nodiscard]] Vector<F> column(std::size_t c) const {
    Vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  [[nodiscard]] std::vector<Vector<F>> row_list() const {
    std::vector<Vector<F>> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }
  [[nodiscard]] const std::vector<F>& entries() const { return data_; }

  [[nodiscard]] bool is_zero() const {
    return std::ranges::all_of(data_, [](const F& x) { return x.is_zero(); });
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  [[nodiscard]] F trace() const {
    F s = F::zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend Vector<F> operator*(const Matrix& a, const Vector<F>& v) {
    if (a.cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
    Vector<F> out(a.rows_, F::zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix difference dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const F& c, Matrix m) {
    for (auto& x : m.data_) x *= c;
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <Field F>
struct RrefResult {
  Matrix<F> matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. The result is the unique reduced row echelon
/// form: pivots equal one and are the only nonzero entry in their column.
template <Field F>
RrefResult<F> rref_with_pivots(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    F inv = F::one() / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= factor * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

template <Field F>
std::pair<Matrix<F>, std::size_t> rref(const Matrix<F>& m) {
  auto res = rref_with_pivots(m);
  return {std::move(res.matrix), res.rank};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  return rref_with_pivots(m).rank;
}

/// Canonical null-space basis: one vector per free column, with a one in
/// that column and zeros in the other free columns.
template <Field F>
std::vector<Vector<F>> kernel_basis(const Matrix<F>& m) {
  auto res = rref_with_pivots(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : res.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector<F> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t r = 0; r < res.rank; ++r) v[res.pivots[r]] = -res.matrix(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Field F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F::one();
  }
  auto res = rref_with_pivots(std::move(aug));
  if (res.rank < n || res.pivots[n - 1] >= n) throw InputError("matrix is singular");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = res.matrix(i, n + j);
  return out;
}

template <Field F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  F det = F::one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return F::zero();
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F f = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Marker returned by solve_proportionality when both vectors vanish, so
/// every factor works.
struct ZeroPair {
  friend bool operator==(ZeroPair, ZeroPair) { return true; }
};

template <Field F>
using Proportion = std::variant<F, ZeroPair>;

/// Finds the factor c with a = c * b. Returns ZeroPair when a = b = 0 and
/// nothing when no such factor exists.
template <Field F>
std::optional<Proportion<F>> solve_proportionality(const Vector<F>& a, const Vector<F>& b) {
  if (a.size() != b.size())
    throw InputError("proportionality of vectors of lengths " + std::to_string(a.size()) + " and " +
                     std::to_string(b.size()));
  const bool a_zero = is_zero(a);
  if (is_zero(b)) {
    if (a_zero) return Proportion<F>{ZeroPair{}};
    return std::nullopt;
  }
  if (a_zero) return Proportion<F>{F::zero()};
  std::size_t k = 0;
  while (b[k].is_zero()) ++k;
  F c = a[k] / b[k];
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != c * b[i]) return std::nullopt;
  return Proportion<F>{c};
}

}  // namespace liebialg
