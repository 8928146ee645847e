#pragma once
#include "segre/error.hpp"
#include "segre/numeric.hpp"
#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace segre {

/// Dense row-major matrix over an exact ring.
template <typename T> class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>> &rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c)
        throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const T &x) { return x == 0; });
  }

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Skips zero entries of the left factor; action matrices are mostly 0/1.
  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T &bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix &a, const std::vector<T> &v) {
    if (a.cols_ != v.size())
      throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
    return out;
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

/// Kronecker product; index (i1, i2) maps to i1 * b.rows() + i2.
template <typename T> Matrix<T> kron(const Matrix<T> &a, const Matrix<T> &b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (b(p, q) != 0)
            k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

template <typename To, typename From> Matrix<To> convert(const Matrix<From> &m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Linear algebra over the rationals.

struct Echelon {
  QMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

inline Echelon rref(QMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(r, j) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const QMatrix &m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per column of the result.
inline QMatrix nullspace(const QMatrix &m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

inline QMatrix inverse(const QMatrix &m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(ErrorCode::InvalidArgument, "singular matrix");
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Integer normal forms.

/// Row-style Hermite normal form on the first `col_limit` columns, applied
/// with unimodular row operations to the whole matrix. Pivots are positive
/// and entries above a pivot lie in [0, pivot). Returns the pivot columns.
inline std::vector<std::size_t> hermite_rows(ZMatrix &m, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  auto axpy = [&](std::size_t dst, const Integer &f, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(src, j) != 0) m(dst, j) -= f * m(src, j);
  };
  for (std::size_t c = 0; c < col_limit && r < m.rows(); ++c) {
    // Euclid on column c among rows r.. until one nonzero entry remains.
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (m(i, c) != 0 &&
            (best == m.rows() || abs(m(i, c)) < abs(m(best, c))))
          best = i;
      if (best == m.rows()) break;
      m.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m(i, c) == 0) continue;
        Integer q = m(i, c) / m(r, c);
        axpy(i, q, r);
        if (m(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= m.rows() || m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = m(i, c) / m(r, c);
      if (m(i, c) - q * m(r, c) < 0) q -= 1;
      if (q != 0) axpy(i, q, r);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
inline std::vector<Integer> elementary_divisors(ZMatrix m) {
  std::vector<Integer> d;
  std::size_t t = 0;
  while (t < m.rows() && t < m.cols()) {
    // Smallest nonzero entry in the trailing block becomes the pivot.
    std::size_t pi = m.rows(), pj = m.cols();
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (m(i, j) != 0 && (pi == m.rows() || abs(m(i, j)) < abs(m(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m.rows()) break;
    m.swap_rows(t, pi);
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, t), m(i, pj));
    bool clean = true;
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      Integer q = m(i, t) / m(t, t);
      if (q != 0)
        for (std::size_t j = t; j < m.cols(); ++j) m(i, j) -= q * m(t, j);
      if (m(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < m.cols(); ++j) {
      Integer q = m(t, j) / m(t, t);
      if (q != 0)
        for (std::size_t i = t; i < m.rows(); ++i) m(i, j) -= q * m(i, t);
      if (m(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // Pivot must divide the rest of the block; otherwise fold a row in.
    bool divides = true;
    for (std::size_t i = t + 1; i < m.rows() && divides; ++i)
      for (std::size_t j = t + 1; j < m.cols(); ++j)
        if (m(i, j) % m(t, t) != 0) {
          for (std::size_t k = t; k < m.cols(); ++k) m(t, k) += m(i, k);
          divides = false;
          break;
        }
    if (!divides) continue;
    d.push_back(abs(m(t, t)));
    ++t;
  }
  return d;
}

} // namespace segre
