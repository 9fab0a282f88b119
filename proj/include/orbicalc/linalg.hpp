#pragma once

// Dense matrices over an exact field (Rational, Cyclotomic) or over double with
// an explicit tolerance. All elimination routines share one code path; the
// scalar policy decides what "zero" means and how pivots are chosen.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "orbicalc/cyclotomic.hpp"
#include "orbicalc/rational.hpp"

namespace orbicalc {

template <class T>
struct ScalarPolicy;

template <>
struct ScalarPolicy<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, double) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
};

template <>
struct ScalarPolicy<Cyclotomic> {
  static constexpr bool exact = true;
  static bool is_zero(const Cyclotomic& x, double) { return x.is_zero(); }
  static double magnitude(const Cyclotomic& x) { return std::abs(x.to_complex()); }
};

template <>
struct ScalarPolicy<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
  static double magnitude(double x) { return std::abs(x); }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
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

  /// Zero entries of the left factor are skipped, so permutation-like matrices multiply cheaply.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (ScalarPolicy<T>::is_zero(aik, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (ScalarPolicy<T>::is_zero(b(k, j), 0.0)) continue;
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix column(std::size_t c) const {
    Matrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, c);
    return out;
  }

  T trace() const {
    T acc(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) acc += (*this)(i, i);
    return acc;
  }

  double max_magnitude() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, ScalarPolicy<T>::magnitude(x));
    return m;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Absolute zero-threshold for a matrix in fixed-precision mode: `relative` scaled by
/// the largest entry (at least 1). Exact scalars ignore it.
template <class T>
double zero_threshold(const Matrix<T>& m, double relative) {
  if constexpr (ScalarPolicy<T>::exact) {
    return 0.0;
  } else {
    return relative * std::max(1.0, m.max_magnitude());
  }
}

/// In-place reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, double tol = 0.0) {
  using P = ScalarPolicy<T>;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    double best_mag = 0.0;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (P::is_zero(m(r, col), tol)) continue;
      if constexpr (P::exact) {
        best = r;
        break;
      } else {
        const double mag = P::magnitude(m(r, col));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
    }
    if (best == m.rows()) {
      for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || P::is_zero(m(r, col), 0.0)) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
      m(r, col) = T(0);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m, double tol = 0.0) {
  return rref(m, tol).size();
}

/// Columns form a basis of the kernel {x : m x = 0}.
template <class T>
Matrix<T> nullspace(Matrix<T> m, double tol = 0.0) {
  const auto pivots = rref(m, tol);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<T> basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -m(i, f);
  }
  return basis;
}

/// Columns of `m` at its pivot positions: a basis of the column space drawn from `m` itself.
template <class T>
Matrix<T> column_basis(const Matrix<T>& m, double tol = 0.0) {
  Matrix<T> work = m;
  const auto pivots = rref(work, tol);
  Matrix<T> basis(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = m(r, pivots[k]);
  return basis;
}

template <class T>
bool is_zero_matrix(const Matrix<T>& m, double tol = 0.0) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ScalarPolicy<T>::is_zero(m(i, j), tol)) return false;
  return true;
}

template <class T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, double tol = 0.0) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero_matrix(a - b, tol);
}

}  // namespace orbicalc
