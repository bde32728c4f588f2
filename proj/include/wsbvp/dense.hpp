#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "wsbvp/errors.hpp"

namespace wsbvp {

/// Row-major dense matrix. Sizes here are a few hundred at most.
template <typename T> class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T &fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &row : init) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> operator*(std::span<const T> x) const {
    assert(x.size() == cols_);
    std::vector<T> out(rows_, T(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      T acc(0);
      for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
      out[r] = acc;
    }
    return out;
  }
  std::vector<T> operator*(const std::vector<T> &x) const { return (*this) * std::span<const T>(x); }

  DenseMatrix transposed() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using Vector = std::vector<double>;

inline double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Solves A x = rhs by LU with partial (row) pivoting.
///
/// Columns are first equilibrated to unit max-norm (the Hermite basis mixes
/// polynomial orders whose magnitudes differ by many decades). A pivot below
/// 1e-14 of the equilibrated scale is treated as numerical singularity;
/// `iteration` only labels the error thrown in that case.
inline Vector solve_linear_system(Matrix a, Vector rhs, int iteration = -1) {
  const std::size_t n = a.rows();
  if (a.cols() != n || rhs.size() != n)
    throw std::invalid_argument("solve_linear_system: dimension mismatch");

  Vector col_scale(n, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) col_scale[c] = std::max(col_scale[c], std::abs(a(r, c)));
  for (std::size_t c = 0; c < n; ++c) {
    if (!(col_scale[c] > 0.0) || !std::isfinite(col_scale[c]))
      throw SingularMatrixError("column " + std::to_string(c) + " is zero or non-finite", iteration);
    col_scale[c] = 1.0 / col_scale[c];
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) *= col_scale[c];
  constexpr double threshold = 1e-14;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        piv = r;
      }
    }
    if (best < threshold)
      throw SingularMatrixError("numerically singular matrix at column " + std::to_string(k),
                                iteration);
    if (piv != k) {
      std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(piv).begin());
      std::swap(rhs[k], rhs[piv]);
    }
    const double inv = 1.0 / a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double factor = a(r, k) * inv;
      if (factor == 0.0) continue;
      a(r, k) = 0.0;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= factor * a(k, c);
      rhs[r] -= factor * rhs[k];
    }
  }

  Vector x(n);
  for (std::size_t k = n; k-- > 0;) {
    double acc = rhs[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= a(k, c) * x[c];
    x[k] = acc / a(k, k);
  }
  for (std::size_t c = 0; c < n; ++c) x[c] *= col_scale[c];
  return x;
}

} // namespace wsbvp
