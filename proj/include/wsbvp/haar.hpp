#pragma once

#include <bit>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wsbvp/dense.hpp"
#include "wsbvp/errors.hpp"

namespace wsbvp {

/// Uniform Haar grid on [P, Q] with maximal level J: 2M cells of width dx, M = 2^J.
template <typename T> struct HaarGrid {
  T P = T(0);
  T Q = T(1);
  unsigned J = 1;

  std::size_t M() const noexcept { return std::size_t{1} << J; }
  std::size_t size() const noexcept { return 2 * M(); }
  T dx() const { return (Q - P) / T(static_cast<long>(2 * M())); }

  /// x_t = P + (2t - 1) dx / 2, t = 1..2M.
  std::vector<T> collocation_points() const {
    std::vector<T> x;
    x.reserve(size());
    for (std::size_t t = 1; t <= size(); ++t) x.push_back(P + T(static_cast<long>(2 * t - 1)) * dx() / T(2));
    return x;
  }
};

/// Wavelet number i >= 1 decomposed as i = m + k + 1, m = 2^j.
struct HaarIndex {
  std::size_t i = 1;

  explicit HaarIndex(std::size_t i_) : i(i_) {
    if (i_ < 1) throw std::invalid_argument("HaarIndex: wavelet number starts at 1");
  }

  unsigned j() const { return i == 1 ? 0u : static_cast<unsigned>(std::bit_width(i - 1) - 1); }
  std::size_t m() const { return std::size_t{1} << j(); }
  std::size_t k() const { return i == 1 ? 0 : i - m() - 1; }
};

template <typename T> struct HaarBreakpoints {
  T eta1, eta2, eta3;
};

template <typename T> HaarBreakpoints<T> haar_breakpoints(const HaarIndex &idx, const HaarGrid<T> &grid) {
  if (idx.i == 1) return {grid.P, grid.Q, grid.Q};
  if (idx.i > grid.size()) throw std::invalid_argument("HaarIndex: wavelet number exceeds 2M");
  if (idx.i == 2) return {grid.P, (T(2) * grid.P + grid.Q) / T(2), grid.Q};
  const T mu = T(static_cast<long>(grid.M())) / T(static_cast<long>(idx.m()));
  const T k = T(static_cast<long>(idx.k()));
  const T dx = grid.dx();
  return {grid.P + T(2) * k * mu * dx, grid.P + (T(2) * k + T(1)) * mu * dx,
          grid.P + T(2) * (k + T(1)) * mu * dx};
}

namespace detail {
template <typename T> void check_domain(const HaarGrid<T> &grid, const T &x) {
  if (x < grid.P || x > grid.Q) throw DomainError("Haar: x outside [P, Q]");
}

template <typename T> T power(const T &base, unsigned e) {
  T r(1);
  for (unsigned j = 0; j < e; ++j) r *= base;
  return r;
}

inline long factorial(unsigned n) {
  long f = 1;
  for (unsigned j = 2; j <= n; ++j) f *= j;
  return f;
}
} // namespace detail

template <typename T> T haar_function(const HaarIndex &idx, const HaarGrid<T> &grid, const T &x) {
  detail::check_domain(grid, x);
  if (idx.i == 1) return T(1);
  const auto [e1, e2, e3] = haar_breakpoints(idx, grid);
  if (x >= e1 && x < e2) return T(1);
  if (x >= e2 && x < e3) return T(-1);
  return T(0);
}

/// p_{nu,i}(x): nu-fold integral from P of h_i, three-region closed form.
template <typename T>
T haar_integral(const HaarIndex &idx, const HaarGrid<T> &grid, unsigned nu, const T &x) {
  if (nu < 1) throw std::invalid_argument("haar_integral: nu must be >= 1");
  detail::check_domain(grid, x);
  const T inv_fact = T(1) / T(detail::factorial(nu));
  if (idx.i == 1) return detail::power(x - grid.P, nu) * inv_fact;

  const auto [e1, e2, e3] = haar_breakpoints(idx, grid);
  if (x < e1) return T(0);
  if (x < e2) return detail::power(x - e1, nu) * inv_fact;
  if (x <= e3) return (detail::power(x - e1, nu) - T(2) * detail::power(x - e2, nu)) * inv_fact;
  return (detail::power(x - e1, nu) - T(2) * detail::power(x - e2, nu) + detail::power(x - e3, nu)) *
         inv_fact;
}

/// H(i, t) = h_i(x_t) and P_nu(i, t) = p_{nu,i}(x_t); rows are wavelets, columns points.
template <typename T> struct OperationalMatrices {
  DenseMatrix<T> H;
  std::vector<DenseMatrix<T>> P; // P[nu - 1]

  const DenseMatrix<T> &integral(unsigned nu) const { return P.at(nu - 1); }
};

template <typename T> OperationalMatrices<T> build_matrices(const HaarGrid<T> &grid, unsigned max_nu) {
  if (max_nu < 1) throw std::invalid_argument("build_matrices: max_nu must be >= 1");
  const std::size_t n = grid.size();
  const auto x = grid.collocation_points();
  OperationalMatrices<T> out{DenseMatrix<T>(n, n), std::vector<DenseMatrix<T>>(max_nu, DenseMatrix<T>(n, n))};
  for (std::size_t i = 1; i <= n; ++i) {
    const HaarIndex idx(i);
    for (std::size_t t = 0; t < n; ++t) {
      out.H(i - 1, t) = haar_function(idx, grid, x[t]);
      for (unsigned nu = 1; nu <= max_nu; ++nu) out.P[nu - 1](i - 1, t) = haar_integral(idx, grid, nu, x[t]);
    }
  }
  return out;
}

} // namespace wsbvp
