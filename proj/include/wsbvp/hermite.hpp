#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wsbvp/polynomial.hpp"
#include "wsbvp/rational.hpp"

namespace wsbvp {

/// Physicists' Hermite polynomial H_m with integer coefficients.
inline Polynomial<Rational> hermite_polynomial(unsigned m) {
  Polynomial<Rational> prev{Rational(1)};
  if (m == 0) return prev;
  Polynomial<Rational> curr{Rational(0), Rational(2)};
  const Polynomial<Rational> two_t{Rational(0), Rational(2)};
  for (unsigned j = 1; j < m; ++j) {
    Polynomial<Rational> next = two_t * curr - prev * Rational(2 * static_cast<long>(j));
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

struct HermiteWaveletIndex {
  unsigned k = 1; // resolution level
  unsigned n = 1; // translation, 1..2^(k-1)
  unsigned m = 0; // Hermite order

  unsigned n_hat() const noexcept { return 2 * n - 1; }

  void validate() const {
    if (k < 1 || k > 30) throw std::invalid_argument("HermiteWaveletIndex: k must be in 1..30");
    if (n < 1 || n > (1u << (k - 1)))
      throw std::invalid_argument("HermiteWaveletIndex: n must be in 1..2^(k-1)");
  }
};

/// 2^{k/2} / sqrt(n! 2^n sqrt(pi)).
///
/// Uses the translation index n, exactly as the wavelet family is usually
/// written for this method. With k = n = 1 this is pi^{-1/4}.
inline double hermite_normalization(const HermiteWaveletIndex &idx) {
  double n_fact = 1.0;
  for (unsigned j = 2; j <= idx.n; ++j) n_fact *= j;
  return std::pow(2.0, 0.5 * idx.k) /
         std::sqrt(n_fact * std::pow(2.0, idx.n) * std::sqrt(std::numbers::pi));
}

/// Exact piecewise polynomial shape times a floating point normalization.
struct ScaledPiecewise {
  double scale = 1.0;
  PiecewisePolynomial<Rational> shape;

  double operator()(double t) const { return scale * shape(t); }
  ScaledPiecewise integrate() const { return {scale, shape.integrate()}; }
};

/// psi_{n,m}: H_m(2^k t - n_hat) on [(n_hat-1)/2^k, (n_hat+1)/2^k), zero elsewhere.
inline ScaledPiecewise hermite_wavelet(const HermiteWaveletIndex &idx) {
  idx.validate();
  const Rational denom = Rational(1u << idx.k);
  const Rational lo = Rational(idx.n_hat() - 1) / denom;
  const Rational hi = Rational(idx.n_hat() + 1) / denom;

  std::vector<Rational> bps{Rational(0)};
  std::vector<Polynomial<Rational>> pieces;
  if (lo > 0) {
    pieces.emplace_back();
    bps.push_back(lo);
  }
  // The local coordinate of [lo, hi) is exactly 2^k t - n_hat.
  pieces.push_back(hermite_polynomial(idx.m));
  bps.push_back(hi);
  if (hi < 1) {
    pieces.emplace_back();
    bps.push_back(Rational(1));
  }
  return {hermite_normalization(idx), PiecewisePolynomial<Rational>(std::move(bps), std::move(pieces))};
}

/// nu-fold integral from 0 of psi_{n,m}. Past the support this is the
/// polynomial continuation of the integral, not zero.
inline ScaledPiecewise integrate_wavelet(const HermiteWaveletIndex &idx, unsigned nu) {
  if (nu < 1) throw std::invalid_argument("integrate_wavelet: nu must be >= 1");
  ScaledPiecewise w = hermite_wavelet(idx);
  for (unsigned j = 0; j < nu; ++j) w = w.integrate();
  return w;
}

} // namespace wsbvp
