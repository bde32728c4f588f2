#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wsbvp/errors.hpp"
#include "wsbvp/rational.hpp"

namespace wsbvp {

/// Dense univariate polynomial, coefficients in ascending powers.
///
/// Kept canonical: the highest stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all (degree -1).
template <typename T> class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const T &c) { return Polynomial({c}); }
  static Polynomial monomial(std::size_t power, const T &c = T(1)) {
    std::vector<T> v(power + 1, T(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  const std::vector<T> &coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  T coeff(std::size_t power) const { return power < coeffs_.size() ? coeffs_[power] : T(0); }

  template <typename U> U evaluate(const U &x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t p = 1; p < coeffs_.size(); ++p) d[p - 1] = coeffs_[p] * T(static_cast<long>(p));
    return Polynomial(std::move(d));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    if (coeffs_.empty()) return {};
    std::vector<T> a(coeffs_.size() + 1, T(0));
    for (std::size_t p = 0; p < coeffs_.size(); ++p) a[p + 1] = coeffs_[p] / T(static_cast<long>(p + 1));
    return Polynomial(std::move(a));
  }

  Polynomial &operator+=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t p = 0; p < o.coeffs_.size(); ++p) coeffs_[p] += o.coeffs_[p];
    trim();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) { return *this += (-o); }
  Polynomial &operator*=(const T &s) {
    for (auto &c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T &s) { return a *= s; }
  friend Polynomial operator*(const T &s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto &c : r.coeffs_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  template <typename U> Polynomial<U> cast() const {
    std::vector<U> v;
    v.reserve(coeffs_.size());
    for (const auto &c : coeffs_) {
      if constexpr (std::is_same_v<U, double>) v.push_back(to_double(c));
      else v.push_back(U(c));
    }
    return Polynomial<U>(std::move(v));
  }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

/// Piecewise polynomial on [0, 1].
///
/// Each piece is stored in the local coordinate s = (2t - b_j - b_{j+1}) / (b_{j+1} - b_j),
/// which maps its interval onto [-1, 1]. Intervals are half open [b_j, b_{j+1})
/// except the last, which is closed at t = 1.
template <typename T> class PiecewisePolynomial {
public:
  PiecewisePolynomial(std::vector<T> breakpoints, std::vector<Polynomial<T>> pieces)
      : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2 || pieces_.size() + 1 != breakpoints_.size())
      throw std::invalid_argument("PiecewisePolynomial: need one piece per interval");
    if (breakpoints_.front() != T(0) || breakpoints_.back() != T(1))
      throw std::invalid_argument("PiecewisePolynomial: breakpoints must span [0, 1]");
    for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j)
      if (!(breakpoints_[j] < breakpoints_[j + 1]))
        throw std::invalid_argument("PiecewisePolynomial: breakpoints must increase strictly");
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      pieces_d_.push_back(pieces_[j].template cast<double>());
      lo_d_.push_back(to_double(breakpoints_[j]));
      hi_d_.push_back(to_double(breakpoints_[j + 1]));
    }
  }

  const std::vector<T> &breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Polynomial<T>> &pieces() const noexcept { return pieces_; }

  double operator()(double t) const {
    const std::size_t j = locate(t);
    const double s = (2.0 * t - lo_d_[j] - hi_d_[j]) / (hi_d_[j] - lo_d_[j]);
    return pieces_d_[j].evaluate(s);
  }

  /// Exact evaluation in the coefficient field.
  T evaluate_exact(const T &t) const {
    if (t < T(0) || t > T(1)) throw DomainError("PiecewisePolynomial: t outside [0, 1]");
    std::size_t j = pieces_.size() - 1;
    for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k)
      if (t < breakpoints_[k + 1]) {
        j = k;
        break;
      }
    const T lo = breakpoints_[j], hi = breakpoints_[j + 1];
    return pieces_[j].evaluate((T(2) * t - lo - hi) / (hi - lo));
  }

  /// The antiderivative vanishing at t = 0; continuous across breakpoints.
  PiecewisePolynomial integrate() const {
    std::vector<Polynomial<T>> out;
    out.reserve(pieces_.size());
    T carry(0);
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      const T half_width = (breakpoints_[j + 1] - breakpoints_[j]) / T(2);
      const Polynomial<T> anti = pieces_[j].antiderivative();
      Polynomial<T> piece = anti * half_width;
      piece += Polynomial<T>::constant(carry - half_width * anti.evaluate(T(-1)));
      carry = piece.evaluate(T(1));
      out.push_back(std::move(piece));
    }
    return PiecewisePolynomial(breakpoints_, std::move(out));
  }

  /// Derivative with respect to t, piece by piece.
  PiecewisePolynomial differentiate() const {
    std::vector<Polynomial<T>> out;
    for (std::size_t j = 0; j < pieces_.size(); ++j) {
      const T inv_half_width = T(2) / (breakpoints_[j + 1] - breakpoints_[j]);
      out.push_back(pieces_[j].derivative() * inv_half_width);
    }
    return PiecewisePolynomial(breakpoints_, std::move(out));
  }

  friend bool operator==(const PiecewisePolynomial &a, const PiecewisePolynomial &b) {
    return a.breakpoints_ == b.breakpoints_ && a.pieces_ == b.pieces_;
  }

private:
  std::size_t locate(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("PiecewisePolynomial: t outside [0, 1]");
    const auto it = std::upper_bound(lo_d_.begin(), lo_d_.end(), t);
    return static_cast<std::size_t>(std::distance(lo_d_.begin(), it)) - 1;
  }

  std::vector<T> breakpoints_;
  std::vector<Polynomial<T>> pieces_;
  std::vector<Polynomial<double>> pieces_d_;
  std::vector<double> lo_d_, hi_d_;
};

} // namespace wsbvp
