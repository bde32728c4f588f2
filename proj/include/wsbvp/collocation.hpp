#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsbvp/dense.hpp"
#include "wsbvp/haar.hpp"
#include "wsbvp/hermite.hpp"
#include "wsbvp/problem.hpp"

namespace wsbvp {

enum class BasisFamily { Haar, Hermite };

/// Haar: resolution is the level J and there are 2^{J+1} coefficients.
/// Hermite: resolution is the number of functions M at level k = 1.
struct BasisSpec {
  BasisFamily family = BasisFamily::Haar;
  unsigned resolution = 1;

  std::size_t size() const {
    return family == BasisFamily::Haar ? std::size_t{2} << resolution : std::size_t{resolution};
  }

  void validate() const {
    if (family == BasisFamily::Haar && resolution > 20)
      throw std::invalid_argument("BasisSpec: Haar level J too large");
    if (size() < 2) throw std::invalid_argument("BasisSpec: need at least two basis functions");
  }

  friend bool operator==(const BasisSpec &, const BasisSpec &) = default;
};

inline std::string to_string(BasisFamily f) { return f == BasisFamily::Haar ? "haar" : "hermite"; }

/// Values of the basis functions for y'' and their first two integrals at one point.
struct BasisSample {
  Vector value, int1, int2;
};

/// Evaluates every basis function (and its integrals from 0) at arbitrary t in [0, 1].
class Basis {
public:
  explicit Basis(BasisSpec spec) : spec_(spec) {
    spec_.validate();
    if (spec_.family == BasisFamily::Hermite) {
      for (unsigned m = 0; m < spec_.resolution; ++m) {
        const HermiteWaveletIndex idx{1, 1, m};
        psi_.push_back(hermite_wavelet(idx));
        psi1_.push_back(psi_.back().integrate());
        psi2_.push_back(psi1_.back().integrate());
      }
    }
  }

  const BasisSpec &spec() const noexcept { return spec_; }
  std::size_t size() const { return spec_.size(); }

  BasisSample sample(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("Basis: t outside [0, 1]");
    const std::size_t n = size();
    BasisSample s{Vector(n), Vector(n), Vector(n)};
    if (spec_.family == BasisFamily::Haar) {
      const HaarGrid<double> grid{0.0, 1.0, spec_.resolution};
      for (std::size_t i = 1; i <= n; ++i) {
        const HaarIndex idx(i);
        s.value[i - 1] = haar_function(idx, grid, t);
        s.int1[i - 1] = haar_integral(idx, grid, 1, t);
        s.int2[i - 1] = haar_integral(idx, grid, 2, t);
      }
    } else {
      for (std::size_t m = 0; m < n; ++m) {
        s.value[m] = psi_[m](t);
        s.int1[m] = psi1_[m](t);
        s.int2[m] = psi2_[m](t);
      }
    }
    return s;
  }

private:
  BasisSpec spec_;
  std::vector<ScaledPiecewise> psi_, psi1_, psi2_;
};

/// Midpoints of N equal cells: x_l = (2l - 1) / (2N), l = 1..N.
inline Vector collocation_points(const BasisSpec &spec) {
  spec.validate();
  const std::size_t n = spec.size();
  Vector x(n);
  for (std::size_t l = 1; l <= n; ++l) x[l - 1] = static_cast<double>(2 * l - 1) / static_cast<double>(2 * n);
  return x;
}

/// Scalar affine functional c -> constant + <linear, c>.
struct AffineFunctional {
  double constant = 0.0;
  Vector linear;

  double operator()(std::span<const double> c) const {
    double acc = constant;
    for (std::size_t i = 0; i < linear.size(); ++i) acc += linear[i] * c[i];
    return acc;
  }
};

/// One affine functional per collocation point, stored as constant vector + matrix.
struct AffineRows {
  Vector constant;
  Matrix linear;

  Vector operator()(std::span<const double> c) const {
    Vector out = linear * c;
    for (std::size_t l = 0; l < out.size(); ++l) out[l] += constant[l];
    return out;
  }
};

struct Reconstruction {
  double y = 0.0;
  double yp = 0.0;
  double ypp = 0.0;
};

/// Collocation data for one basis and one boundary condition.
///
/// With y'' = sum c_i B_i, integrating twice gives
///   y'(t) = sum c_i B_i^(1)(t) + y'(0),  y(t) = sum c_i B_i^(2)(t) + t y'(0) + y(0),
/// and the boundary condition expresses y(0) and y'(0) as affine functionals of c.
struct CollocationSystem {
  BasisSpec spec;
  BoundaryCondition bc;
  std::shared_ptr<const Basis> basis;

  Vector points;
  Matrix B0, B1, B2; // row l: basis, once and twice integrated basis at points[l]
  Vector B1_at_1, B2_at_1;

  AffineFunctional y_at_0, yp_at_0;
  AffineRows bt_value; // t y'(0) + y(0) at each point
  AffineRows bt_deriv; // y'(0) at each point

  AffineRows value_map; // y at the points: B2 c + bt_value(c)
  AffineRows deriv_map; // y' at the points: B1 c + bt_deriv(c)

  std::size_t size() const noexcept { return points.size(); }
};

inline CollocationSystem assemble(const BasisSpec &spec, const BoundaryCondition &bc) {
  bc.validate();
  CollocationSystem sys;
  sys.spec = spec;
  sys.bc = bc;
  sys.basis = std::make_shared<const Basis>(spec);
  sys.points = collocation_points(spec);
  const std::size_t n = sys.points.size();

  sys.B0 = sys.B1 = sys.B2 = Matrix(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const BasisSample s = sys.basis->sample(sys.points[l]);
    for (std::size_t i = 0; i < n; ++i) {
      sys.B0(l, i) = s.value[i];
      sys.B1(l, i) = s.int1[i];
      sys.B2(l, i) = s.int2[i];
    }
  }
  const BasisSample at1 = sys.basis->sample(1.0);
  sys.B1_at_1 = at1.int1;
  sys.B2_at_1 = at1.int2;

  const double alpha = bc.alpha, beta = bc.beta;
  auto scaled = [](const Vector &v, double s) {
    Vector out(v);
    for (double &x : out) x *= s;
    return out;
  };
  switch (bc.kind) {
  case BoundaryCase::NeumannDirichlet:
    // y'(0) = alpha, y(1) = beta  =>  y(0) = beta - alpha - B2(1).c
    sys.yp_at_0 = {alpha, Vector(n, 0.0)};
    sys.y_at_0 = {beta - alpha, scaled(sys.B2_at_1, -1.0)};
    break;
  case BoundaryCase::DirichletDirichlet:
    // y(0) = alpha, y(1) = beta  =>  y'(0) = beta - alpha - B2(1).c
    sys.y_at_0 = {alpha, Vector(n, 0.0)};
    sys.yp_at_0 = {beta - alpha, scaled(sys.B2_at_1, -1.0)};
    break;
  case BoundaryCase::NeumannRobin: {
    // y'(0) = alpha, a y(1) + b y'(1) = beta
    //   =>  y(0) = [beta - (a + b) alpha - a B2(1).c - b B1(1).c] / a
    const double a = bc.a, b = bc.b;
    sys.yp_at_0 = {alpha, Vector(n, 0.0)};
    Vector lin(n);
    for (std::size_t i = 0; i < n; ++i) lin[i] = -sys.B2_at_1[i] - (b / a) * sys.B1_at_1[i];
    sys.y_at_0 = {(beta - (a + b) * alpha) / a, std::move(lin)};
    break;
  }
  }

  sys.bt_value = {Vector(n), Matrix(n, n)};
  sys.bt_deriv = {Vector(n), Matrix(n, n)};
  sys.value_map = {Vector(n), Matrix(n, n)};
  sys.deriv_map = {Vector(n), Matrix(n, n)};
  for (std::size_t l = 0; l < n; ++l) {
    const double t = sys.points[l];
    sys.bt_value.constant[l] = t * sys.yp_at_0.constant + sys.y_at_0.constant;
    sys.bt_deriv.constant[l] = sys.yp_at_0.constant;
    for (std::size_t i = 0; i < n; ++i) {
      sys.bt_value.linear(l, i) = t * sys.yp_at_0.linear[i] + sys.y_at_0.linear[i];
      sys.bt_deriv.linear(l, i) = sys.yp_at_0.linear[i];
      sys.value_map.linear(l, i) = sys.B2(l, i) + sys.bt_value.linear(l, i);
      sys.deriv_map.linear(l, i) = sys.B1(l, i) + sys.bt_deriv.linear(l, i);
    }
    sys.value_map.constant[l] = sys.bt_value.constant[l];
    sys.deriv_map.constant[l] = sys.bt_deriv.constant[l];
  }
  return sys;
}

/// (y, y', y'') of the represented solution at any t in [0, 1].
inline Reconstruction reconstruct(const CollocationSystem &sys, std::span<const double> c, double t) {
  if (c.size() != sys.size()) throw std::invalid_argument("reconstruct: coefficient count mismatch");
  const BasisSample s = sys.basis->sample(t);
  const double yp0 = sys.yp_at_0(c);
  const double y0 = sys.y_at_0(c);
  Reconstruction r{t * yp0 + y0, yp0, 0.0};
  for (std::size_t i = 0; i < c.size(); ++i) {
    r.y += c[i] * s.int2[i];
    r.yp += c[i] * s.int1[i];
    r.ypp += c[i] * s.value[i];
  }
  return r;
}

} // namespace wsbvp
