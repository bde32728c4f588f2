#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "wsbvp/errors.hpp"

namespace wsbvp {

enum class BoundaryCase {
  NeumannDirichlet,   // y'(0) = alpha, y(1) = beta
  DirichletDirichlet, // y(0) = alpha, y(1) = beta
  NeumannRobin,       // y'(0) = alpha, a y(1) + b y'(1) = beta
};

struct BoundaryCondition {
  BoundaryCase kind = BoundaryCase::NeumannDirichlet;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 1.0;
  double b = 0.0;

  static BoundaryCondition neumann_dirichlet(double alpha, double beta) {
    return {BoundaryCase::NeumannDirichlet, alpha, beta};
  }
  static BoundaryCondition dirichlet_dirichlet(double alpha, double beta) {
    return {BoundaryCase::DirichletDirichlet, alpha, beta};
  }
  static BoundaryCondition neumann_robin(double alpha, double a, double b, double beta) {
    BoundaryCondition bc{BoundaryCase::NeumannRobin, alpha, beta, a, b};
    bc.validate();
    return bc;
  }

  void validate() const {
    if (kind == BoundaryCase::NeumannRobin && a == 0.0)
      throw InvalidBoundaryCondition("Neumann-Robin condition requires a != 0");
  }
};

using ScalarField = std::function<double(double t, double y)>;

/// y'' + (k_g / t) y' + f(t, y) = 0 on (0, 1].
struct SBVProblem {
  std::string name;
  double k_g = 0.0;
  ScalarField f;
  ScalarField f_y;
  BoundaryCondition bc;
  std::optional<std::function<double(double)>> exact;
};

struct StateTriple {
  double t = 1.0;
  double y = 0.0;
  double yp = 0.0;
  double ypp = 0.0;
};

inline double residual(const SBVProblem &p, const StateTriple &s) {
  if (!(s.t > 0.0)) throw SingularPointError("residual: operator is singular at t = 0");
  return s.ypp + (p.k_g / s.t) * s.yp + p.f(s.t, s.y);
}

/// Quasilinearized right-hand side about y_r.
///
/// Returns (rhs, coef) such that the linear equation for the next iterate is
/// L y + (-coef) y = rhs, i.e. L y + f_y(t, y_r) y = -f(t, y_r) + y_r f_y(t, y_r).
/// f depends on y only, so there is no y' term.
inline std::pair<double, double> linearized_rhs(const SBVProblem &p, double t, double y_r) {
  if (!(t > 0.0)) throw SingularPointError("linearized_rhs: operator is singular at t = 0");
  const double fy = p.f_y(t, y_r);
  return {-p.f(t, y_r) + y_r * fy, -fy};
}

} // namespace wsbvp
