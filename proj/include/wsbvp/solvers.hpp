#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wsbvp/collocation.hpp"
#include "wsbvp/dense.hpp"
#include "wsbvp/problem.hpp"

namespace wsbvp {

enum class Method { QA, NA };
enum class JacobianKind { Analytic, FiniteDifference };

struct SolverConfig {
  Method method = Method::NA;
  BasisSpec basis{};
  double tol = 1e-12;
  int max_iter = 50;
  /// Nodal guess y_0 at the collocation points. Empty means zeros.
  Vector initial_vector;
  JacobianKind jacobian = JacobianKind::Analytic;
  double fd_step = 1e-4;
};

struct SolveResult {
  Vector coefficients;
  int iterations = 0;
  bool converged = false;
  double final_update_norm = 0.0;
  std::vector<double> trace;
  std::string diagnostic;
  std::shared_ptr<const CollocationSystem> system;

  Reconstruction at(double t) const { return reconstruct(*system, coefficients, t); }
};

/// F_l(c) = y''(x_l) + (k_g / x_l) y'(x_l) + f(x_l, y(x_l)).
inline Vector collocation_residual(const SBVProblem &p, const CollocationSystem &sys, std::span<const double> c) {
  const Vector ypp = sys.B0 * c;
  const Vector yp = sys.deriv_map(c);
  const Vector y = sys.value_map(c);
  Vector r(sys.size());
  for (std::size_t l = 0; l < r.size(); ++l)
    r[l] = residual(p, {sys.points[l], y[l], yp[l], ypp[l]});
  return r;
}

/// Rows B0 + (k_g / x_l) (B1 + bt') + f_y(x_l, y_l) (B2 + bt), with y_l the
/// nodal values the nonlinearity is linearized about.
inline Matrix linearized_operator(const SBVProblem &p, const CollocationSystem &sys, std::span<const double> y) {
  const std::size_t n = sys.size();
  Matrix a(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    const double x = sys.points[l];
    const double kx = p.k_g / x;
    const double fy = p.f_y(x, y[l]);
    for (std::size_t i = 0; i < n; ++i)
      a(l, i) = sys.B0(l, i) + kx * sys.deriv_map.linear(l, i) + fy * sys.value_map.linear(l, i);
  }
  return a;
}

inline Matrix analytic_jacobian(const SBVProblem &p, const CollocationSystem &sys, std::span<const double> c) {
  return linearized_operator(p, sys, sys.value_map(c));
}

/// Column-wise central differences. Each step moves the nodal values by
/// about fd_step (1 + max_l |y(x_l)|): the step for c_i is that amount divided
/// by the largest entry of column i of the value map. Hermite coefficients
/// are badly scaled, so a step proportional to |c_i| is not usable.
inline Matrix fd_jacobian(const SBVProblem &p, const CollocationSystem &sys, std::span<const double> c,
                          double fd_step = 1e-4) {
  const std::size_t n = sys.size();
  const double scale = fd_step * (1.0 + sup_norm(sys.value_map(c)));
  Matrix jac(n, n);
  Vector shifted(c.begin(), c.end());
  for (std::size_t i = 0; i < n; ++i) {
    double column = 0.0;
    for (std::size_t l = 0; l < n; ++l) column = std::max(column, std::abs(sys.value_map.linear(l, i)));
    const double h = scale / (column > 0.0 ? column : 1.0);
    shifted[i] = c[i] + h;
    const Vector up = collocation_residual(p, sys, shifted);
    shifted[i] = c[i] - h;
    const Vector down = collocation_residual(p, sys, shifted);
    shifted[i] = c[i];
    for (std::size_t l = 0; l < n; ++l) jac(l, i) = (up[l] - down[l]) / (2.0 * h);
  }
  return jac;
}

namespace detail {

inline Vector initial_nodes(const SolverConfig &cfg, std::size_t n) {
  if (cfg.initial_vector.empty()) return Vector(n, 0.0);
  if (cfg.initial_vector.size() != n)
    throw std::invalid_argument("SolverConfig: initial vector length " + std::to_string(cfg.initial_vector.size()) +
                                " does not match basis size " + std::to_string(n));
  return cfg.initial_vector;
}

inline void validate(const SolverConfig &cfg) {
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("SolverConfig: tol must be positive");
  if (cfg.max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
  if (!(cfg.fd_step > 0.0)) throw std::invalid_argument("SolverConfig: fd_step must be positive");
}

inline bool finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

} // namespace detail

/// Quasilinearization: each step solves the linear collocation problem
///   L y_{r+1} + f_y(t, y_r) y_{r+1} = -f(t, y_r) + y_r f_y(t, y_r)
/// and stops when the nodal update is below tol.
inline SolveResult solve_qa(const SBVProblem &p, const SolverConfig &cfg) {
  detail::validate(cfg);
  if (cfg.method != Method::QA) throw std::invalid_argument("solve_qa: config method is not QA");
  auto sys = std::make_shared<const CollocationSystem>(assemble(cfg.basis, p.bc));
  const std::size_t n = sys->size();

  SolveResult res;
  res.system = sys;
  res.coefficients.assign(n, 0.0);
  Vector y = detail::initial_nodes(cfg, n);

  try {
    for (int it = 1; it <= cfg.max_iter; ++it) {
      Matrix a = linearized_operator(p, *sys, y);
      Vector rhs(n);
      for (std::size_t l = 0; l < n; ++l) {
        const double x = sys->points[l];
        const auto [q, coef] = linearized_rhs(p, x, y[l]);
        // move the boundary constants to the right-hand side
        rhs[l] = q - (p.k_g / x) * sys->deriv_map.constant[l] + coef * sys->value_map.constant[l];
      }
      Vector c = solve_linear_system(std::move(a), std::move(rhs), it);
      Vector y_next = sys->value_map(c);

      double update = 0.0;
      for (std::size_t l = 0; l < n; ++l) update = std::max(update, std::abs(y_next[l] - y[l]));
      res.iterations = it;
      res.trace.push_back(update);
      res.final_update_norm = update;
      res.coefficients = std::move(c);
      y = std::move(y_next);

      if (!std::isfinite(update) || !detail::finite(y)) {
        res.diagnostic = "non-finite iterate at iteration " + std::to_string(it);
        return res;
      }
      if (update <= cfg.tol) {
        res.converged = true;
        return res;
      }
    }
    res.diagnostic = "no convergence within " + std::to_string(cfg.max_iter) + " iterations";
  } catch (const DomainError &e) {
    res.diagnostic = std::string("domain error: ") + e.what();
  }
  return res;
}

/// Newton-Raphson on F(c) = 0, stopping when the update of the nodal values
/// y(x_l) is below tol.
inline SolveResult solve_na(const SBVProblem &p, const SolverConfig &cfg) {
  detail::validate(cfg);
  if (cfg.method != Method::NA) throw std::invalid_argument("solve_na: config method is not NA");
  auto sys = std::make_shared<const CollocationSystem>(assemble(cfg.basis, p.bc));
  const std::size_t n = sys->size();

  SolveResult res;
  res.system = sys;

  // Map the nodal guess to coefficients through the affine value map.
  Vector target = detail::initial_nodes(cfg, n);
  for (std::size_t l = 0; l < n; ++l) target[l] -= sys->value_map.constant[l];
  Vector c = solve_linear_system(sys->value_map.linear, std::move(target), 0);
  res.coefficients = c;

  try {
    for (int it = 1; it <= cfg.max_iter; ++it) {
      Vector f = collocation_residual(p, *sys, c);
      Matrix jac = cfg.jacobian == JacobianKind::Analytic ? analytic_jacobian(p, *sys, c)
                                                          : fd_jacobian(p, *sys, c, cfg.fd_step);
      for (double &v : f) v = -v;
      const Vector delta = solve_linear_system(std::move(jac), std::move(f), it);
      for (std::size_t i = 0; i < n; ++i) c[i] += delta[i];

      // Measured on the nodal values: the raw coefficient update of the
      // Hermite basis has a round-off floor far above tol once N >= 12.
      const double update = sup_norm(sys->value_map.linear * delta);
      res.iterations = it;
      res.trace.push_back(update);
      res.final_update_norm = update;
      res.coefficients = c;

      if (!std::isfinite(update) || !detail::finite(c)) {
        res.diagnostic = "non-finite iterate at iteration " + std::to_string(it);
        return res;
      }
      if (update <= cfg.tol) {
        res.converged = true;
        return res;
      }
    }
    res.diagnostic = "no convergence within " + std::to_string(cfg.max_iter) + " iterations";
  } catch (const DomainError &e) {
    res.diagnostic = std::string("domain error: ") + e.what();
  }
  return res;
}

inline SolveResult solve(const SBVProblem &p, const SolverConfig &cfg) {
  return cfg.method == Method::QA ? solve_qa(p, cfg) : solve_na(p, cfg);
}

/// {0} followed by the collocation points, plus t = 1 for a Robin condition.
inline Vector report_grid(const CollocationSystem &sys) {
  Vector g{0.0};
  g.insert(g.end(), sys.points.begin(), sys.points.end());
  if (sys.bc.kind == BoundaryCase::NeumannRobin) g.push_back(1.0);
  return g;
}

inline Vector values_on(const SolveResult &r, std::span<const double> grid) {
  Vector v;
  v.reserve(grid.size());
  for (double t : grid) v.push_back(r.at(t).y);
  return v;
}

struct ErrorNorms {
  double linf = 0.0;
  double l2 = 0.0;
};

/// Max and root-sum-square absolute error over the given grid values.
inline ErrorNorms error_norms(std::span<const double> grid, std::span<const double> values,
                              const std::function<double(double)> &exact) {
  if (grid.size() != values.size()) throw std::invalid_argument("error_norms: size mismatch");
  ErrorNorms e;
  double sq = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double d = std::abs(exact(grid[j]) - values[j]);
    e.linf = std::max(e.linf, d);
    sq += d * d;
  }
  e.l2 = std::sqrt(sq);
  return e;
}

} // namespace wsbvp
