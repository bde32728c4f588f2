#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsbvp/polynomial.hpp"
#include "wsbvp/problem.hpp"

namespace wsbvp {

/// Rule for the default nodal initial vector: every node set to `value`.
struct InitRule {
  double value = 0.0;
  std::vector<double> nodes(std::size_t n) const { return std::vector<double>(n, value); }
};

/// One tabulated value: solution of `method` at `grid_point`.
struct GoldenRow {
  double grid_point = 0.0;
  std::string method; // HWQA, HWNA, HeWQA, HeWNA or Exact
  double value = 0.0;
  std::string source_table;
};

struct BenchmarkCase {
  SBVProblem problem;
  std::map<std::string, double> params;
  InitRule default_init;
  std::string golden_table; // fixture id, empty when there is none
  std::vector<GoldenRow> golden_rows;
};

/// Modified Arrhenius nonlinearity f = B exp(-A / (c^n + y^n)^{1/n}), y'(0) = 0, y(1) = 0.
inline BenchmarkCase make_arrhenius(int n, double k_g, double A = 1.0, double B = 1.0, double c = 1.0) {
  if (n < 1) throw std::invalid_argument("make_arrhenius: n must be >= 1");
  const double cn = std::pow(c, n);
  auto base = [=](double y) { return cn + std::pow(y, n); };
  BenchmarkCase bc;
  bc.problem.name = "arrhenius";
  bc.problem.k_g = k_g;
  bc.problem.f = [=](double, double y) { return B * std::exp(-A / std::pow(base(y), 1.0 / n)); };
  bc.problem.f_y = [=](double, double y) {
    const double s = base(y);
    const double f = B * std::exp(-A / std::pow(s, 1.0 / n));
    return f * A * std::pow(y, n - 1) * std::pow(s, -1.0 - 1.0 / n);
  };
  bc.problem.bc = BoundaryCondition::neumann_dirichlet(0.0, 0.0);
  bc.params = {{"A", A}, {"B", B}, {"c", c}, {"n", n}, {"k_g", k_g}};
  bc.default_init = {0.0};
  static const std::map<std::pair<int, int>, std::string> tables{
      {{1, 1}, "table01"}, {{1, 2}, "table02"}, {{2, 1}, "table03"},
      {{2, 2}, "table04"}, {{3, 1}, "table05"}, {{3, 2}, "table06"}};
  if (A == 1.0 && B == 1.0 && c == 1.0 && (k_g == 1.0 || k_g == 2.0)) {
    if (auto it = tables.find({n, static_cast<int>(k_g)}); it != tables.end()) bc.golden_table = it->second;
  }
  return bc;
}

/// y'' + (2/t) y' + y^5 = 0, y'(0) = 0, y(1) = sqrt(3/4).
inline BenchmarkCase make_stellar() {
  BenchmarkCase bc;
  bc.problem.name = "stellar";
  bc.problem.k_g = 2.0;
  bc.problem.f = [](double, double y) { return std::pow(y, 5); };
  bc.problem.f_y = [](double, double y) { return 5.0 * std::pow(y, 4); };
  bc.problem.bc = BoundaryCondition::neumann_dirichlet(0.0, std::sqrt(0.75));
  bc.problem.exact = [](double t) { return std::sqrt(3.0 / (3.0 + t * t)); };
  bc.params = {{"k_g", 2.0}};
  bc.default_init = {std::sqrt(0.75)};
  bc.golden_table = "table07";
  return bc;
}

/// y'' + (1/t) y' + e^y = 0, y'(0) = 0, y(1) = 0.
inline BenchmarkCase make_thermal_explosion() {
  BenchmarkCase bc;
  bc.problem.name = "thermal-explosion";
  bc.problem.k_g = 1.0;
  bc.problem.f = [](double, double y) { return std::exp(y); };
  bc.problem.f_y = [](double, double y) { return std::exp(y); };
  bc.problem.bc = BoundaryCondition::neumann_dirichlet(0.0, 0.0);
  bc.problem.exact = [](double t) {
    const double r2 = std::sqrt(2.0);
    return 2.0 * std::log((4.0 - 2.0 * r2) / ((3.0 - 2.0 * r2) * t * t + 1.0));
  };
  bc.params = {{"k_g", 1.0}};
  bc.default_init = {0.0};
  bc.golden_table = "table08";
  return bc;
}

/// y'' + (k_g/t) y' + 1/(8 y^2) - 1/2 = 0, y'(0) = 0, y(1) = 1.
///
/// The reference tables for this problem are reproduced with k_g = 3, the
/// usual form of the shallow membrane cap equation; that is the default.
/// f is singular at y = 0; values with |y| < 1e-8 raise DomainError, which
/// the solvers report as non-convergence.
inline BenchmarkCase make_membrane(double k_g = 3.0) {
  auto guard = [](double y) {
    if (std::abs(y) < 1e-8) throw DomainError("membrane: f is singular at y = 0");
  };
  BenchmarkCase bc;
  bc.problem.name = "membrane";
  bc.problem.k_g = k_g;
  bc.problem.f = [guard](double, double y) {
    guard(y);
    return 1.0 / (8.0 * y * y) - 0.5;
  };
  bc.problem.f_y = [guard](double, double y) {
    guard(y);
    return -1.0 / (4.0 * y * y * y);
  };
  bc.problem.bc = BoundaryCondition::neumann_dirichlet(0.0, 1.0);
  bc.params = {{"k_g", k_g}};
  bc.default_init = {1.0};
  bc.golden_table = "table09";
  return bc;
}

/// y'' + (2/t) y' + e^{-y} = 0, y'(0) = 0, 2 y(1) + y'(1) = 0.
inline BenchmarkCase make_human_head() {
  BenchmarkCase bc;
  bc.problem.name = "human-head";
  bc.problem.k_g = 2.0;
  bc.problem.f = [](double, double y) { return std::exp(-y); };
  bc.problem.f_y = [](double, double y) { return -std::exp(-y); };
  bc.problem.bc = BoundaryCondition::neumann_robin(0.0, 2.0, 1.0, 0.0);
  bc.params = {{"k_g", 2.0}, {"a", 2.0}, {"b", 1.0}};
  bc.default_init = {0.0};
  bc.golden_table = "table10";
  return bc;
}

/// Problem whose exact solution is the given polynomial:
/// f(t, y) = -(u'' + (k_g/t) u') + (y - u(t)), so f_y = 1.
///
/// The boundary data are taken from u itself. Neumann cases need u'(0) = 0,
/// which also keeps (k_g/t) u' polynomial.
inline BenchmarkCase make_manufactured(const Polynomial<double> &u, double k_g, BoundaryCase kind) {
  const Polynomial<double> du = u.derivative();
  const Polynomial<double> d2u = du.derivative();
  const double du0 = du.evaluate(0.0);
  const bool neumann = kind != BoundaryCase::DirichletDirichlet;
  if (neumann && du0 != 0.0) throw InvalidManufactured("make_manufactured: Neumann case needs u'(0) = 0");
  if (k_g != 0.0 && du0 != 0.0)
    throw InvalidManufactured("make_manufactured: k_g/t u' is unbounded unless u'(0) = 0");

  // (k_g/t) u'(t) as a polynomial: u' has a root at 0, so drop its constant term.
  std::vector<double> q;
  for (std::size_t p = 1; p < du.coeffs().size(); ++p) q.push_back(du.coeffs()[p]);
  const Polynomial<double> du_over_t(std::move(q));
  const Polynomial<double> source = d2u + du_over_t * k_g;

  BenchmarkCase bc;
  bc.problem.name = "manufactured";
  bc.problem.k_g = k_g;
  bc.problem.f = [=](double t, double y) { return -source.evaluate(t) + (y - u.evaluate(t)); };
  bc.problem.f_y = [](double, double) { return 1.0; };
  bc.problem.exact = [=](double t) { return u.evaluate(t); };
  switch (kind) {
  case BoundaryCase::NeumannDirichlet:
    bc.problem.bc = BoundaryCondition::neumann_dirichlet(du0, u.evaluate(1.0));
    break;
  case BoundaryCase::DirichletDirichlet:
    bc.problem.bc = BoundaryCondition::dirichlet_dirichlet(u.evaluate(0.0), u.evaluate(1.0));
    break;
  case BoundaryCase::NeumannRobin:
    bc.problem.bc = BoundaryCondition::neumann_robin(du0, 2.0, 1.0, 2.0 * u.evaluate(1.0) + du.evaluate(1.0));
    break;
  }
  bc.params = {{"k_g", k_g}};
  bc.default_init = {0.0};
  return bc;
}

inline const std::vector<std::string> &problem_keys() {
  static const std::vector<std::string> keys{"arrhenius", "stellar", "thermal-explosion", "membrane",
                                             "human-head"};
  return keys;
}

/// Registry lookup. "arrhenius" takes n and k_g (defaults 1, 1).
inline std::optional<BenchmarkCase> make_benchmark(const std::string &key, int n = 1, double k_g = 1.0) {
  if (key == "arrhenius") return make_arrhenius(n, k_g);
  if (key == "stellar") return make_stellar();
  if (key == "thermal-explosion") return make_thermal_explosion();
  if (key == "membrane") return make_membrane();
  if (key == "human-head") return make_human_head();
  return std::nullopt;
}

} // namespace wsbvp
