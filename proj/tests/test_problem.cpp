#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "wsbvp/benchmarks.hpp"
#include "wsbvp/problem.hpp"

using namespace wsbvp;

namespace {

// Sixth-order central differences of an exact solution.
StateTriple fd_triple(const std::function<double(double)> &y, double t, double h = 1e-3) {
  const double f1 = y(t + h), b1 = y(t - h), f2 = y(t + 2 * h), b2 = y(t - 2 * h), f3 = y(t + 3 * h),
               b3 = y(t - 3 * h), c = y(t);
  const double d1 = (45 * (f1 - b1) - 9 * (f2 - b2) + (f3 - b3)) / (60 * h);
  const double d2 = (270 * (f1 + b1) - 27 * (f2 + b2) + 2 * (f3 + b3) - 490 * c) / (180 * h * h);
  return {t, c, d1, d2};
}

} // namespace

TEST(BoundaryCondition, RobinNeedsNonzeroA) {
  EXPECT_THROW(BoundaryCondition::neumann_robin(0.0, 0.0, 1.0, 0.0), InvalidBoundaryCondition);
  EXPECT_NO_THROW(BoundaryCondition::neumann_robin(0.0, 2.0, 1.0, 0.0));
  BoundaryCondition raw{BoundaryCase::NeumannRobin, 0.0, 0.0, 0.0, 1.0};
  EXPECT_THROW(raw.validate(), InvalidBoundaryCondition);
}

TEST(Residual, ThermalExplosionExactSolution) {
  const auto p = make_thermal_explosion().problem;
  // symbolic derivatives of y = 2 ln(C) - 2 ln(D t^2 + 1), D = 3 - 2 sqrt(2)
  const double D = 3.0 - 2.0 * std::sqrt(2.0), t = 0.5;
  const double q = D * t * t + 1.0;
  const StateTriple s{t, (*p.exact)(t), -4.0 * D * t / q, -4.0 * D * (1.0 - D * t * t) / (q * q)};
  EXPECT_NEAR(residual(p, s), 0.0, 1e-9);
  EXPECT_NEAR(residual(p, fd_triple(*p.exact, t)), 0.0, 1e-9);
}

TEST(Residual, StellarExactSolution) {
  const auto p = make_stellar().problem;
  const double t = 0.5, r3 = std::sqrt(3.0), q = 3.0 + t * t;
  const StateTriple s{t, std::sqrt(3.0 / q), -r3 * t * std::pow(q, -1.5),
                      -r3 * (std::pow(q, -1.5) - 3.0 * t * t * std::pow(q, -2.5))};
  EXPECT_NEAR(residual(p, s), 0.0, 1e-9);
}

TEST(Residual, ConstantsSolveTheHomogeneousOperator) {
  SBVProblem p{"zero", 2.0, [](double, double) { return 0.0; }, [](double, double) { return 0.0; }, {}, {}};
  EXPECT_EQ(residual(p, {0.3, 4.2, 0.0, 0.0}), 0.0);
  EXPECT_THROW(residual(p, {0.0, 1.0, 0.0, 0.0}), SingularPointError);
}

TEST(Residual, ExactSolutionsAtRandomInteriorPoints) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  for (const auto &bc : {make_stellar(), make_thermal_explosion()}) {
    for (int k = 0; k < 50; ++k) {
      const double t = u(rng);
      EXPECT_LT(std::abs(residual(bc.problem, fd_triple(*bc.problem.exact, t))), 1e-8) << bc.problem.name << " t=" << t;
    }
  }
}

TEST(LinearizedRhs, Examples) {
  const auto te = make_thermal_explosion().problem;
  auto [r0, c0] = linearized_rhs(te, 0.4, 0.0);
  EXPECT_DOUBLE_EQ(r0, -1.0);
  EXPECT_DOUBLE_EQ(c0, -1.0);

  const auto st = make_stellar().problem;
  auto [r1, c1] = linearized_rhs(st, 0.4, 1.0);
  EXPECT_DOUBLE_EQ(r1, 4.0);
  EXPECT_DOUBLE_EQ(c1, -5.0);

  const auto mem = make_membrane().problem;
  auto [r2, c2] = linearized_rhs(mem, 0.4, 1.0);
  EXPECT_DOUBLE_EQ(r2, 0.125);
  EXPECT_DOUBLE_EQ(c2, 0.25);

  EXPECT_THROW(linearized_rhs(st, 0.0, 1.0), SingularPointError);
}

TEST(LinearizedRhs, ExactForAffineNonlinearity) {
  // f = c0 + c1 y: L y + c1 y = -c0 from every linearization point.
  const double a0 = 0.7, a1 = -2.5;
  SBVProblem p{"affine", 1.0, [=](double, double y) { return a0 + a1 * y; }, [=](double, double) { return a1; }, {}, {}};
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 20; ++k) {
    const auto [rhs, coef] = linearized_rhs(p, 0.5, u(rng));
    EXPECT_NEAR(rhs, -a0, 1e-14);
    EXPECT_EQ(coef, -a1);
  }
}
