#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "wsbvp/hermite.hpp"

using namespace wsbvp;

namespace {

const double kPiQuarter = std::pow(std::numbers::pi, -0.25);

// Independent evaluation of H_m by the three-term recurrence in double.
double hermite_direct(unsigned m, double x) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (m == 0) return h0;
  for (unsigned j = 1; j < m; ++j) {
    const double h2 = 2.0 * x * h1 - 2.0 * j * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

} // namespace

TEST(HermitePolynomial, LowOrders) {
  EXPECT_EQ(hermite_polynomial(0), Polynomial<Rational>{Rational(1)});
  EXPECT_EQ(hermite_polynomial(1), (Polynomial<Rational>{Rational(0), Rational(2)}));
  const auto h2 = hermite_polynomial(2);
  EXPECT_EQ(h2, (Polynomial<Rational>{Rational(-2), Rational(0), Rational(4)}));
  EXPECT_EQ(h2.evaluate(Rational(1)), Rational(2));
}

TEST(HermitePolynomial, DegreeAndLeadingCoefficient) {
  for (unsigned m = 0; m <= 20; ++m) {
    const auto h = hermite_polynomial(m);
    ASSERT_EQ(h.degree(), static_cast<int>(m));
    EXPECT_EQ(h.coeffs().back(), Rational(boost::multiprecision::cpp_int(1) << m));
  }
}

TEST(HermitePolynomial, RecurrenceHoldsAtRandomPoints) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (unsigned m = 1; m <= 12; ++m) {
    const auto lo = hermite_polynomial(m - 1).cast<double>();
    const auto mid = hermite_polynomial(m).cast<double>();
    const auto hi = hermite_polynomial(m + 1).cast<double>();
    for (int k = 0; k < 100; ++k) {
      const double t = u(rng);
      const double lhs = hi.evaluate(t);
      const double rhs = 2.0 * t * mid.evaluate(t) - 2.0 * m * lo.evaluate(t);
      EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(HermitePolynomial, DerivativeIdentityIsExact) {
  for (unsigned m = 0; m <= 15; ++m)
    EXPECT_EQ(hermite_polynomial(m + 1).derivative(), hermite_polynomial(m) * Rational(2 * (m + 1)));
}

TEST(HermitePolynomial, WeightedOrthogonality) {
  const auto h1 = hermite_polynomial(1).cast<double>();
  const auto h2 = hermite_polynomial(2).cast<double>();
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double y) { return h1.evaluate(y) * h2.evaluate(y) * std::exp(-y * y); }, -4.0, 4.0, 10, 1e-14);
  EXPECT_NEAR(v, 0.0, 1e-6);
}

TEST(HermiteWavelet, NormalizationForFirstLevel) {
  EXPECT_NEAR(hermite_normalization({1, 1, 0}), kPiQuarter, 1e-15);
  // The constant follows the translation index, so it is the same for every order.
  EXPECT_EQ(hermite_normalization({1, 1, 5}), hermite_normalization({1, 1, 0}));
  EXPECT_NEAR(hermite_normalization({2, 2, 0}), 2.0 / std::sqrt(2.0 * 4.0 * std::sqrt(std::numbers::pi)), 1e-15);
}

TEST(HermiteWavelet, Examples) {
  const auto psi0 = hermite_wavelet({1, 1, 0});
  for (double t : {0.0, 0.3, 0.999, 1.0}) EXPECT_NEAR(psi0(t), kPiQuarter, 1e-15);
  EXPECT_EQ(hermite_wavelet({1, 1, 1})(0.5), 0.0);
  // direct substitution: pi^{-1/4} H_2(2 * 0.75 - 1) = pi^{-1/4} (4 * 0.25 - 2)
  EXPECT_NEAR(hermite_wavelet({1, 1, 2})(0.75), kPiQuarter * (4.0 * 0.25 - 2.0), 1e-15);
  EXPECT_NEAR(hermite_wavelet({1, 1, 2})(0.75), -kPiQuarter, 1e-15);
}

TEST(HermiteWavelet, SupportOnFinerLevels) {
  const HermiteWaveletIndex idx{2, 2, 3}; // support [1/2, 1)
  const auto psi = hermite_wavelet(idx);
  EXPECT_EQ(psi(0.25), 0.0);
  EXPECT_EQ(psi(0.4999), 0.0);
  const double t = 0.8;
  EXPECT_NEAR(psi(t), hermite_normalization(idx) * hermite_direct(3, 4.0 * t - 3.0), 1e-12);
  EXPECT_THROW(hermite_wavelet({2, 3, 0}), std::invalid_argument);
  EXPECT_THROW(hermite_wavelet({1, 0, 0}), std::invalid_argument);
}

TEST(IntegrateWavelet, ConstantWavelet) {
  const auto j1 = integrate_wavelet({1, 1, 0}, 1);
  for (double t : {0.0, 0.25, 0.7, 1.0}) EXPECT_NEAR(j1(t), kPiQuarter * t, 1e-15);
  EXPECT_NEAR(integrate_wavelet({1, 1, 0}, 2)(1.0), kPiQuarter / 2.0, 1e-15);
  EXPECT_THROW(integrate_wavelet({1, 1, 0}, 0), std::invalid_argument);
}

TEST(IntegrateWavelet, DoubleIntegralMatchesQuadratureOracle) {
  // J^2 psi(1) = int_0^1 (1 - s) psi(s) ds, psi(s) = pi^{-1/4} H_3(2s - 1).
  const double oracle = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [](double s) { return (1.0 - s) * kPiQuarter * hermite_direct(3, 2.0 * s - 1.0); }, 0.0, 1.0, 15, 1e-15);
  EXPECT_NEAR(integrate_wavelet({1, 1, 3}, 2)(1.0), oracle, 1e-12);
}

TEST(IntegrateWavelet, DifferentiatesBackNumerically) {
  for (const HermiteWaveletIndex idx : {HermiteWaveletIndex{1, 1, 4}, HermiteWaveletIndex{2, 1, 2},
                                        HermiteWaveletIndex{2, 2, 5}, HermiteWaveletIndex{3, 3, 3}}) {
    const auto psi = hermite_wavelet(idx);
    const auto j1 = integrate_wavelet(idx, 1);
    const auto &bps = j1.shape.breakpoints();
    for (std::size_t p = 0; p + 1 < bps.size(); ++p) {
      const double lo = to_double(bps[p]), hi = to_double(bps[p + 1]);
      for (double frac : {0.2, 0.5, 0.8}) {
        const double t = lo + frac * (hi - lo);
        const double h = 1e-5 * (hi - lo);
        const double d = (j1(t + h) - j1(t - h)) / (2.0 * h);
        EXPECT_NEAR(d, psi(t), 1e-8 * std::max(1.0, std::abs(psi(t))));
      }
    }
  }
}

TEST(IntegrateWavelet, RepeatedIntegrationComposes) {
  for (unsigned m = 0; m < 8; ++m) {
    const HermiteWaveletIndex idx{2, 1, m};
    EXPECT_EQ(integrate_wavelet(idx, 2).shape, integrate_wavelet(idx, 1).shape.integrate());
    EXPECT_EQ(integrate_wavelet(idx, 3).shape, integrate_wavelet(idx, 2).shape.integrate());
  }
}

TEST(IntegrateWavelet, TailPastSupportIsTheContinuation) {
  // psi_{1,0} at k = 2 lives on [0, 1/2); its integrals keep growing afterwards.
  const HermiteWaveletIndex idx{2, 1, 0};
  const double c = hermite_normalization(idx);
  const auto j1 = integrate_wavelet(idx, 1);
  const auto j2 = integrate_wavelet(idx, 2);
  EXPECT_NEAR(j1(0.75), c * 0.5, 1e-15);
  EXPECT_NEAR(j1(1.0), c * 0.5, 1e-15);
  // J^2 = t^2/2 on the support, then 1/8 + (t - 1/2)/2.
  EXPECT_NEAR(j2(0.25), c * 0.03125, 1e-15);
  EXPECT_NEAR(j2(1.0), c * (0.125 + 0.25), 1e-15);

  // degree m + nu on the support and nu - 1 on the tail
  const auto j2m3 = integrate_wavelet({2, 1, 3}, 2);
  EXPECT_EQ(j2m3.shape.pieces()[0].degree(), 5);
  EXPECT_LE(j2m3.shape.pieces()[1].degree(), 1);
  const auto front = integrate_wavelet({2, 2, 3}, 2);
  EXPECT_TRUE(front.shape.pieces()[0].is_zero());
}

TEST(IntegrateWavelet, ContinuityOfDerivativesAtSupportEnds) {
  const HermiteWaveletIndex idx{3, 2, 4}; // support [1/4, 1/2)
  const unsigned nu = 3;
  auto shape = integrate_wavelet(idx, nu).shape;
  for (unsigned d = 0; d < nu; ++d) {
    for (const Rational &b : {Rational(1, 4), Rational(1, 2)}) {
      const auto &bps = shape.breakpoints();
      const auto it = std::find(bps.begin(), bps.end(), b);
      ASSERT_NE(it, bps.end());
      const std::size_t j = static_cast<std::size_t>(it - bps.begin());
      EXPECT_EQ(shape.pieces()[j - 1].evaluate(Rational(1)), shape.pieces()[j].evaluate(Rational(-1)))
          << "derivative " << d;
    }
    shape = shape.differentiate();
  }
}
