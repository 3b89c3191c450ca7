#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "apsheat/ball_dirac.hpp"
#include "apsheat/errors.hpp"
#include "apsheat/zeta_route.hpp"

using namespace apsheat;
using ball::TestFunction;

namespace {

constexpr double kPi = std::numbers::pi;
using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

TEST(BallSetup, DerivedConstants) {
  const auto s = ball::BallSetup::make(5);
  EXPECT_EQ(s.nu, specfun::BesselOrder(3, 2));
  EXPECT_EQ(s.theta, Rational(2));
  EXPECT_EQ(ball::BallSetup::make(2).nu, specfun::BesselOrder(0));
  EXPECT_THROW(ball::BallSetup::make(1), DomainError);
  EXPECT_EQ(ball::parse_test_function("F2"), TestFunction::F2);
  EXPECT_THROW(ball::parse_test_function("f3"), DomainError);
}

TEST(BallSpectrum, ThreeBallClosedForms) {
  const auto s = ball::BallSetup::make(3);
  const auto f1 = ball::build_spectral_data(s, TestFunction::F1, 2);
  EXPECT_NEAR(f1.eigenvalues[0], kPi * kPi, 1e-11);
  EXPECT_NEAR(f1.eigenvalues[1], 4 * kPi * kPi, 1e-11);
  EXPECT_NEAR(f1.weights[0], 2 / (kPi * kPi), 1e-14);
  EXPECT_NEAR(f1.weights[1], 2 / (4 * kPi * kPi), 1e-14);
  const auto f2 = ball::build_spectral_data(s, TestFunction::F2, 1);
  EXPECT_NEAR(f2.weights[0], 18 / std::pow(kPi, 4), 1e-14);
  EXPECT_FALSE(f1.satisfies_boundary_condition);
  EXPECT_TRUE(f2.satisfies_boundary_condition);
}

// sigma = C int_0^1 r^{m-1} (radial part of f) (radial part of the eigenfunction) dr
// with C = 1 / J_{m/2}(mu): 1/mu for F1 and m/mu^2 for F2.
TEST(BallSpectrum, WeightsMatchQuadratureOracle) {
  for (int m = 2; m <= 6; ++m) {
    const auto s = ball::BallSetup::make(m);
    const double nu = m / 2.0 - 1.0;
    const auto f1 = ball::build_spectral_data(s, TestFunction::F1, 5);
    const auto f2 = ball::build_spectral_data(s, TestFunction::F2, 5);
    for (std::size_t k = 0; k < 5; ++k) {
      const double mu = std::sqrt(f1.eigenvalues[k]);
      const double C = 1.0 / boost::math::cyl_bessel_j(nu + 1, mu);
      const double s1 =
          C * GK::integrate([&](double r) { return std::pow(r, m / 2.0) * boost::math::cyl_bessel_j(nu, mu * r); },
                            0.0, 1.0, 15);
      const double s2 = C * GK::integrate(
                                [&](double r) { return std::pow(r, m / 2.0 + 1) * boost::math::cyl_bessel_j(nu + 1, mu * r); },
                                0.0, 1.0, 15);
      EXPECT_NEAR(f1.weights[k], 2 * s1 * s1, 1e-12 * f1.weights[k]) << m << " " << k;
      EXPECT_NEAR(f2.weights[k], 2 * s2 * s2, 1e-11 * f2.weights[k]) << m << " " << k;
    }
  }
}

// Radial normalization: C^2 int_0^1 r (J_{nu}^2 + J_{nu+1}^2)(mu r) dr = 1.
TEST(BallSpectrum, RadialNormalizationIsUnit) {
  for (int m = 2; m <= 6; ++m) {
    const double nu = m / 2.0 - 1.0;
    const auto z = specfun::bessel_j_zeros(ball::BallSetup::make(m).nu, 4);
    for (double mu : z.zeros) {
      const double C = 1.0 / boost::math::cyl_bessel_j(nu + 1, mu);
      const double n = GK::integrate(
          [&](double r) {
            const double a = boost::math::cyl_bessel_j(nu, mu * r), b = boost::math::cyl_bessel_j(nu + 1, mu * r);
            return r * (a * a + b * b);
          },
          0.0, 1.0, 15);
      EXPECT_NEAR(C * C * n, 1.0, 1e-12) << m;
    }
  }
}

TEST(BallSpectrum, WeightSumsMatchNorms) {
  for (int m = 2; m <= 6; ++m) {
    const auto s = ball::BallSetup::make(m);
    for (TestFunction f : {TestFunction::F1, TestFunction::F2}) {
      const auto data = ball::build_spectral_data(s, f, 200);
      EXPECT_NEAR(zeta::zeta_series(data, 0.0), ball::l2_norm_squared(s, f), 1e-8);
      for (std::size_t k = 1; k < data.size(); ++k) {
        EXPECT_LT(data.weights[k], data.weights[k - 1]);
        EXPECT_GT(data.eigenvalues[k], data.eigenvalues[k - 1]);
      }
    }
  }
}

TEST(BallSpectrum, NormsByQuadrature) {
  for (int m = 2; m <= 6; ++m) {
    const auto s = ball::BallSetup::make(m);
    EXPECT_EQ(ball::l2_norm_squared_exact(s, TestFunction::F1), Rational(1, m));
    EXPECT_EQ(ball::l2_norm_squared_exact(s, TestFunction::F2), Rational(1, m + 2));
    EXPECT_NEAR(ball::l2_norm_squared(s, TestFunction::F2),
                GK::integrate([m](double r) { return r * r * std::pow(r, m - 1); }, 0.0, 1.0), 1e-15);
  }
  EXPECT_DOUBLE_EQ(ball::l2_norm_squared(ball::BallSetup::make(3), TestFunction::F1), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(ball::l2_norm_squared(ball::BallSetup::make(4), TestFunction::F2), 1.0 / 6.0);
}

TEST(BallSpectrum, ComputedZerosRespectTailModel) {
  for (int m = 2; m <= 8; ++m) {
    const auto s = ball::BallSetup::make(m);
    const auto tail = ball::tail_model(s, TestFunction::F1);
    const auto z = specfun::bessel_j_zeros(s.nu, 500);
    for (std::size_t k = tail.valid_from; k <= z.zeros.size(); ++k) {
      const double x = tail.scale * (k + tail.offset);
      EXPECT_GE(z.zeros[k - 1], x);
      EXPECT_LE(z.zeros[k - 1] * z.zeros[k - 1], tail.eigenvalue_ratio * x * x);
    }
  }
}

TEST(BoundaryData, AnsatzInputs) {
  for (int m = 2; m <= 6; ++m) {
    const auto s = ball::BallSetup::make(m);
    const auto a = ball::boundary_data(s, TestFunction::F1);
    EXPECT_EQ(*a.pi_pair, 1.0);
    EXPECT_EQ(*a.laa_pi_pair, m - 1.0);
    EXPECT_EQ(*a.theta_pi_pair, (m - 1) / 2.0);
    EXPECT_EQ(*a.interior_pp, 0.0);
    const auto b = ball::boundary_data(s, TestFunction::F2);
    EXPECT_EQ(*b.pi_pair, 0.0);
    EXPECT_EQ(*b.laa_pi_pair, 0.0);
    EXPECT_NEAR(*b.interior_pp, m, 1e-13);
  }
}

TEST(BoundaryData, ScalarBallGeometry) {
  EXPECT_NEAR(ball::sphere_volume(2), 2 * kPi, 1e-15);
  EXPECT_NEAR(ball::sphere_volume(3), 4 * kPi, 1e-14);
  const auto g = ball::scalar_ball_geometry(3);
  EXPECT_NEAR(*g.pair, 4 * kPi / 3, 1e-14);
  EXPECT_NEAR(*g.laa_pair, 2 * 4 * kPi, 1e-13);
}

}  // namespace
