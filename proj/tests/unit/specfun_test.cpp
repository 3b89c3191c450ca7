#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "apsheat/bessel.hpp"
#include "apsheat/bessel_zeros.hpp"
#include "apsheat/errors.hpp"
#include "apsheat/log_series.hpp"
#include "oracle_util.hpp"

using namespace apsheat;
using namespace apsheat::specfun;

namespace {

constexpr double kPi = std::numbers::pi;

TEST(BesselOrder, RejectsNegative) {
  EXPECT_THROW(BesselOrder(-1, 2), DomainError);
  EXPECT_THROW(BesselOrder::parse("-1"), DomainError);
  EXPECT_EQ(BesselOrder::parse("3/2"), BesselOrder(3, 2));
  EXPECT_EQ(BesselOrder::parse("1.5"), BesselOrder(3, 2));
  EXPECT_TRUE(BesselOrder(1, 2).is_half_odd_integer());
}

TEST(BesselJ, TrivialValues) {
  EXPECT_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_j(2.0, 0.0), 0.0);
  EXPECT_NEAR(bessel_j(0.5, kPi), 0.0, 1e-13);
  EXPECT_NEAR(bessel_j(0.0, 2.404825557695773), 0.0, 1e-12);
  EXPECT_THROW(bessel_j(0.0, -1.0), DomainError);
}

TEST(BesselJ, HalfIntegerClosedForm) {
  for (double x = 0.01; x < 1500.0; x *= 1.13) {
    const double exact = std::sqrt(2.0 / (kPi * x)) * std::sin(x);
    EXPECT_NEAR(bessel_j(0.5, x), exact, 1e-13 * std::fabs(exact) + 1e-17) << x;
  }
}

TEST(BesselJ, AgreesWithHighPrecisionOracle) {
  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0, 4.5, 10.0, 25.0, 60.0}) {
    for (double x = 0.05; x <= 2000.0; x *= 1.09) {
      const double ref = oracle::bessel_j(nu, x);
      if (ref == 0.0) continue;
      EXPECT_LE(std::fabs(bessel_j(nu, x) - ref), 1e-13 * std::fabs(ref)) << "nu=" << nu << " x=" << x;
    }
  }
}

TEST(BesselJ, RegimeCrossoversAreContinuous) {
  for (double nu : {0.0, 0.5, 1.0, 2.0, 5.5, 10.0}) {
    const double s = bessel_j_in_regime(nu, kSeriesLimit, BesselRegime::PowerSeries);
    const double m = bessel_j_in_regime(nu, kSeriesLimit, BesselRegime::MillerRecurrence);
    EXPECT_LE(std::fabs(s - m), 1e-11 * std::fabs(s)) << nu;
    const double m2 = bessel_j_in_regime(nu, kHankelLimit, BesselRegime::MillerRecurrence);
    const double h = bessel_j_in_regime(nu, kHankelLimit, BesselRegime::HankelForward);
    EXPECT_LE(std::fabs(m2 - h), 1e-11 * std::fabs(h)) << nu;
  }
}

TEST(BesselJ, DerivativeMatchesRecurrence) {
  for (double nu : {0.0, 1.0, 2.5})
    for (double x : {0.7, 5.0, 40.0}) {
      const double ref = 0.5 * (oracle::bessel_j(nu + 1.0, x) * -1.0 + (nu == 0.0 ? -oracle::bessel_j(1.0, x)
                                                                                     : oracle::bessel_j(nu - 1.0, x)));
      EXPECT_NEAR(bessel_j_derivative(nu, x), ref, 1e-13);
    }
}

TEST(BesselI, Values) {
  EXPECT_EQ(bessel_i(0.0, 0.0), 1.0);
  EXPECT_NEAR(bessel_i(0.5, 1.0), 0.937674888245488, 1e-13);
  for (double x = 0.1; x < 700.0; x *= 1.2) {
    const double exact = std::sqrt(2.0 / (kPi * x)) * std::sinh(x);
    EXPECT_LE(std::fabs(bessel_i(0.5, x) - exact), 1e-13 * exact) << x;
  }
  for (double nu : {0.0, 1.5, 3.0, 10.0})
    for (double x = 0.2; x < 600.0; x *= 1.3) {
      const double ref = oracle::bessel_i(nu, x);
      EXPECT_LE(std::fabs(bessel_i(nu, x) - ref), 1e-13 * ref) << nu << " " << x;
    }
  EXPECT_THROW(bessel_i(0.0, -1.0), DomainError);
  EXPECT_THROW(bessel_i(0.0, 800.0), OverflowError);
}

TEST(BesselI, HalfOrderLogAsymptoticVanishes) {
  for (double x : {20.0, 100.0, 1000.0}) {
    const double residual = log_bessel_i(0.5, x) - (x - 0.5 * std::log(2 * kPi * x));
    EXPECT_NEAR(residual, std::log1p(-std::exp(-2 * x)), 1e-13);
  }
}

TEST(BesselZeros, HalfOrderIsMultiplesOfPi) {
  const auto z = bessel_j_zeros(BesselOrder(1, 2), 3);
  ASSERT_EQ(z.zeros.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_NEAR(z.zeros[k], (k + 1) * kPi, 1e-12);
}

TEST(BesselZeros, FirstZerosMatchBisection) {
  const double j01 = oracle::bisect([](double x) { return static_cast<double>(oracle::series_j(0.0, x)); }, 2.0, 3.0);
  EXPECT_NEAR(bessel_j_zeros(BesselOrder(0), 1).zeros[0], j01, 1e-12);
  EXPECT_NEAR(j01, 2.404825557695773, 1e-12);
  const double j11 = oracle::bisect([](double x) { return static_cast<double>(oracle::series_j(1.0, x)); }, 3.0, 4.5);
  const auto z1 = bessel_j_zeros(BesselOrder(1), 1);
  EXPECT_NEAR(z1.zeros[0], j11, 1e-12);
  EXPECT_GT(z1.zeros[0], j01);
  EXPECT_LT(z1.zeros[0], bessel_j_zeros(BesselOrder(0), 2).zeros[1]);
}

TEST(BesselZeros, ResidualsSpacingAndInterlacing) {
  for (auto nu : {BesselOrder(0), BesselOrder(1, 2), BesselOrder(1), BesselOrder(3, 2), BesselOrder(2),
                  BesselOrder(7), BesselOrder(20)}) {
    const auto z = bessel_j_zeros(nu, 300);
    const auto w = bessel_j_zeros(nu.shifted(1), 300);
    EXPECT_LE(z.residual_bound, kZeroResidualLimit);
    for (std::size_t k = 0; k < z.zeros.size(); ++k) {
      EXPECT_LE(std::fabs(oracle::bessel_j(nu.value(), z.zeros[k])), 2e-12) << k;
      if (k > 0) {
        EXPECT_GT(z.zeros[k] - z.zeros[k - 1], 2.0);
        // The spacing tends to pi; for large orders it starts well above.
        if (k >= 50) EXPECT_LT(z.zeros[k] - z.zeros[k - 1], kPi + 0.1);
      }
      // j_{nu,k} < j_{nu+1,k} < j_{nu,k+1}
      EXPECT_LT(z.zeros[k], w.zeros[k]);
      if (k + 1 < z.zeros.size()) EXPECT_LT(w.zeros[k], z.zeros[k + 1]);
    }
  }
  EXPECT_THROW(bessel_j_zeros(BesselOrder(0), 0), DomainError);
}

TEST(BesselZeros, RayleighSum) {
  for (auto nu : {BesselOrder(1, 2), BesselOrder(1), BesselOrder(3, 2), BesselOrder(2)}) {
    const auto z = bessel_j_zeros(nu, 200);
    EXPECT_NEAR(zero_power_sum(z, 2.0), 1.0 / (4.0 * (nu.value() + 1.0)), 1e-8) << nu.value();
    // sum mu^-4 = 1 / (16 (nu+1)^2 (nu+2))
    const double n = nu.value();
    EXPECT_NEAR(zero_power_sum(z, 4.0), 1.0 / (16.0 * (n + 1) * (n + 1) * (n + 2)), 1e-12);
  }
}

TEST(LogSeries, FirstCoefficients) {
  for (auto nu : {BesselOrder(0), BesselOrder(1, 2), BesselOrder(3, 2), BesselOrder(7, 3), BesselOrder(5)}) {
    const auto g = log_j_small_k_coeffs(nu, 4);
    EXPECT_EQ(g.coeff(1), Rational(-1) / (4 * (nu.exact() + 1)));
    const auto h = log_i_large_k_coeffs(nu, 4);
    EXPECT_EQ(h.coeff(1), -(4 * nu.exact() * nu.exact() - 1) / 8);
  }
  EXPECT_EQ(log_j_small_k_coeffs(BesselOrder(1, 2), 1).coeff(1), Rational(-1, 6));
  EXPECT_EQ(log_i_large_k_coeffs(BesselOrder(3, 2), 1).coeff(1), Rational(-1));
  EXPECT_THROW(log_j_small_k_coeffs(BesselOrder(0), 2).coeff(3), DomainError);
}

TEST(LogSeries, HalfOrderVanishes) {
  const auto h = log_i_large_k_coeffs(BesselOrder(1, 2), 12);
  for (std::size_t j = 1; j <= 12; ++j) EXPECT_EQ(h.coeff(j), 0) << j;
}

TEST(LogSeries, ExpOfLogRoundTrips) {
  for (auto nu : {BesselOrder(0), BesselOrder(1, 2), BesselOrder(5, 2), BesselOrder(2, 7)}) {
    const auto a = bessel_j_series_coeffs(nu, 10);
    const auto back = formal_exp(formal_log(a));
    ASSERT_EQ(back.size(), a.size());
    for (std::size_t l = 0; l < a.size(); ++l) EXPECT_EQ(back[l], a[l]);
    const auto b = bessel_i_asymptotic_coeffs(nu, 8);
    const auto back_b = formal_exp(formal_log(b));
    for (std::size_t l = 0; l < b.size(); ++l) EXPECT_EQ(back_b[l], b[l]);
  }
  const std::vector<Rational> bad = {Rational(2), Rational(1)};
  EXPECT_THROW(formal_log(bad), DomainError);
}

TEST(LogSeries, SecondSmallKCoefficientMatchesNumericFit) {
  // (ln J_1(k) - ln k + ln 2) / k^2 = g_1 + g_2 u + g_3 u^2 + ... with u = k^2
  std::vector<double> us, ys;
  for (int i = 1; i <= 60; ++i) {
    const double kd = 0.1 * i / 60.0;
    const long double k = kd;
    us.push_back(kd * kd);
    ys.push_back(static_cast<double>((std::log(oracle::series_j(1.0, kd)) - std::log(k) + std::log(2.0L)) / (k * k)));
  }
  std::vector<std::function<long double(long double)>> basis;
  for (int j = 0; j < 4; ++j) basis.push_back([j](long double u) { return std::pow(u, j); });
  const auto c = oracle::small_lsq(us, ys, basis);
  const auto g = log_j_small_k_coeffs(BesselOrder(1), 2);
  EXPECT_NEAR(c[0], to_double(g.coeff(1)), 1e-12);
  EXPECT_NEAR(c[1] / to_double(g.coeff(2)), 1.0, 1e-8);
  EXPECT_EQ(g.coeff(2), Rational(-1, 384));
}

TEST(LogSeries, FirstLargeKCoefficientMatchesNumericFit) {
  std::vector<double> ks, ys;
  for (int i = 0; i <= 80; ++i) {
    const double k = 20.0 + 20.0 * i / 80.0;
    ks.push_back(k);
    // I_{3/2}(k) = (2 / (pi k))^{1/2} (cosh k - sinh k / k)
    const long double e = std::exp(-2.0L * k);
    ys.push_back(static_cast<double>(std::log(1.0L + e - (1.0L - e) / k)));
  }
  std::vector<std::function<long double(long double)>> basis;
  for (int j = 1; j <= 5; ++j) basis.push_back([j](long double k) { return std::pow(k, -j); });
  const auto c = oracle::small_lsq(ks, ys, basis);
  EXPECT_NEAR(c[0], -1.0, 1e-6);
  const auto h = log_i_large_k_coeffs(BesselOrder(3, 2), 3);
  EXPECT_NEAR(c[1], to_double(h.coeff(2)), 1e-4);
  EXPECT_NEAR(h.evaluate(30.0), std::log(1.0 - 1.0 / 30.0), 1e-6);
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("-7/4"), Rational(-7, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
}

}  // namespace
