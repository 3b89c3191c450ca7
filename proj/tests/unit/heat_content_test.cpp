#include <cmath>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "apsheat/ball_dirac.hpp"
#include "apsheat/errors.hpp"
#include "apsheat/heat_content.hpp"

using namespace apsheat;
using namespace apsheat::heat;
using mp64 = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<64>>;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralData single_mode(double w, double lambda) {
  SpectralData d;
  d.eigenvalues = {lambda};
  d.weights = {w};
  d.description = "single mode";
  return d;
}

TEST(HeatContent, SingleMode) {
  EXPECT_DOUBLE_EQ(beta_at(single_mode(1.0, 1.0), 1.0, 1e-15).value, std::exp(-1.0));
  EXPECT_THROW(beta_at(single_mode(1.0, 1.0), 0.0, 1e-15), DomainError);
  EXPECT_THROW(beta_at(single_mode(1.0, 1.0), 1.0, 0.0), DomainError);
}

TEST(HeatContent, BallF1AgainstHighPrecisionSum) {
  // m = 3: zeros of J_{1/2} are k pi, weights 2 / (k pi)^2.
  const auto setup = ball::BallSetup::make(3);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F1, 400);
  const mp64 pi = boost::math::constants::pi<mp64>();
  for (double t : {0.01, 0.002}) {
    mp64 sum = 0;
    for (int k = 1; k <= 2000; ++k) {
      const mp64 mu = pi * k;
      sum += 2 / (mu * mu) * exp(-mp64(t) * mu * mu);
    }
    const auto b = beta_at(data, t, 1e-13);
    EXPECT_NEAR(b.value, sum.convert_to<double>(), 1e-10) << t;
    EXPECT_LE(b.tail_bound, 1e-13);
  }
}

TEST(HeatContent, DirichletIntervalAgainstHighPrecisionSum) {
  const auto data = dirichlet_interval_spectrum(100);
  const mp64 pi = boost::math::constants::pi<mp64>();
  mp64 sum = 0;
  for (int k = 1; k <= 2001; k += 2) {
    const mp64 x = pi * k;
    sum += 8 / (x * x) * exp(-mp64("0.1") * x * x);
  }
  EXPECT_NEAR(beta_at(data, 0.1, 1e-14).value, sum.convert_to<double>(), 1e-12);
}

TEST(HeatContent, ParsevalSums) {
  // sum of weights is beta(0+) = int f^2 = 1 for both interval problems.
  const auto dir = dirichlet_interval_spectrum(200001);
  double s = 0;
  for (double w : dir.weights) s += w;
  EXPECT_NEAR(s, 1.0, 1e-5);
  const auto rob = robin_interval_spectrum(1.0, 20000);
  double r = 0;
  for (double w : rob.weights) r += w;
  EXPECT_NEAR(r, 1.0, 1e-10);
}

TEST(HeatContent, InsufficientModesNamesCount) {
  const auto data = dirichlet_interval_spectrum(10);
  try {
    beta_at(data, 1e-4, 1e-12);
    FAIL() << "expected InsufficientModesError";
  } catch (const InsufficientModesError& e) {
    EXPECT_EQ(e.available(), 10u);
    EXPECT_EQ(e.required(), required_mode_count(data.tail, 1e-4, 1e-12));
    EXPECT_GT(e.required(), 10u);
    // The named count really is sufficient.
    const auto more = dirichlet_interval_spectrum(e.required());
    EXPECT_LE(beta_at(more, 1e-4, 1e-12).tail_bound, 1e-12);
  }
}

TEST(HeatContent, TailBoundIsAnUpperBound) {
  const auto setup = ball::BallSetup::make(4);
  const auto full = ball::build_spectral_data(setup, ball::TestFunction::F1, 3000);
  for (std::size_t K : {50u, 150u, 400u}) {
    const double t = 1e-3;
    double omitted = 0;
    for (std::size_t k = K; k < full.size(); ++k) omitted += full.weights[k] * std::exp(-t * full.eigenvalues[k]);
    EXPECT_LE(omitted, tail_bound(full.tail, K, t)) << K;
  }
}

TEST(HeatContent, CurveIsMonotoneAndDeterministic) {
  const auto setup = ball::BallSetup::make(3);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F1,
                                              ball::modes_for(setup, ball::TestFunction::F1, 1e-4, 1e-12));
  const auto c1 = sample_curve(data, 1e-4, 1e-1, 40, 1e-12, 1);
  const auto c4 = sample_curve(data, 1e-4, 1e-1, 40, 1e-12, 4);
  ASSERT_EQ(c1.samples.size(), 40u);
  EXPECT_EQ(c1.samples.front().t, 1e-4);
  EXPECT_EQ(c1.samples.back().t, 1e-1);
  for (std::size_t j = 0; j < 40; ++j) {
    EXPECT_EQ(c1.samples[j].beta, c4.samples[j].beta);
    EXPECT_EQ(c1.samples[j].t, c4.samples[j].t);
    if (j) {
      EXPECT_GT(c1.samples[j].t, c1.samples[j - 1].t);
      EXPECT_LT(c1.samples[j].beta, c1.samples[j - 1].beta);
    }
  }
  EXPECT_NEAR(c1.samples[0].beta, beta_at(data, 1e-4, 1e-12).value, 0.0);
  EXPECT_NEAR(c1.samples[0].beta, 1.0 / 3.0 - 2.0 * std::sqrt(1e-4 / kPi) + 1e-4, 1e-12);
  EXPECT_THROW(sample_curve(data, 0.0, 1.0, 10, 1e-12), DomainError);
  EXPECT_THROW(sample_curve(data, 1e-3, 1e-3, 10, 1e-12), DomainError);
  EXPECT_THROW(sample_curve(data, 1e-3, 1e-2, 1, 1e-12), DomainError);
}

TEST(HeatContent, BallF2StartsNearQuarter) {
  const auto setup = ball::BallSetup::make(2);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F2,
                                              ball::modes_for(setup, ball::TestFunction::F2, 1e-4, 1e-12));
  const auto c = sample_curve(data, 1e-4, 1e-1, 40, 1e-12);
  EXPECT_NEAR(c.samples[0].beta, 0.25, 2.0 * 1e-4 + 1e-6);
  EXPECT_LT(c.samples[0].beta, 0.25);
}

TEST(HeatContent, PositiveAndConvex) {
  const auto setup = ball::BallSetup::make(5);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F2, 300);
  for (int j = 0; j < 30; ++j) EXPECT_GT(beta_at(data, 1e-3 * std::pow(1.2, j), 1e-10).value, 0.0);
  // Convexity on an even grid: second differences are non-negative.
  for (int j = 1; j < 50; ++j) {
    const double h = 1e-3;
    const double t = 1e-2 + j * h;
    const double d2 = beta_at(data, t + h, 1e-10).value - 2 * beta_at(data, t, 1e-10).value +
                      beta_at(data, t - h, 1e-10).value;
    EXPECT_GT(d2, 0.0);
  }
}

TEST(HeatContent, DerivativeIdentity) {
  const auto setup = ball::BallSetup::make(3);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F1, 300);
  const auto image = operator_image(data);
  for (double t = 1e-2; t <= 0.1; t *= 1.25) {
    const double rate = beta_rate_at(data, t, 1e-12).value;
    EXPECT_LE(std::fabs(rate - beta_at(image, t, 1e-12).value), 1e-12 * rate);
    const double h = 1e-4 * t;
    const double fd = (beta_at(data, t - h, 1e-14).value - beta_at(data, t + h, 1e-14).value) / (2 * h);
    EXPECT_LE(std::fabs(fd - rate), 1e-6 * rate) << t;
  }
}

TEST(HeatContent, ScalingIdentity) {
  const auto setup = ball::BallSetup::make(4);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F1, 400);
  for (double c : {0.5, 2.0, 3.0}) {
    const auto scaled = scale_spectrum(data, c);
    for (double t : {1e-3, 1e-2, 1e-1}) {
      const double lhs = beta_at(scaled, t, 1.0).value;
      const double rhs = std::pow(c, 4) * beta_at(data, t / (c * c), 1.0).value;
      EXPECT_LE(std::fabs(lhs - rhs), 1e-12 * std::fabs(rhs)) << c << " " << t;
    }
    // The scaled tail model still certifies.
    EXPECT_LE(beta_at(scaled, 1e-2 * c * c, 1e-12).tail_bound, 1e-12);
  }
  EXPECT_THROW(scale_spectrum(data, 0.0), DomainError);
}

TEST(RobinInterval, NeumannIsConstant) {
  const auto data = robin_interval_spectrum(0.0, 5);
  for (double t : {1e-6, 1e-2, 10.0}) EXPECT_EQ(beta_at(data, t, 1e-15).value, 1.0);
  EXPECT_TRUE(data.satisfies_boundary_condition);
  EXPECT_THROW(robin_interval_spectrum(-1.0, 5), DomainError);
}

TEST(RobinInterval, EigenfunctionsSatisfyBoundaryConditions) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double S = 1.0;
  const auto data = robin_interval_spectrum(S, 30);
  EXPECT_LT(data.eigenvalues[0], 0.0);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double lambda = data.eigenvalues[k];
    std::function<double(double)> u, du;
    if (lambda < 0) {
      const double kap = std::sqrt(-lambda);
      u = [kap](double x) { return std::cosh(kap * (x - 0.5)); };
      du = [kap](double x) { return kap * std::sinh(kap * (x - 0.5)); };
    } else {
      const double mu = std::sqrt(lambda);
      u = [mu](double x) { return std::cos(mu * (x - 0.5)); };
      du = [mu](double x) { return -mu * std::sin(mu * (x - 0.5)); };
    }
    EXPECT_NEAR(du(0.0) + S * u(0.0), 0.0, 1e-12 * (1 + std::fabs(lambda)));
    EXPECT_NEAR(-du(1.0) + S * u(1.0), 0.0, 1e-12 * (1 + std::fabs(lambda)));
    const double overlap = GK::integrate(u, 0.0, 1.0, 15);
    const double norm = GK::integrate([&](double x) { return u(x) * u(x); }, 0.0, 1.0, 15);
    EXPECT_NEAR(data.weights[k], overlap * overlap / norm, 1e-13) << k;
    if (k > 0) EXPECT_GT(data.eigenvalues[k], data.eigenvalues[k - 1]);
  }
}

TEST(CurveCsv, RoundTripAndValidation) {
  HeatCurve c;
  c.samples = {{1e-4, 0.3322, 1e-13}, {0.1, 1.0 / 3.0, 0.0}};
  std::ostringstream os;
  write_curve_csv(c, os);
  EXPECT_EQ(os.str().substr(0, 18), "t,beta,tail_bound\n");
  EXPECT_EQ(os.str().find('\r'), std::string::npos);
  std::istringstream is(os.str());
  const auto back = read_curve_csv(is);
  ASSERT_EQ(back.samples.size(), 2u);
  EXPECT_EQ(back.samples[1].beta, 1.0 / 3.0);
  EXPECT_EQ(format_double(0.1), "0.1");

  std::istringstream bad_header("x,y,z\n1,2,3\n");
  EXPECT_THROW(read_curve_csv(bad_header), DomainError);
  std::istringstream bad_order("t,beta,tail_bound\n0.2,1,0\n0.1,1,0\n");
  EXPECT_THROW(read_curve_csv(bad_order), DomainError);
  std::istringstream bad_fields("t,beta,tail_bound\n0.2,1\n");
  EXPECT_THROW(read_curve_csv(bad_fields), DomainError);
}

}  // namespace
