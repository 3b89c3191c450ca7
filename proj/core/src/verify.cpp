#include "apsheat/verify.hpp"

#include <cmath>
#include <charconv>
#include <numbers>
#include <string>

#include "apsheat/errors.hpp"
#include "apsheat/zeta_route.hpp"

namespace apsheat::verify {

namespace {

using ball::TestFunction;
using oracles::Report;

const double kInvSqrtPi = std::numbers::inv_sqrtpi;

std::string tag(int m, TestFunction f) { return "m=" + std::to_string(m) + " " + std::string(ball::to_string(f)); }

// Acceptance tolerances for beta_0..beta_3.
constexpr double kBallTol[3] = {1e-6, 1e-4, 1e-3};

double expected_ball_beta(int m, TestFunction f, int n) {
  if (f == TestFunction::F1) {
    const double table[] = {1.0 / m, -2.0 * kInvSqrtPi, (m - 1) / 2.0, -(m - 1.0) * (m - 3.0) / 6.0 * kInvSqrtPi};
    return table[n];
  }
  const double table[] = {1.0 / (m + 2), 0.0, -static_cast<double>(m), 4.0 * m * m / 3.0 * kInvSqrtPi};
  return table[n];
}

void ball_suite(Report& r, const std::vector<int>& ms, const CurveSettings& s) {
  for (int m : ms) {
    const auto setup = ball::BallSetup::make(m);
    double beta1[2] = {0, 0};
    for (TestFunction f : {TestFunction::F1, TestFunction::F2}) {
      const auto fc = fit_ball(m, f, s);
      for (int n = 0; n < 3; ++n)
        r.add(tag(m, f) + " beta" + std::to_string(n), expected_ball_beta(m, f, n), fc.fit.coefficients[n],
              kBallTol[n]);
      beta1[f == TestFunction::F1 ? 0 : 1] = fc.fit.coefficients[1];

      r.add(tag(m, f) + " zeta(0) = |f|^2", ball::l2_norm_squared(setup, f), zeta::zeta_series(fc.data, 0.0), 1e-8);

      const auto ansatz = oracles::ansatz_coeffs(ball::boundary_data(setup, f));
      r.add(tag(m, f) + " ansatz beta1", expected_ball_beta(m, f, 1), ansatz[0], 1e-12);
      r.add(tag(m, f) + " ansatz beta2", expected_ball_beta(m, f, 2), ansatz[1], 1e-12);
    }
    // Same boundary, same local geometry: only the boundary projection of f
    // differs, and beta1 follows it.
    r.add("m=" + std::to_string(m) + " nonlocality witness beta1(f1)", -2.0 * kInvSqrtPi, beta1[0], kBallTol[1]);
    r.add("m=" + std::to_string(m) + " nonlocality witness beta1(f2)", 0.0, beta1[1], kBallTol[1]);
  }
}

// Rebuilds an interval spectrum with enough modes for the settings.
template <class Factory>
heat::SpectralData enough_modes(Factory make, const CurveSettings& s) {
  const auto probe = make(std::size_t{1});
  return make(std::max<std::size_t>(1, heat::required_mode_count(probe.tail, s.t_min, s.tol)));
}

void add_coeffs(Report& r, const std::string& name, const oracles::Coefficients& expected,
                const asym::AsymptoticFit& fit, const double (&tol)[4]) {
  for (int n = 0; n < 4; ++n)
    r.add(name + " beta" + std::to_string(n), expected[n], fit.coefficients[n], tol[n]);
}

oracles::IntervalFunction constant_one() {
  return {[](double) { return 1.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

void lemma1_suite(Report& r, const std::vector<int>& ms, const CurveSettings& s) {
  const auto one = constant_one();
  {
    const auto geo = oracles::interval_geometry(one, one);
    const auto fc = fit_spectrum(enough_modes([](std::size_t n) { return heat::dirichlet_interval_spectrum(n); }, s), s);
    const double tol[4] = {1e-8, 1e-4, 1e-3, 5e-2};
    add_coeffs(r, "dirichlet interval", oracles::dirichlet_coeffs(geo), fc.fit, tol);
  }
  {
    const double S = 1.0;
    const auto geo = oracles::interval_geometry(one, one, S);
    const auto expected = oracles::robin_coeffs(geo);
    const auto fc = fit_spectrum(enough_modes([S](std::size_t n) { return heat::robin_interval_spectrum(S, n); }, s), s);
    const double tol[4] = {1e-8, 1e-4, 1e-3, std::max(5e-3 * std::fabs(expected[3]), 5e-2)};
    add_coeffs(r, "robin interval S=1", expected, fc.fit, tol);
  }
  {
    const auto geo = oracles::interval_geometry(one, one, 0.0);
    const auto expected = oracles::robin_coeffs(geo);
    const auto data = heat::robin_interval_spectrum(0.0, 1);
    for (double t : {1e-4, 1e-2, 1.0})
      r.add("neumann interval beta(t=" + heat::format_double(t) + ")", expected[0], heat::beta_at(data, t, s.tol).value,
            1e-15);
  }
  // Scalar Dirichlet problem on the ball with f = 1: its heat content is
  // vol(S^{m-1}) times that of f1.
  for (int m : ms) {
    const auto expected = oracles::dirichlet_coeffs(ball::scalar_ball_geometry(m));
    const auto fc = fit_ball(m, TestFunction::F1, s);
    const double area = ball::sphere_volume(m);
    asym::AsymptoticFit scaled = fc.fit;
    for (auto& c : scaled.coefficients) c *= area;
    const double tol[4] = {1e-6 * area, 1e-4 * area, 1e-3 * area, 5e-2 * area};
    add_coeffs(r, "scalar dirichlet ball m=" + std::to_string(m), expected, scaled, tol);
  }
}

void lemma2_suite(Report& r, const std::vector<int>& ms, const CurveSettings& s) {
  // Scaling: beta of (c^{-2} D) at t equals c^m beta(c^{-2} t).
  for (int m : ms) {
    const auto setup = ball::BallSetup::make(m);
    for (TestFunction f : {TestFunction::F1, TestFunction::F2}) {
      const auto data = ball::build_spectral_data(setup, f, ball::modes_for(setup, f, s.t_min / 4, s.tol));
      for (double c : {0.5, 2.0}) {
        const auto scaled = heat::scale_spectrum(data, c);
        double worst = 0.0;
        for (double t : {1e-3, 1e-2, 1e-1}) {
          const double lhs = heat::beta_at(scaled, t, 1.0).value;
          const double rhs = std::pow(c, m) * heat::beta_at(data, t / (c * c), 1.0).value;
          worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
        }
        r.add(tag(m, f) + " scaling c=" + heat::format_double(c) + " relative deviation", 0.0, worst, 1e-12);
      }
    }
  }

  // Symmetry: the evaluators are unchanged when f1 and f2 trade places.
  const oracles::IntervalFunction a{[](double x) { return 1.0 + x; }, [](double) { return 1.0; },
                                    [](double) { return 0.0; }};
  const oracles::IntervalFunction b{[](double x) { return x * x - 0.3 * x; }, [](double x) { return 2 * x - 0.3; },
                                    [](double) { return 2.0; }};
  for (double S : {0.0, 1.0, 2.5}) {
    const auto ab = oracles::interval_geometry(a, b, S);
    const auto ba = oracles::interval_geometry(b, a, S);
    const auto d1 = oracles::dirichlet_coeffs(ab), d2 = oracles::dirichlet_coeffs(ba);
    const auto r1 = oracles::robin_coeffs(ab), r2 = oracles::robin_coeffs(ba);
    for (int n = 0; n < 4; ++n) {
      const std::string suffix = " S=" + heat::format_double(S) + " beta" + std::to_string(n);
      r.add("symmetry dirichlet" + suffix, d1[n], d2[n], 1e-12 * std::max(1.0, std::fabs(d1[n])));
      r.add("symmetry robin" + suffix, r1[n], r2[n], 1e-12 * std::max(1.0, std::fabs(r1[n])));
    }
  }
  {
    oracles::AnsatzInputs in;
    in.interior_pp = 0.7;
    in.pi_pair = 0.4;
    in.gamma_p1 = 0.25;
    in.gamma_p2 = -1.5;
    in.laa_pi_pair = 1.1;
    in.theta_pi_pair = 0.9;
    const auto x = oracles::ansatz_coeffs(in), y = oracles::ansatz_coeffs(oracles::transposed(in));
    r.add("symmetry ansatz beta1", x[0], y[0], 0.0);
    r.add("symmetry ansatz beta2", x[1], y[1], 1e-15);
  }

  // Recursion for pairs with f1 in the domain of the boundary condition.
  std::vector<double> grid;
  for (std::size_t j = 0; j < s.points; ++j)
    grid.push_back(s.t_min * std::pow(s.t_max / s.t_min, static_cast<double>(j) / (s.points - 1)));
  for (int m : ms) {
    if (m > 4) continue;
    const auto setup = ball::BallSetup::make(m);
    // The derivative side decays two powers of mu slower and sets the mode count.
    const auto probe = heat::operator_image(ball::build_spectral_data(setup, TestFunction::F2, 1));
    const auto data = ball::build_spectral_data(setup, TestFunction::F2,
                                                heat::required_mode_count(probe.tail, s.t_min, s.tol));
    const auto rep = oracles::lemma2_recursion_check(data, grid, 1e-3, s.tol);
    r.add(tag(m, TestFunction::F2) + " -dbeta/dt = beta(Df) relative deviation", 0.0, rep.max_identity_deviation,
          1e-12);
    r.add(tag(m, TestFunction::F2) + " beta2 + beta0(Df)", 0.0, rep.beta2 + rep.image_beta0, 1e-3);
    r.add(tag(m, TestFunction::F2) + " beta2", -static_cast<double>(m), rep.beta2, 1e-3);
  }
  {
    const auto rep = oracles::lemma2_recursion_check(heat::robin_interval_spectrum(0.0, 1), grid, 1e-3, s.tol);
    r.add("neumann interval -dbeta/dt = beta(Df)", 0.0, rep.max_identity_deviation, 0.0);
    r.add("neumann interval beta2 + beta0(Df)", 0.0, rep.beta2 + rep.image_beta0, 1e-6);
  }
  {
    // Central differences against the term-wise derivative.
    const auto setup = ball::BallSetup::make(3);
    const auto data = ball::build_spectral_data(setup, TestFunction::F2, 100);
    std::vector<double> coarse;
    for (double t = 1e-2; t <= 0.1 + 1e-12; t *= std::pow(10.0, 0.25)) coarse.push_back(t);
    const auto rep = oracles::lemma2_recursion_check(data, coarse, 1e-3, 1e-13);
    r.add("m=3 f2 central difference relative deviation", 0.0, rep.max_difference_deviation, 1e-6);
  }
}

void zeta_suite(Report& r, const std::vector<int>& ms, const CurveSettings& s) {
  for (int m : ms) {
    const auto setup = ball::BallSetup::make(m);
    for (TestFunction f : {TestFunction::F1, TestFunction::F2}) {
      const auto values = zeta::zeta_contour_values(setup, f, 2);
      const auto fc = fit_ball(m, f, s);
      const double z0 = zeta::zeta_series(fc.data, 0.0);
      std::vector<zeta::Reference> refs = {
          {0, z0, 1e-8, "spectral sum"},
          {1, -fc.fit.coefficients[2], kBallTol[2], "fitted beta2"},
      };
      const auto arb = zeta::arbitrate(values, refs);
      for (const auto& rec : arb.records) {
        const double chosen = rec.selected == zeta::Variant::CirclePlusAxis ? rec.circle_plus_axis : rec.axis;
        const std::string variant = rec.selected ? std::string(zeta::to_string(*rec.selected)) : "either";
        r.add(tag(m, f) + " zeta(" + std::to_string(-rec.n) + ") " + variant + " vs " + rec.reference.source,
              rec.reference.value, chosen, rec.reference.tolerance);
      }
      for (int n = 0; n < 3; ++n) {
        const auto b = zeta::beta_from_zeta(values, n, arb);
        r.add(tag(m, f) + " zeta route beta" + std::to_string(n) + " vs fit", b.value(), fc.fit.coefficients[n],
              kBallTol[n]);
      }
      const auto b1 = zeta::beta_from_zeta(values, 1, arb);
      const double exact1 = f == TestFunction::F1 ? -2.0 : 0.0;
      r.add(tag(m, f) + " zeta route beta1 * sqrt(pi) exact", exact1, to_double(b1.rational), 0.0);
      if (m == 3 && f == TestFunction::F1) {
        const auto b3 = zeta::beta_from_zeta(values, 3, arb);
        r.add(tag(m, f) + " zeta route beta3 vs fit", b3.value(), fc.fit.coefficients[3],
              std::min(fc.fit.uncertainties[3], 5e-2));
      }
    }
  }
}

}  // namespace

FittedCurve fit_spectrum(heat::SpectralData data, const CurveSettings& s) {
  FittedCurve out;
  out.curve = heat::sample_curve(data, s.t_min, s.t_max, s.points, s.tol, s.threads);
  out.fit = asym::fit_expansion(out.curve, s.max_order);
  out.data = std::move(data);
  return out;
}

FittedCurve fit_ball(int m, TestFunction f, const CurveSettings& s) {
  const auto setup = ball::BallSetup::make(m);
  return fit_spectrum(ball::build_spectral_data(setup, f, ball::modes_for(setup, f, s.t_min, s.tol)), s);
}

std::vector<int> parse_m_range(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw DomainError("bad m-range '" + std::string(text) + "' (expected e.g. 2..5)");
    return v;
  };
  int lo = 0, hi = 0;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    lo = parse_int(text.substr(0, dots));
    hi = parse_int(text.substr(dots + 2));
  } else {
    lo = hi = parse_int(text);
  }
  if (lo > hi) throw DomainError("empty m-range '" + std::string(text) + "'");
  if (lo < 2) throw DomainError("m-range must start at 2 or above");
  std::vector<int> ms;
  for (int m = lo; m <= hi; ++m) ms.push_back(m);
  return ms;
}

oracles::Report run_suite(std::string_view suite, const std::vector<int>& ms, const CurveSettings& settings) {
  if (ms.empty()) throw DomainError("run_suite: empty m list");
  Report r;
  r.suite = std::string(suite);
  if (suite == "ball") {
    ball_suite(r, ms, settings);
  } else if (suite == "lemma1") {
    lemma1_suite(r, ms, settings);
  } else if (suite == "lemma2") {
    lemma2_suite(r, ms, settings);
  } else if (suite == "zeta") {
    zeta_suite(r, ms, settings);
  } else {
    throw DomainError("unknown suite '" + std::string(suite) + "' (expected ball, lemma1, lemma2 or zeta)");
  }
  return r;
}

}  // namespace apsheat::verify
