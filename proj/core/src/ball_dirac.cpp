#include "apsheat/ball_dirac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss.hpp>

#include "apsheat/errors.hpp"

namespace apsheat::ball {

namespace {

constexpr double kPi = std::numbers::pi;

// Radial amplitude of P f, with |P f|^2 = a(r)^2 on each sphere of radius r.
// Lower component h(r) Z with h = 1: a = h'. Upper component g(r) Z with
// g = r and angular eigenvalue (m-1)/2 on both halves: a = g' + (m-1) g / r.
double dirac_amplitude(int m, TestFunction f, double r) {
  if (f == TestFunction::F1) return 0.0;
  const double g = r, dg = 1.0;
  return dg + (m - 1) * g / r;
}

}  // namespace

BallSetup BallSetup::make(int m) {
  if (m < 2) throw DomainError("ball dimension m must be at least 2");
  return BallSetup{m, specfun::BesselOrder(m - 2, 2), Rational(m - 1, 2)};
}

std::string_view to_string(TestFunction f) { return f == TestFunction::F1 ? "f1" : "f2"; }

TestFunction parse_test_function(std::string_view text) {
  if (text == "f1" || text == "F1") return TestFunction::F1;
  if (text == "f2" || text == "F2") return TestFunction::F2;
  throw DomainError("unknown test function '" + std::string(text) + "' (expected f1 or f2)");
}

specfun::BesselOrder weight_order(const BallSetup& setup) { return setup.nu; }

double weight_prefactor(const BallSetup& setup, TestFunction f) {
  return f == TestFunction::F1 ? 2.0 : 2.0 * setup.m * setup.m;
}

int weight_power(TestFunction f) { return f == TestFunction::F1 ? 2 : 4; }

heat::TailModel tail_model(const BallSetup& setup, TestFunction f) {
  // mu_k >= x_k = pi (k + nu/2 - 3/4) once the first McMahon correction
  // (4 nu^2 - 1) / (8 beta_k) is below pi/4; mu_k <= x_k + 5 pi / 8 always.
  const double nu = setup.nu.value();
  const double offset = nu / 2.0 - 0.75;
  const double spread = std::max(0.0, (4.0 * nu * nu - 1.0) / 8.0);
  std::size_t k = 1;
  while (true) {
    const double x = kPi * (static_cast<double>(k) + offset);
    const double beta = x + kPi / 2.0;
    if (x > 0.5 && spread / beta <= kPi / 4.0) break;
    ++k;
  }
  const double xv = kPi * (static_cast<double>(k) + offset);
  const double ratio = std::pow((xv + 5.0 * kPi / 8.0) / xv, 2);
  return heat::TailModel{kPi, offset, weight_prefactor(setup, f), static_cast<double>(weight_power(f)), ratio, k};
}

std::size_t modes_for(const BallSetup& setup, TestFunction f, double t_min, double tol) {
  return std::max<std::size_t>(1, heat::required_mode_count(tail_model(setup, f), t_min, tol));
}

heat::SpectralData build_spectral_data(const BallSetup& setup, TestFunction f, std::size_t count) {
  if (count == 0) throw DomainError("build_spectral_data: count must be at least 1");
  return build_spectral_data(setup, f, specfun::bessel_j_zeros(setup.nu, count));
}

heat::SpectralData build_spectral_data(const BallSetup& setup, TestFunction f, const specfun::ZeroList& zeros) {
  if (!(zeros.order == setup.nu)) throw DomainError("build_spectral_data: zeros are for the wrong order");
  heat::SpectralData data;
  data.tail = tail_model(setup, f);
  const double P = weight_prefactor(setup, f);
  const int p = weight_power(f);
  for (std::size_t i = 0; i < zeros.zeros.size(); ++i) {
    const double mu = zeros.zeros[i];
    const std::size_t k = i + 1;
    if (k >= data.tail.valid_from) {
      const double x = data.tail.scale * (static_cast<double>(k) + data.tail.offset);
      if (mu < x || mu * mu > data.tail.eigenvalue_ratio * x * x)
        throw NumericalError("zero " + std::to_string(k) + " violates the tail model");
    }
    data.eigenvalues.push_back(mu * mu);
    data.weights.push_back(P * std::pow(mu, -p));
  }
  data.zero_law = heat::BesselZeroLaw{setup.nu, P, p};
  data.dimension = setup.m;
  data.satisfies_boundary_condition = f == TestFunction::F2;
  data.description = "ball m=" + std::to_string(setup.m) + " " + std::string(to_string(f));
  return data;
}

Rational l2_norm_squared_exact(const BallSetup& setup, TestFunction f) {
  return Rational(1, f == TestFunction::F1 ? setup.m : setup.m + 2);
}

double l2_norm_squared(const BallSetup& setup, TestFunction f) { return to_double(l2_norm_squared_exact(setup, f)); }

double interior_dirac_energy(const BallSetup& setup, TestFunction f) {
  using Quad = boost::math::quadrature::gauss<double, 20>;
  const int m = setup.m;
  return Quad::integrate(
      [&](double r) {
        const double a = dirac_amplitude(m, f, r);
        return a * a * std::pow(r, m - 1);
      },
      0.0, 1.0);
}

oracles::AnsatzInputs boundary_data(const BallSetup& setup, TestFunction f) {
  oracles::AnsatzInputs in;
  const double pi_norm = f == TestFunction::F1 ? 1.0 : 0.0;
  in.interior_pp = interior_dirac_energy(setup, f);
  in.pi_pair = pi_norm;
  // F1: P f1 = 0. F2: gamma_m P f2 lies in the range of 1 - Pi.
  in.gamma_p1 = 0.0;
  in.gamma_p2 = 0.0;
  in.laa_pi_pair = (setup.m - 1) * pi_norm;
  in.theta_pi_pair = to_double(setup.theta) * pi_norm;
  return in;
}

double sphere_volume(int m) {
  return 2.0 * std::pow(kPi, m / 2.0) / std::tgamma(m / 2.0);
}

oracles::BoundaryGeometryData scalar_ball_geometry(int m) {
  if (m < 2) throw DomainError("ball dimension m must be at least 2");
  const double area = sphere_volume(m);
  const double L = m - 1;
  oracles::BoundaryGeometryData d;
  d.dimension = m;
  d.pair = area / m;
  d.d_pair = 0.0;
  d.bd_pair = area;
  d.laa_pair = L * area;
  d.pair_dn2 = d.dn1_pair = d.dnn1_pair = d.pair_dnn2 = d.tangential_grad = d.e_pair = 0.0;
  d.laa_dn1_pair = d.laa_pair_dn2 = 0.0;
  d.laa_lbb_pair = L * L * area;
  d.lab_lab_pair = L * area;
  d.ramam_pair = 0.0;
  return d;
}

}  // namespace apsheat::ball
