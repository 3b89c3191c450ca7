#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "apsheat/errors.hpp"
#include "apsheat/heat_content.hpp"

namespace apsheat::heat {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double bracketed_root(F f, double a, double b, std::size_t index) {
  const double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) throw BracketError(index, "robin_interval_spectrum: no sign change");
  std::uintmax_t iterations = 200;
  const auto [lo, hi] =
      boost::math::tools::toms748_solve(f, a, b, fa, fb, boost::math::tools::eps_tolerance<double>(52), iterations);
  return 0.5 * (lo + hi);
}

}  // namespace

SpectralData robin_interval_spectrum(double S, std::size_t count) {
  if (!(S >= 0.0)) throw DomainError("robin_interval_spectrum: S must be non-negative");
  if (count == 0) throw DomainError("robin_interval_spectrum: count must be at least 1");
  SpectralData data;
  data.dimension = 1;
  data.description = "robin interval S=" + format_double(S);

  if (S == 0.0) {
    // Neumann: f = 1 is itself the ground state.
    data.eigenvalues = {0.0};
    data.weights = {1.0};
    data.tail = TailModel{2.0 * kPi, 0.0, 0.0, 4.0, 1.0, 1};
    data.satisfies_boundary_condition = true;
    return data;
  }

  // Ground state cosh(kappa (x - 1/2)), kappa tanh(kappa/2) = S.
  const double kappa = bracketed_root([S](double k) { return k * std::tanh(k / 2.0) - S; }, 1e-300, 2.0 * S + 4.0, 1);
  const double overlap0 = 2.0 * std::sinh(kappa / 2.0) / kappa;
  const double norm0 = 0.5 + std::sinh(kappa) / (2.0 * kappa);
  data.eigenvalues.push_back(-kappa * kappa);
  data.weights.push_back(overlap0 * overlap0 / norm0);

  // cos(mu (x - 1/2)) with theta = mu/2 solving theta sin(theta) + (S/2) cos(theta) = 0
  // on ((j - 1/2) pi, j pi).
  for (std::size_t j = 1; j < count; ++j) {
    const double jd = static_cast<double>(j);
    const double theta = bracketed_root(
        [S](double th) { return th * std::sin(th) + 0.5 * S * std::cos(th); }, (jd - 0.5) * kPi, jd * kPi, j + 1);
    const double mu = 2.0 * theta;
    const double overlap = 2.0 * std::sin(theta) / mu;
    const double norm = 0.5 + std::sin(mu) / (2.0 * mu);
    data.eigenvalues.push_back(mu * mu);
    data.weights.push_back(overlap * overlap / norm);
  }
  // Mode k >= 2 has mu in ((2k-3) pi, (2k-2) pi), and
  // w <= 8 S^2 / (mu^4 (1 - 1/mu)) <= 12 S^2 mu^{-4}.
  data.tail = TailModel{2.0 * kPi, -1.5, 12.0 * S * S, 4.0, 4.0, 2};
  data.satisfies_boundary_condition = false;
  return data;
}

}  // namespace apsheat::heat
