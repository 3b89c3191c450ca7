#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "apsheat/bessel_zeros.hpp"
#include "apsheat/model_oracles.hpp"
#include "apsheat/rational.hpp"
#include "apsheat/spectral_data.hpp"

namespace apsheat::ball {

/// The unit m-ball. Only the n = 0 angular family enters, with radial
/// eigenfunctions built from J_nu, nu = m/2 - 1, and Theta = (m-1)/2.
struct BallSetup {
  int m = 0;
  specfun::BesselOrder nu;
  Rational theta;

  /// Throws DomainError for m < 2.
  static BallSetup make(int m);
};

/// f1 = (0, Z) satisfies Pi f1 = f1; f2 = (r Z, 0) satisfies Pi f2 = 0.
/// Z is the unit-normalized n = 0 spherical spinor.
enum class TestFunction { F1, F2 };

std::string_view to_string(TestFunction f);
/// Accepts "f1"/"F1" and "f2"/"F2"; throws DomainError otherwise.
TestFunction parse_test_function(std::string_view text);

/// w_k = prefactor * mu_k^{-power}: 2 mu^{-2} for F1, 2 m^2 mu^{-4} for F2.
specfun::BesselOrder weight_order(const BallSetup& setup);
double weight_prefactor(const BallSetup& setup, TestFunction f);
int weight_power(TestFunction f);

/// Tail majorant for the weights of (f, f) beyond the computed zeros.
heat::TailModel tail_model(const BallSetup& setup, TestFunction f);

/// Modes needed to certify beta(t) to `tol` for all t >= t_min.
std::size_t modes_for(const BallSetup& setup, TestFunction f, double t_min, double tol);

/// lambda_k = mu_k^2 over the first `count` zeros of J_nu and the weights of
/// the diagonal pair (f, f).
heat::SpectralData build_spectral_data(const BallSetup& setup, TestFunction f, std::size_t count);
heat::SpectralData build_spectral_data(const BallSetup& setup, TestFunction f, const specfun::ZeroList& zeros);

/// int_M |f|^2: 1/m for F1, 1/(m+2) for F2.
Rational l2_norm_squared_exact(const BallSetup& setup, TestFunction f);
double l2_norm_squared(const BallSetup& setup, TestFunction f);

/// int_M |P f|^2 by Gauss-Legendre quadrature of the radial amplitude.
double interior_dirac_energy(const BallSetup& setup, TestFunction f);

/// The boundary and interior integrals entering the ansatz for (f, f).
oracles::AnsatzInputs boundary_data(const BallSetup& setup, TestFunction f);

/// Data of the scalar Dirichlet problem on the ball with f1 = f2 = 1,
/// for the local coefficient formulas.
oracles::BoundaryGeometryData scalar_ball_geometry(int m);

/// Surface area of the unit sphere S^{m-1}.
double sphere_volume(int m);

}  // namespace apsheat::ball
