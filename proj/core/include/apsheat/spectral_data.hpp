#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apsheat/bessel.hpp"

namespace apsheat::heat {

/// Majorants for the modes that were not computed. For every 1-based index
/// k >= valid_from, with x_k = scale * (k + offset) > 0:
///
///   lambda_k >= x_k^2,   w_k <= weight_prefactor * x_k^{-weight_power},
///   lambda_k <= eigenvalue_ratio * x_k^2.
///
/// The weight majorant must be non-increasing in k (weight_power >= 0).
struct TailModel {
  double scale = 0.0;
  double offset = 0.0;
  double weight_prefactor = 0.0;
  double weight_power = 0.0;
  double eigenvalue_ratio = 1.0;
  std::size_t valid_from = 1;
};

/// Spectra built from zeros mu_k of J_nu: lambda_k = mu_k^2 and
/// w_k = prefactor * mu_k^{-power}.
struct BesselZeroLaw {
  specfun::BesselOrder order;
  double prefactor = 0.0;
  int power = 0;
};

/// Eigenvalues with symmetric mode weights w_k = sigma_k(f1) sigma_k(f2),
/// in ascending eigenvalue order.
struct SpectralData {
  std::vector<double> eigenvalues;
  std::vector<double> weights;
  TailModel tail;
  std::optional<BesselZeroLaw> zero_law;
  /// Riemannian dimension m; used by the scaling transformation.
  int dimension = 1;
  /// True when f1 satisfies the boundary condition (B f1 = 0).
  bool satisfies_boundary_condition = false;
  std::string description;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

}  // namespace apsheat::heat
