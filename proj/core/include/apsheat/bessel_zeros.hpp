#pragma once

#include <cstddef>
#include <vector>

#include "apsheat/bessel.hpp"

namespace apsheat::specfun {

/// The first `zeros.size()` positive zeros of J_nu, strictly increasing.
struct ZeroList {
  BesselOrder order;
  std::vector<double> zeros;
  /// max_k |J_nu(zeros[k])| over the list.
  double residual_bound = 0.0;
};

/// McMahon's large-k expansion of the k-th positive zero of J_nu (k >= 1),
/// through the beta^{-5} term, with beta = (k + nu/2 - 1/4) pi.
double mcmahon_zero(double nu, std::size_t k);

/// First `count` positive zeros of J_nu. Each zero is bracketed starting from
/// the McMahon estimate +- pi/2 (never crossing the previous zero), bisected
/// to width 1e-3 and then polished by safeguarded Newton on
/// J_nu' = (nu/x) J_nu - J_{nu+1}.
///
/// Throws DomainError for count == 0 and BracketError if no sign change can
/// be found for some index; NumericalError if a residual exceeds 1e-12.
ZeroList bessel_j_zeros(const BesselOrder& order, std::size_t count);

inline constexpr double kZeroResidualLimit = 1e-12;

/// sum_{k > K} mu_k^{-power} for the zeros of J_nu beyond the first K, where
/// power > 1. Uses McMahon zeros explicitly for a long stretch and an
/// analytic integral for the remainder. `error_estimate`, when non-null,
/// receives the spread between two McMahon truncation levels.
double zero_power_tail(double nu, std::size_t K, double power, double* error_estimate = nullptr);

/// sum_k mu_k^{-power} over all zeros: computed zeros summed exactly
/// (compensated), tail from zero_power_tail.
double zero_power_sum(const ZeroList& zeros, double power, double* error_estimate = nullptr);

}  // namespace apsheat::specfun
