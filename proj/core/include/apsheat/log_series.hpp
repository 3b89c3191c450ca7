#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "apsheat/bessel.hpp"
#include "apsheat/rational.hpp"

namespace apsheat::specfun {

enum class SeriesKind {
  /// ln J_nu(k) = nu ln k - ln[2^nu Gamma(nu+1)] + sum_{l>=1} g_l k^{2l}
  LogJSmallK,
  /// ln I_nu(k) ~ k - (1/2) ln(2 pi k) + sum_{j>=1} h_j k^{-j}
  LogILargeK,
};

/// Exact coefficients of one of the two logarithmic expansions.
struct RationalSeries {
  BesselOrder order;
  SeriesKind kind = SeriesKind::LogJSmallK;
  /// coeffs[0] is g_1 (resp. h_1).
  std::vector<Rational> coeffs;

  std::size_t max_order() const noexcept { return coeffs.size(); }
  /// 1-based access: coeff(1) == g_1. Throws DomainError out of range.
  const Rational& coeff(std::size_t l) const;

  /// Partial sum of the correction terms at k, in double precision.
  double evaluate(double k) const;
};

/// a_0..a_L of J_nu(k) (k/2)^{-nu} Gamma(nu+1) = sum_l a_l k^{2l},
/// a_l = (-1/4)^l / (l! (nu+1)_l).
std::vector<Rational> bessel_j_series_coeffs(const BesselOrder& order, std::size_t L);

/// b_0..b_J of I_nu(k) sqrt(2 pi k) e^{-k} ~ sum_l b_l k^{-l},
/// b_l = (-1)^l / (2^l l!) * (nu+1/2-l)(nu+3/2-l)...(nu-1/2+l).
/// The Gamma ratio is expanded as that finite product, which stays valid
/// where Gamma(nu+1/2-l) itself has poles.
std::vector<Rational> bessel_i_asymptotic_coeffs(const BesselOrder& order, std::size_t J);

/// Formal logarithm of a power series with a_0 = 1: returns c_1..c_L with
/// ln(sum a_l y^l) = sum_{l>=1} c_l y^l. Throws DomainError if a_0 != 1.
std::vector<Rational> formal_log(std::span<const Rational> series);

/// Inverse of formal_log: given c_1..c_L returns a_0..a_L with a_0 = 1.
std::vector<Rational> formal_exp(std::span<const Rational> log_coeffs);

RationalSeries log_j_small_k_coeffs(const BesselOrder& order, std::size_t L);
RationalSeries log_i_large_k_coeffs(const BesselOrder& order, std::size_t J);

}  // namespace apsheat::specfun
