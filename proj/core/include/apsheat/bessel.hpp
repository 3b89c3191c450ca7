#pragma once

#include <string>
#include <string_view>

#include "apsheat/rational.hpp"

namespace apsheat::specfun {

/// Exact, non-negative Bessel order. Half-integers are the common case
/// (odd ball dimensions), integers the other.
class BesselOrder {
 public:
  BesselOrder() = default;
  explicit BesselOrder(Rational nu);
  BesselOrder(long long numerator, long long denominator);

  /// Accepts "3/2", "1.5", "2".
  static BesselOrder parse(std::string_view text);

  const Rational& exact() const noexcept { return nu_; }
  double value() const noexcept { return value_; }
  bool is_integer() const;
  bool is_half_odd_integer() const;
  std::string to_string() const { return apsheat::to_string(nu_); }

  BesselOrder shifted(long long n) const { return BesselOrder(nu_ + n); }

  friend bool operator==(const BesselOrder& a, const BesselOrder& b) { return a.nu_ == b.nu_; }

 private:
  Rational nu_{0};
  double value_ = 0.0;
};

/// Which evaluation scheme bessel_j uses at a given (nu, x).
///
///   PowerSeries       x <= 12. Ascending series summed in extended precision.
///   MillerRecurrence  12 < x, and x < 30 or nu > x / 2. Backward recurrence
///                     normalized with the Neumann sum
///                     (x/2)^a = sum_k (a+2k) Gamma(a+k)/k! J_{a+2k}(x).
///   HankelForward     x >= 30 and nu <= x / 2. Hankel expansion for the
///                     fractional order a and a+1, then forward recurrence.
enum class BesselRegime { PowerSeries, MillerRecurrence, HankelForward };

inline constexpr double kSeriesLimit = 12.0;
inline constexpr double kHankelLimit = 30.0;

BesselRegime bessel_j_regime(double nu, double x);

/// J_nu(x) for x >= 0. Throws DomainError for x < 0 (or NaN).
double bessel_j(const BesselOrder& order, double x);
double bessel_j(double nu, double x);

/// Forces a specific regime; for crossover testing.
double bessel_j_in_regime(double nu, double x, BesselRegime regime);

/// J_nu'(x) = (nu/x) J_nu(x) - J_{nu+1}(x).
double bessel_j_derivative(double nu, double x);

/// I_nu(x) for x >= 0. Throws OverflowError when the value exceeds the
/// double range (x beyond ~713).
double bessel_i(const BesselOrder& order, double x);
double bessel_i(double nu, double x);

/// exp(-x) I_nu(x); representable far beyond the point where I_nu overflows.
double bessel_i_scaled(double nu, double x);

/// ln I_nu(x) for x > 0.
double log_bessel_i(double nu, double x);

}  // namespace apsheat::specfun
