#include "apsheat/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "apsheat/errors.hpp"

namespace apsheat::specfun {

namespace {

using Long = long double;
constexpr Long kEpsLong = std::numeric_limits<Long>::epsilon();

void check_arguments(double nu, double x, const char* fn) {
  if (!(nu >= 0.0)) throw DomainError(std::string(fn) + ": order must be non-negative");
  if (!(x >= 0.0)) throw DomainError(std::string(fn) + ": argument must be non-negative");
}

// (x/2)^nu / Gamma(nu+1) * exp(-shift), in extended precision.
Long leading_term(double nu, double x, Long shift = 0.0L) {
  if (x == 0.0) return nu == 0.0 ? 1.0L : 0.0L;
  const Long lx = std::log(static_cast<Long>(x) / 2.0L);
  return std::exp(static_cast<Long>(nu) * lx - std::lgamma(static_cast<Long>(nu) + 1.0L) - shift);
}

// sum_l s^l (x/2)^{2l} / (l! (nu+1)_l), with s = -1 for J and +1 for I.
Long ascending_series(double nu, double x, int sign) {
  const Long q = static_cast<Long>(x) * static_cast<Long>(x) / 4.0L;
  Long term = 1.0L;
  Long sum = 1.0L;
  for (int l = 1; l < 100000; ++l) {
    term *= sign * q / (static_cast<Long>(l) * (static_cast<Long>(nu) + l));
    sum += term;
    if (std::fabs(term) <= kEpsLong * std::fabs(sum) && static_cast<Long>(l) > std::sqrt(q)) break;
  }
  return sum;
}

double j_power_series(double nu, double x) {
  return static_cast<double>(leading_term(nu, x) * ascending_series(nu, x, -1));
}

// Hankel's expansion: J_a(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi).
Long j_hankel(Long a, double x) {
  const Long mu = 4.0L * a * a;
  const Long lx = x;
  Long p = 1.0L;
  Long q = 0.0L;
  Long term = 1.0L;
  Long previous = std::numeric_limits<Long>::infinity();
  for (int k = 1; k < 400; ++k) {
    const Long odd = 2.0L * k - 1.0L;
    term *= (mu - odd * odd) / (8.0L * k * lx);
    const Long magnitude = std::fabs(term);
    if (magnitude > previous) break;  // asymptotic series started to diverge
    previous = magnitude;
    // term_k carries a_k / x^k; the sign pattern is (-1)^{floor(k/2)}.
    const int quarter = k % 4;
    if (k % 2 == 0) {
      p += (quarter == 0 ? term : -term);
    } else {
      q += (quarter == 1 ? term : -term);
    }
    if (magnitude < kEpsLong * 1e-3L) break;
  }
  const Long phase = (a / 2.0L + 0.25L) * std::numbers::pi_v<Long>;
  const Long cx = std::cos(lx), sx = std::sin(lx);
  const Long cp = std::cos(phase), sp = std::sin(phase);
  const Long cos_chi = cx * cp + sx * sp;
  const Long sin_chi = sx * cp - cx * sp;
  return std::sqrt(2.0L / (std::numbers::pi_v<Long> * lx)) * (p * cos_chi - q * sin_chi);
}

double j_hankel_forward(double nu, double x) {
  const double whole = std::floor(nu);
  const Long a = static_cast<Long>(nu) - static_cast<Long>(whole);
  Long previous = j_hankel(a, x);
  if (whole == 0.0) return static_cast<double>(previous);
  Long current = j_hankel(a + 1.0L, x);
  const long steps = static_cast<long>(whole);
  for (long k = 1; k < steps; ++k) {
    const Long next = 2.0L * (a + k) / static_cast<Long>(x) * current - previous;
    previous = current;
    current = next;
  }
  return static_cast<double>(current);
}

double j_miller(double nu, double x) {
  const double whole = std::floor(nu);
  const Long a = static_cast<Long>(nu) - static_cast<Long>(whole);
  const long n = static_cast<long>(whole);
  const double reach = std::max(x, static_cast<double>(n));
  long top = static_cast<long>(std::ceil(reach)) + 30 + 8 * static_cast<long>(std::ceil(std::cbrt(reach)));
  if (top % 2) ++top;

  // f[j] ~ J_{a+j}(x) up to a common factor.
  std::vector<Long> f(static_cast<std::size_t>(top) + 2, 0.0L);
  f[top] = 1e-30L;
  const Long lx = x;
  for (long j = top; j >= 1; --j) {
    f[j - 1] = 2.0L * (a + j) / lx * f[j] - f[j + 1];
    if (std::fabs(f[j - 1]) > 1e3000L) {
      for (long i = j - 1; i <= top; ++i) f[i] *= 1e-3000L;
    }
  }

  // Neumann normalization: (x/2)^a = sum_k c_k J_{a+2k}, c_0 = Gamma(a+1),
  // c_k = (a+2k) Gamma(a+k)/k! for k >= 1.
  Long norm = std::tgamma(a + 1.0L) * f[0];
  Long d = std::tgamma(a + 1.0L);  // Gamma(a+k)/k! at k = 1
  for (long k = 1; 2 * k <= top; ++k) {
    if (k > 1) d *= (a + k - 1.0L) / static_cast<Long>(k);
    norm += (a + 2.0L * k) * d * f[2 * k];
  }
  const Long target = a == 0.0L ? 1.0L : std::pow(lx / 2.0L, a);
  return static_cast<double>(f[n] * target / norm);
}

}  // namespace

BesselOrder::BesselOrder(Rational nu) : nu_(std::move(nu)) {
  if (nu_ < 0) throw DomainError("Bessel order must be non-negative, got " + apsheat::to_string(nu_));
  value_ = to_double(nu_);
}

BesselOrder::BesselOrder(long long numerator, long long denominator)
    : BesselOrder([&] {
        if (denominator == 0) throw DomainError("Bessel order with zero denominator");
        return Rational(numerator, denominator);
      }()) {}

BesselOrder BesselOrder::parse(std::string_view text) { return BesselOrder(parse_rational(text)); }

bool BesselOrder::is_integer() const { return boost::multiprecision::denominator(nu_) == 1; }

bool BesselOrder::is_half_odd_integer() const { return boost::multiprecision::denominator(nu_) == 2; }

BesselRegime bessel_j_regime(double nu, double x) {
  if (x <= kSeriesLimit) return BesselRegime::PowerSeries;
  if (x >= kHankelLimit && nu <= x / 2.0) return BesselRegime::HankelForward;
  return BesselRegime::MillerRecurrence;
}

double bessel_j_in_regime(double nu, double x, BesselRegime regime) {
  check_arguments(nu, x, "bessel_j");
  switch (regime) {
    case BesselRegime::PowerSeries:
      return j_power_series(nu, x);
    case BesselRegime::MillerRecurrence:
      if (x == 0.0) return j_power_series(nu, x);
      return j_miller(nu, x);
    case BesselRegime::HankelForward:
      if (x == 0.0) return j_power_series(nu, x);
      return j_hankel_forward(nu, x);
  }
  return j_power_series(nu, x);
}

double bessel_j(double nu, double x) {
  check_arguments(nu, x, "bessel_j");
  return bessel_j_in_regime(nu, x, bessel_j_regime(nu, x));
}

double bessel_j(const BesselOrder& order, double x) { return bessel_j(order.value(), x); }

double bessel_j_derivative(double nu, double x) {
  check_arguments(nu, x, "bessel_j_derivative");
  if (x == 0.0) {
    if (nu == 1.0) return 0.5;
    if (nu == 0.0 || nu > 1.0) return 0.0;
    return std::numeric_limits<double>::infinity();
  }
  return nu / x * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

double bessel_i_scaled(double nu, double x) {
  check_arguments(nu, x, "bessel_i");
  if (x <= std::max(50.0, nu * nu)) {
    return static_cast<double>(leading_term(nu, x, static_cast<Long>(x)) * ascending_series(nu, x, +1));
  }
  // Large argument: exp(-x) I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu) / x^k.
  const Long mu = 4.0L * static_cast<Long>(nu) * nu;
  Long sum = 1.0L;
  Long term = 1.0L;
  Long previous = std::numeric_limits<Long>::infinity();
  for (int k = 1; k < 400; ++k) {
    const Long odd = 2.0L * k - 1.0L;
    term *= -(mu - odd * odd) / (8.0L * k * static_cast<Long>(x));
    if (std::fabs(term) > previous) break;
    previous = std::fabs(term);
    sum += term;
    if (std::fabs(term) < kEpsLong * std::fabs(sum)) break;
  }
  return static_cast<double>(sum / std::sqrt(2.0L * std::numbers::pi_v<Long> * static_cast<Long>(x)));
}

double bessel_i(double nu, double x) {
  check_arguments(nu, x, "bessel_i");
  const double scaled = bessel_i_scaled(nu, x);
  const Long value = static_cast<Long>(scaled) * std::exp(static_cast<Long>(x));
  if (!(value <= static_cast<Long>(std::numeric_limits<double>::max())))
    throw OverflowError("bessel_i: I_nu(x) overflows double at x = " + std::to_string(x));
  return static_cast<double>(value);
}

double bessel_i(const BesselOrder& order, double x) { return bessel_i(order.value(), x); }

double log_bessel_i(double nu, double x) {
  check_arguments(nu, x, "log_bessel_i");
  if (x == 0.0) throw DomainError("log_bessel_i: argument must be positive");
  return std::log(bessel_i_scaled(nu, x)) + x;
}

}  // namespace apsheat::specfun
