#include "apsheat/bessel_zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "apsheat/errors.hpp"
#include "apsheat/summation.hpp"

namespace apsheat::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Consecutive positive zeros of J_nu, nu >= 0, are more than 3.1 apart
// (j_{0,2} - j_{0,1} = 3.1153 is the minimum), so a step of 0.5 can never
// jump over a pair of sign changes and prev + 2.5 is still left of the next.
constexpr double kScanStep = 0.5;
constexpr double kMinSpacing = 2.5;

bool opposite(double a, double b) { return (a < 0.0) != (b < 0.0); }

double polish(double nu, double lo, double hi, double flo) {
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    const double fm = bessel_j(nu, mid);
    if (fm == 0.0) return mid;
    if (opposite(flo, fm)) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 60; ++iter) {
    const double f = bessel_j(nu, x);
    if (f == 0.0) return x;
    if (opposite(flo, f)) {
      hi = x;
    } else {
      lo = x;
      flo = f;
    }
    const double df = nu / x * f - bessel_j(nu + 1.0, x);
    double next = x - f / df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * x) break;
  }
  return x;
}

}  // namespace

double mcmahon_zero(double nu, std::size_t k) {
  const double beta = (static_cast<double>(k) + nu / 2.0 - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  const double b8 = 8.0 * beta;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(b8, 3)) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * std::pow(b8, 5));
}

ZeroList bessel_j_zeros(const BesselOrder& order, std::size_t count) {
  if (count == 0) throw DomainError("bessel_j_zeros: count must be at least 1");
  const double nu = order.value();
  ZeroList out;
  out.order = order;
  out.zeros.reserve(count);

  // j_{nu,1} > nu, and J_nu > 0 on (0, j_{nu,1}).
  double lo = std::max(nu, 1e-3);
  for (std::size_t k = 1; k <= count; ++k) {
    const double guess = mcmahon_zero(nu, k);
    double a = std::max(lo, guess - kPi / 2.0);
    double b = std::max(a + kScanStep, guess + kPi / 2.0);

    // Any sign change between the previous zero and the McMahon bracket means
    // the estimate overshot (large nu, small k); take the first one.
    double x = lo;
    double fx = bessel_j(nu, x);
    bool found = false;
    while (x < a) {
      const double y = std::min(x + kScanStep, a);
      const double fy = bessel_j(nu, y);
      if (opposite(fx, fy)) {
        a = x;
        b = y;
        found = true;
        break;
      }
      x = y;
      fx = fy;
    }
    double fa = found ? fx : bessel_j(nu, a);
    if (!found) {
      double fb = bessel_j(nu, b);
      if (opposite(fa, fb)) {
        // The bracket is narrower than twice the zero spacing, so it holds
        // exactly one zero; locate it left to right in case it holds more.
        double y = a, fy = fa;
        while (y < b) {
          const double z = std::min(y + kScanStep, b);
          const double fz = bessel_j(nu, z);
          if (opposite(fy, fz)) {
            a = y;
            b = z;
            fa = fy;
            found = true;
            break;
          }
          y = z;
          fy = fz;
        }
      } else {
        // McMahon undershot: keep scanning to the right.
        double y = b;
        fb = bessel_j(nu, y);
        for (int step = 0; step < 400 && !found; ++step) {
          const double z = y + kScanStep;
          const double fz = bessel_j(nu, z);
          if (opposite(fb, fz)) {
            a = y;
            b = z;
            fa = fb;
            found = true;
          }
          y = z;
          fb = fz;
        }
      }
    }
    if (!found) throw BracketError(k, "bessel_j_zeros: no sign change near the McMahon estimate");

    const double zero = polish(nu, a, b, fa);
    const double residual = std::fabs(bessel_j(nu, zero));
    out.residual_bound = std::max(out.residual_bound, residual);
    if (residual > kZeroResidualLimit)
      throw NumericalError("bessel_j_zeros: residual " + std::to_string(residual) + " at zero " +
                           std::to_string(k));
    out.zeros.push_back(zero);
    lo = zero + kMinSpacing;
  }
  return out;
}

namespace {

double mcmahon_tail(double nu, std::size_t K, double power, int terms) {
  constexpr std::size_t kExplicit = 20000;
  const double mu = 4.0 * nu * nu;
  auto zero = [&](std::size_t k) {
    const double beta = (static_cast<double>(k) + nu / 2.0 - 0.25) * kPi;
    double z = beta - (mu - 1.0) / (8.0 * beta);
    if (terms > 1) z -= 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * std::pow(8.0 * beta, 3));
    return z;
  };
  CompensatedSum sum;
  // Descending order adds the small terms first.
  for (std::size_t k = K + kExplicit; k > K; --k) sum += std::pow(zero(k), -power);
  // Midpoint Euler-Maclaurin remainder from X = K + kExplicit + 1/2, with
  // mu_k^{-p} ~ beta^{-p} (1 + p c / beta^2), c = (mu - 1)/8.
  const double shift = nu / 2.0 - 0.25;
  const double X = static_cast<double>(K + kExplicit) + 0.5 + shift;
  const double c = (mu - 1.0) / 8.0;
  const double lead = std::pow(kPi, -power) * std::pow(X, 1.0 - power) / (power - 1.0);
  const double corr = power * c * std::pow(kPi, -power - 2.0) * std::pow(X, -power - 1.0) / (power + 1.0);
  sum += lead + corr;
  return sum.value();
}

}  // namespace

double zero_power_tail(double nu, std::size_t K, double power, double* error_estimate) {
  if (!(power > 1.0)) throw DivergenceError("zero_power_tail: power must exceed 1");
  const double fine = mcmahon_tail(nu, K, power, 2);
  if (error_estimate) {
    const double coarse = mcmahon_tail(nu, K, power, 1);
    *error_estimate = std::fabs(fine - coarse);
  }
  return fine;
}

double zero_power_sum(const ZeroList& zeros, double power, double* error_estimate) {
  CompensatedSum sum;
  for (auto it = zeros.zeros.rbegin(); it != zeros.zeros.rend(); ++it) sum += std::pow(*it, -power);
  sum += zero_power_tail(zeros.order.value(), zeros.zeros.size(), power, error_estimate);
  return sum.value();
}

}  // namespace apsheat::specfun
