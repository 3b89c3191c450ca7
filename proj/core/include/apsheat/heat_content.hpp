#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "apsheat/spectral_data.hpp"

namespace apsheat::heat {

struct BetaValue {
  double value = 0.0;
  /// Certified bound on |infinite sum - value| from the omitted modes.
  double tail_bound = 0.0;
};

struct HeatSample {
  double t = 0.0;
  double beta = 0.0;
  double tail_bound = 0.0;
};

struct HeatCurve {
  std::vector<HeatSample> samples;
  std::string source;
};

/// Bound on sum_{k > count} w_k exp(-t lambda_k) from the tail model.
/// Infinite when the model does not cover index count + 1.
double tail_bound(const TailModel& tail, std::size_t count, double t);

/// Smallest mode count whose tail bound at t is <= tol.
std::size_t required_mode_count(const TailModel& tail, double t, double tol);

/// beta(t) = sum_k w_k exp(-t lambda_k), summed in ascending k with
/// compensation. Throws DomainError for t <= 0 or tol <= 0 and
/// InsufficientModesError when the tail bound at t exceeds tol.
BetaValue beta_at(const SpectralData& data, double t, double tol);

/// -d beta / dt = sum_k w_k lambda_k exp(-t lambda_k), term-wise.
BetaValue beta_rate_at(const SpectralData& data, double t, double tol);

/// Samples beta on t_j = t_min (t_max/t_min)^{j/(points-1)}. Samples may be
/// evaluated on up to `threads` threads; the result does not depend on it.
HeatCurve sample_curve(const SpectralData& data, double t_min, double t_max, std::size_t points, double tol,
                       unsigned threads = 1);

/// The data of the pair (D f1, f2): weights lambda_k w_k.
SpectralData operator_image(const SpectralData& data);

/// The data of c^{-2} D: lambda -> c^{-2} lambda, w -> c^m w, so that
/// beta_c(t) = c^m beta(c^{-2} t).
SpectralData scale_spectrum(const SpectralData& data, double c);

/// -u'' on [0, 1] with Dirichlet conditions and f1 = f2 = 1: lambda_k = (k pi)^2,
/// w_k = 8/(k pi)^2 for odd k, 0 for even k.
SpectralData dirichlet_interval_spectrum(std::size_t count);

/// -u'' on [0, 1] with u'(0) + S u(0) = 0, -u'(1) + S u(1) = 0 and f1 = f2 = 1.
/// Only modes even about x = 1/2 carry weight, so only those are listed:
/// for S > 0 one negative eigenvalue -kappa^2 (kappa tanh(kappa/2) = S)
/// followed by mu^2 with mu tan(mu/2) = -S, one root per ((2j-1) pi, 2j pi).
/// S = 0 is the Neumann problem: the constant mode alone.
/// Throws DomainError for S < 0, BracketError if a root cannot be bracketed.
SpectralData robin_interval_spectrum(double S, std::size_t count);

/// CSV: header "t,beta,tail_bound", LF line ends, shortest round-trip decimals.
void write_curve_csv(const HeatCurve& curve, std::ostream& out);
HeatCurve read_curve_csv(std::istream& in);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

}  // namespace apsheat::heat
