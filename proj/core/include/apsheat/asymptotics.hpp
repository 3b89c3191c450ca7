#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "apsheat/heat_content.hpp"

namespace apsheat::asym {

/// Windows [tau_j, ratio * tau_j] with tau_j = t_min * shift^j, as many as fit
/// inside the sampled range. `shift` <= 0 selects sqrt(ratio), so consecutive
/// windows overlap by half a window in log t.
struct WindowSpec {
  double ratio = 10.0;
  double shift = 0.0;
  std::size_t min_windows = 4;
  /// Windows whose weighted design matrix is worse conditioned are discarded.
  double max_condition = 1e12;
};

struct WindowEstimate {
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::size_t samples = 0;
  double condition = 0.0;
  bool discarded = false;
  std::vector<double> coefficients;
  /// Propagated sample-noise standard errors.
  std::vector<double> standard_errors;
};

struct LogTermDiagnostic {
  int order = 0;
  /// Coefficient of t^{order/2} ln t from the smallest window.
  double log_coefficient = 0.0;
  double spread = 0.0;
  /// |log_coefficient| / spread; values up to ~3 are consistent with no log term.
  double ratio = 0.0;
  bool consistent_with_zero = true;
  std::vector<WindowEstimate> windows;
};

inline constexpr double kLogTermThreshold = 3.0;

struct AsymptoticFit {
  int max_order = 0;
  /// beta_0 .. beta_N from the smallest usable window.
  std::vector<double> coefficients;
  /// Per coefficient: max(|smallest - second smallest window|, standard error).
  std::vector<double> uncertainties;
  std::vector<WindowEstimate> windows;
  std::optional<LogTermDiagnostic> log_diagnostic;
};

/// Least-squares fit of beta(t) ~ sum_{n<=N} beta_n t^{n/2} on each window.
/// Columns are scaled to x = sqrt(t / t_hi) and the system is solved by SVD.
///
/// Throws DomainError if N is outside 0..6, the curve has fewer than
/// 3(N+1) samples, or fewer than spec.min_windows windows fit;
/// RankDeficientError if a window holds fewer samples than basis functions or
/// fewer than two windows survive the condition screen.
AsymptoticFit fit_expansion(const heat::HeatCurve& curve, int max_order, const WindowSpec& spec = {});

/// Refits with the extra column t^{order/2} ln t next to the power basis
/// (through `max_order`) and reports the log coefficient against its
/// cross-window spread.
LogTermDiagnostic log_term_scan(const heat::HeatCurve& curve, int order, int max_order = 6,
                                const WindowSpec& spec = {});

/// {"max_order", "coefficients", "uncertainties", "windows", "log_diagnostic"}.
void write_fit_json(const AsymptoticFit& fit, std::ostream& out);

}  // namespace apsheat::asym
