#include "apsheat/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

#include <Eigen/Dense>
#include <json.hpp>

#include "apsheat/errors.hpp"

namespace apsheat::asym {

namespace {

constexpr int kMaxOrder = 6;

struct Window {
  double lo, hi;
  std::size_t first, last;  // sample index range [first, last)
};

std::vector<Window> place_windows(const heat::HeatCurve& curve, const WindowSpec& spec) {
  if (!(spec.ratio > 1.0)) throw DomainError("window ratio must exceed 1");
  const double shift = spec.shift > 0.0 ? spec.shift : std::sqrt(spec.ratio);
  if (!(shift > 1.0)) throw DomainError("window shift must exceed 1");
  const auto& s = curve.samples;
  const double t_min = s.front().t;
  const double t_max = s.back().t;
  std::vector<Window> windows;
  for (double lo = t_min; lo * spec.ratio <= t_max * (1.0 + 1e-9); lo *= shift) {
    const double hi = lo * spec.ratio;
    Window w{lo, hi, 0, 0};
    w.first = static_cast<std::size_t>(
        std::lower_bound(s.begin(), s.end(), lo * (1.0 - 1e-12), [](const heat::HeatSample& a, double t) {
          return a.t < t;
        }) - s.begin());
    w.last = static_cast<std::size_t>(
        std::upper_bound(s.begin(), s.end(), hi * (1.0 + 1e-12), [](double t, const heat::HeatSample& a) {
          return t < a.t;
        }) - s.begin());
    windows.push_back(w);
  }
  if (windows.size() < spec.min_windows)
    throw DomainError("curve spans " + std::to_string(windows.size()) + " windows, need " +
                      std::to_string(spec.min_windows));
  return windows;
}

// Column j of the basis at sample t, scaled by the window's upper edge.
using Basis = std::vector<std::function<double(double t, double hi)>>;

WindowEstimate solve_window(const heat::HeatCurve& curve, const Window& w, const Basis& basis,
                            double max_condition) {
  const auto cols = static_cast<Eigen::Index>(basis.size());
  const std::size_t n = w.last - w.first;
  if (n < basis.size())
    throw RankDeficientError("window [" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "] has " +
                             std::to_string(n) + " samples for " + std::to_string(basis.size()) +
                             " basis functions");
  double scale = 0.0;
  for (std::size_t i = w.first; i < w.last; ++i) scale = std::max(scale, std::fabs(curve.samples[i].beta));
  const double noise_floor = std::max(4.0 * std::numeric_limits<double>::epsilon() * scale, 1e-300);

  Eigen::MatrixXd A(static_cast<Eigen::Index>(n), cols);
  Eigen::VectorXd b(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = curve.samples[w.first + i];
    const double sigma = std::max(s.tail_bound, noise_floor);
    const auto row = static_cast<Eigen::Index>(i);
    for (Eigen::Index j = 0; j < cols; ++j) A(row, j) = basis[static_cast<std::size_t>(j)](s.t, w.hi) / sigma;
    b(row) = s.beta / sigma;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  WindowEstimate est;
  est.t_lo = w.lo;
  est.t_hi = w.hi;
  est.samples = n;
  est.condition = sv(cols - 1) > 0.0 ? sv(0) / sv(cols - 1) : std::numeric_limits<double>::infinity();
  est.discarded = !(est.condition <= max_condition);
  const Eigen::VectorXd x = svd.solve(b);
  const Eigen::MatrixXd& V = svd.matrixV();
  est.coefficients.resize(basis.size());
  est.standard_errors.resize(basis.size());
  for (Eigen::Index j = 0; j < cols; ++j) {
    double var = 0.0;
    for (Eigen::Index k = 0; k < cols; ++k) {
      const double v = V(j, k) / sv(k);
      var += v * v;
    }
    est.coefficients[static_cast<std::size_t>(j)] = x(j);
    est.standard_errors[static_cast<std::size_t>(j)] = std::sqrt(var);
  }
  return est;
}

void check_curve(const heat::HeatCurve& curve, int max_order) {
  if (max_order < 0 || max_order > kMaxOrder)
    throw DomainError("max_order must be within 0.." + std::to_string(kMaxOrder));
  const auto needed = static_cast<std::size_t>(3 * (max_order + 1));
  if (curve.samples.size() < needed)
    throw DomainError("curve has " + std::to_string(curve.samples.size()) + " samples, need at least " +
                      std::to_string(needed));
}

std::vector<std::size_t> usable(const std::vector<WindowEstimate>& windows) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < windows.size(); ++i)
    if (!windows[i].discarded) idx.push_back(i);
  if (idx.size() < 2) throw RankDeficientError("fewer than two windows passed the condition screen");
  return idx;
}

}  // namespace

AsymptoticFit fit_expansion(const heat::HeatCurve& curve, int max_order, const WindowSpec& spec) {
  check_curve(curve, max_order);
  const auto windows = place_windows(curve, spec);
  Basis basis;
  for (int n = 0; n <= max_order; ++n)
    basis.push_back([n](double t, double hi) { return std::pow(t / hi, 0.5 * n); });

  AsymptoticFit fit;
  fit.max_order = max_order;
  for (const auto& w : windows) {
    auto est = solve_window(curve, w, basis, spec.max_condition);
    for (int n = 0; n <= max_order; ++n) {
      const double unscale = std::pow(w.hi, -0.5 * n);
      est.coefficients[static_cast<std::size_t>(n)] *= unscale;
      est.standard_errors[static_cast<std::size_t>(n)] *= unscale;
    }
    fit.windows.push_back(std::move(est));
  }
  const auto idx = usable(fit.windows);
  const auto& best = fit.windows[idx[0]];
  const auto& next = fit.windows[idx[1]];
  fit.coefficients = best.coefficients;
  fit.uncertainties.resize(fit.coefficients.size());
  for (std::size_t n = 0; n < fit.coefficients.size(); ++n)
    fit.uncertainties[n] = std::max(std::fabs(best.coefficients[n] - next.coefficients[n]), best.standard_errors[n]);
  return fit;
}

LogTermDiagnostic log_term_scan(const heat::HeatCurve& curve, int order, int max_order, const WindowSpec& spec) {
  check_curve(curve, max_order);
  if (order < 0 || order > max_order) throw DomainError("log_term_scan: order must be within 0..max_order");
  const auto windows = place_windows(curve, spec);
  Basis basis;
  for (int n = 0; n <= max_order; ++n)
    basis.push_back([n](double t, double hi) { return std::pow(t / hi, 0.5 * n); });
  basis.push_back([order](double t, double hi) { return std::pow(t / hi, 0.5 * order) * std::log(t / hi); });

  LogTermDiagnostic diag;
  diag.order = order;
  const std::size_t log_col = basis.size() - 1;
  for (const auto& w : windows) {
    auto est = solve_window(curve, w, basis, std::numeric_limits<double>::infinity());
    // a x^order ln(t/hi) = a hi^{order/2}... in unscaled form: c t^{order/2} ln t + (...) t^{order/2}
    const double unscale = std::pow(w.hi, -0.5 * order);
    est.coefficients = {est.coefficients[log_col] * unscale};
    est.standard_errors = {est.standard_errors[log_col] * unscale};
    diag.windows.push_back(std::move(est));
  }
  const auto& best = diag.windows[0];
  const auto& next = diag.windows[1];
  diag.log_coefficient = best.coefficients[0];
  diag.spread = std::max(std::fabs(best.coefficients[0] - next.coefficients[0]), best.standard_errors[0]);
  diag.ratio = diag.spread > 0.0 ? std::fabs(diag.log_coefficient) / diag.spread : 0.0;
  diag.consistent_with_zero = diag.ratio <= kLogTermThreshold;
  return diag;
}

void write_fit_json(const AsymptoticFit& fit, std::ostream& out) {
  nlohmann::ordered_json j;
  j["max_order"] = fit.max_order;
  j["coefficients"] = fit.coefficients;
  j["uncertainties"] = fit.uncertainties;
  auto windows = nlohmann::ordered_json::array();
  for (const auto& w : fit.windows) {
    nlohmann::ordered_json jw;
    jw["t_lo"] = w.t_lo;
    jw["t_hi"] = w.t_hi;
    jw["samples"] = w.samples;
    jw["condition"] = w.condition;
    jw["discarded"] = w.discarded;
    jw["coefficients"] = w.coefficients;
    jw["standard_errors"] = w.standard_errors;
    windows.push_back(std::move(jw));
  }
  j["windows"] = std::move(windows);
  if (fit.log_diagnostic) {
    const auto& d = *fit.log_diagnostic;
    j["log_diagnostic"] = {{"order", d.order},
                           {"log_coefficient", d.log_coefficient},
                           {"spread", d.spread},
                           {"ratio", d.ratio},
                           {"consistent_with_zero", d.consistent_with_zero}};
  } else {
    j["log_diagnostic"] = nullptr;
  }
  out << j.dump(2) << '\n';
}

}  // namespace apsheat::asym
