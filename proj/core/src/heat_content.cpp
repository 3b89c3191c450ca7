#include "apsheat/heat_content.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <istream>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "apsheat/errors.hpp"
#include "apsheat/summation.hpp"

namespace apsheat::heat {

double tail_bound(const TailModel& tail, std::size_t count, double t) {
  if (tail.weight_prefactor == 0.0) return 0.0;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (tail.weight_power < 0.0 || count + 1 < tail.valid_from) return kInf;
  const double x = tail.scale * (static_cast<double>(count) + tail.offset);
  if (!(x > 0.0)) return kInf;
  // sum_{k > K} P x_k^{-p} e^{-t x_k^2} <= (1/scale) int_{x_K}^inf P x^{-p} e^{-t x^2} dx
  //                                    <= (P/scale) x_K^{-p} sqrt(pi)/(2 sqrt t) erfc(sqrt(t) x_K)
  const double rt = std::sqrt(t);
  return tail.weight_prefactor / tail.scale * std::pow(x, -tail.weight_power) * std::sqrt(std::numbers::pi) /
         (2.0 * rt) * std::erfc(rt * x);
}

std::size_t required_mode_count(const TailModel& tail, double t, double tol) {
  if (!(t > 0.0) || !(tol > 0.0)) throw DomainError("required_mode_count: t and tol must be positive");
  std::size_t lo = tail.valid_from > 0 ? tail.valid_from - 1 : 0;
  if (tail_bound(tail, lo, t) <= tol) return lo;
  std::size_t hi = std::max<std::size_t>(lo, 1);
  while (!(tail_bound(tail, hi, t) <= tol)) {
    if (hi > (std::size_t{1} << 40)) throw NumericalError("required_mode_count: tail bound does not decay");
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tail_bound(tail, mid, t) <= tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

namespace {

TailModel image_tail(const TailModel& tail) {
  TailModel out = tail;
  out.weight_prefactor *= tail.eigenvalue_ratio;
  out.weight_power -= 2.0;
  return out;
}

void check_time(double t, double tol) {
  if (!(t > 0.0)) throw DomainError("heat content: t must be positive");
  if (!(tol > 0.0)) throw DomainError("heat content: tol must be positive");
}

BetaValue certified_sum(const SpectralData& data, double t, double tol, bool rate) {
  check_time(t, tol);
  const TailModel model = rate ? image_tail(data.tail) : data.tail;
  const double bound = tail_bound(model, data.size(), t);
  if (!(bound <= tol)) throw InsufficientModesError(data.size(), required_mode_count(model, t, tol));
  CompensatedSum sum;
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double lambda = data.eigenvalues[k];
    const double w = rate ? data.weights[k] * lambda : data.weights[k];
    sum += w * std::exp(-t * lambda);
  }
  return {sum.value(), bound};
}

}  // namespace

BetaValue beta_at(const SpectralData& data, double t, double tol) { return certified_sum(data, t, tol, false); }

BetaValue beta_rate_at(const SpectralData& data, double t, double tol) { return certified_sum(data, t, tol, true); }

HeatCurve sample_curve(const SpectralData& data, double t_min, double t_max, std::size_t points, double tol,
                       unsigned threads) {
  if (!(t_min > 0.0) || !(t_max > t_min)) throw DomainError("sample_curve: need 0 < t_min < t_max");
  if (points < 2) throw DomainError("sample_curve: need at least 2 points");
  HeatCurve curve;
  curve.source = data.description;
  curve.samples.resize(points);
  const double log_ratio = std::log(t_max / t_min);
  auto time_at = [&](std::size_t j) {
    if (j == 0) return t_min;
    if (j + 1 == points) return t_max;
    return t_min * std::exp(log_ratio * static_cast<double>(j) / static_cast<double>(points - 1));
  };

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t j = next++; j < points; j = next++) {
      try {
        const double t = time_at(j);
        const BetaValue b = beta_at(data, t, tol);
        curve.samples[j] = {t, b.value, b.tail_bound};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return curve;
}

SpectralData operator_image(const SpectralData& data) {
  SpectralData out = data;
  for (std::size_t k = 0; k < out.size(); ++k) out.weights[k] *= out.eigenvalues[k];
  out.tail = image_tail(data.tail);
  if (out.zero_law) out.zero_law->power -= 2;
  out.satisfies_boundary_condition = false;
  out.description = "D-image of " + data.description;
  return out;
}

SpectralData scale_spectrum(const SpectralData& data, double c) {
  if (!(c > 0.0)) throw DomainError("scale_spectrum: c must be positive");
  SpectralData out = data;
  const double cm = std::pow(c, data.dimension);
  for (auto& lambda : out.eigenvalues) lambda /= c * c;
  for (auto& w : out.weights) w *= cm;
  out.tail.scale /= c;
  out.tail.weight_prefactor *= cm * std::pow(c, -out.tail.weight_power);
  out.zero_law.reset();
  out.description = data.description + " scaled by c=" + format_double(c);
  return out;
}

SpectralData dirichlet_interval_spectrum(std::size_t count) {
  if (count == 0) throw DomainError("dirichlet_interval_spectrum: count must be at least 1");
  SpectralData data;
  data.eigenvalues.reserve(count);
  data.weights.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    const double x = static_cast<double>(k) * std::numbers::pi;
    data.eigenvalues.push_back(x * x);
    data.weights.push_back(k % 2 ? 8.0 / (x * x) : 0.0);
  }
  data.tail = TailModel{std::numbers::pi, 0.0, 8.0, 2.0, 1.0, 1};
  data.dimension = 1;
  data.satisfies_boundary_condition = false;
  data.description = "dirichlet interval";
  return data;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw NumericalError("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_curve_csv(const HeatCurve& curve, std::ostream& out) {
  out << "t,beta,tail_bound\n";
  for (const auto& s : curve.samples)
    out << format_double(s.t) << ',' << format_double(s.beta) << ',' << format_double(s.tail_bound) << '\n';
}

namespace {

double parse_field(std::string_view field, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw DomainError("curve CSV line " + std::to_string(line) + ": bad number '" + std::string(field) + "'");
  return value;
}

}  // namespace

HeatCurve read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DomainError("curve CSV: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,beta,tail_bound") throw DomainError("curve CSV: expected header 't,beta,tail_bound'");
  HeatCurve curve;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
    if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos)
      throw DomainError("curve CSV line " + std::to_string(number) + ": expected 3 fields");
    const std::string_view view(line);
    HeatSample s{parse_field(view.substr(0, c1), number), parse_field(view.substr(c1 + 1, c2 - c1 - 1), number),
                 parse_field(view.substr(c2 + 1), number)};
    if (!(s.t > 0.0)) throw DomainError("curve CSV line " + std::to_string(number) + ": t must be positive");
    if (!curve.samples.empty() && !(s.t > curve.samples.back().t))
      throw DomainError("curve CSV line " + std::to_string(number) + ": t must be strictly increasing");
    curve.samples.push_back(s);
  }
  return curve;
}

}  // namespace apsheat::heat
