#include "apsheat/log_series.hpp"

#include <cmath>

#include "apsheat/errors.hpp"

namespace apsheat::specfun {

const Rational& RationalSeries::coeff(std::size_t l) const {
  if (l == 0 || l > coeffs.size())
    throw DomainError("RationalSeries: order " + std::to_string(l) + " outside 1.." +
                      std::to_string(coeffs.size()));
  return coeffs[l - 1];
}

double RationalSeries::evaluate(double k) const {
  const double step = kind == SeriesKind::LogJSmallK ? k * k : 1.0 / k;
  double power = 1.0;
  double sum = 0.0;
  for (const auto& c : coeffs) {
    power *= step;
    sum += to_double(c) * power;
  }
  return sum;
}

std::vector<Rational> bessel_j_series_coeffs(const BesselOrder& order, std::size_t L) {
  const Rational& nu = order.exact();
  std::vector<Rational> a(L + 1);
  a[0] = 1;
  for (std::size_t l = 1; l <= L; ++l) {
    a[l] = a[l - 1] * Rational(-1, 4) / (Rational(static_cast<long long>(l)) * (nu + static_cast<long long>(l)));
  }
  return a;
}

std::vector<Rational> bessel_i_asymptotic_coeffs(const BesselOrder& order, std::size_t J) {
  const Rational half(1, 2);
  const Rational& nu = order.exact();
  std::vector<Rational> b(J + 1);
  b[0] = 1;
  Rational prefactor = 1;  // (-1)^l / (2^l l!)
  for (std::size_t l = 1; l <= J; ++l) {
    const auto ll = static_cast<long long>(l);
    prefactor *= Rational(-1, 2 * ll);
    Rational product = 1;
    for (long long j = 0; j < 2 * ll; ++j) product *= nu + half - ll + j;
    b[l] = prefactor * product;
  }
  return b;
}

std::vector<Rational> formal_log(std::span<const Rational> series) {
  if (series.empty() || series[0] != 1) throw DomainError("formal_log: constant term must be 1");
  const std::size_t L = series.size() - 1;
  std::vector<Rational> c(L + 1);
  // l c_l = l a_l - sum_{j=1}^{l-1} j c_j a_{l-j}
  for (std::size_t l = 1; l <= L; ++l) {
    Rational acc = Rational(static_cast<long long>(l)) * series[l];
    for (std::size_t j = 1; j < l; ++j) acc -= Rational(static_cast<long long>(j)) * c[j] * series[l - j];
    c[l] = acc / static_cast<long long>(l);
  }
  return {c.begin() + 1, c.end()};
}

std::vector<Rational> formal_exp(std::span<const Rational> log_coeffs) {
  const std::size_t L = log_coeffs.size();
  std::vector<Rational> a(L + 1);
  a[0] = 1;
  // l a_l = sum_{j=1}^{l} j c_j a_{l-j}
  for (std::size_t l = 1; l <= L; ++l) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= l; ++j) acc += Rational(static_cast<long long>(j)) * log_coeffs[j - 1] * a[l - j];
    a[l] = acc / static_cast<long long>(l);
  }
  return a;
}

RationalSeries log_j_small_k_coeffs(const BesselOrder& order, std::size_t L) {
  if (L == 0) throw DomainError("log_j_small_k_coeffs: max_order must be at least 1");
  const auto a = bessel_j_series_coeffs(order, L);
  return RationalSeries{order, SeriesKind::LogJSmallK, formal_log(a)};
}

RationalSeries log_i_large_k_coeffs(const BesselOrder& order, std::size_t J) {
  if (J == 0) throw DomainError("log_i_large_k_coeffs: max_order must be at least 1");
  const auto b = bessel_i_asymptotic_coeffs(order, J);
  return RationalSeries{order, SeriesKind::LogILargeK, formal_log(b)};
}

}  // namespace apsheat::specfun
