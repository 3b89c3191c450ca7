#include "apsheat/zeta_route.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "apsheat/bessel_zeros.hpp"
#include "apsheat/errors.hpp"
#include "apsheat/log_series.hpp"

namespace apsheat::zeta {

namespace {

Rational sign_pow(int n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double abscissa(const heat::SpectralData& data) {
  if (!data.zero_law) throw DomainError("zeta_series: data carries no Bessel zero law");
  return (1.0 - data.zero_law->power) / 2.0;
}

double zeta_series(const heat::SpectralData& data, double s, double tol) {
  const double a = abscissa(data);
  if (!(s > a)) throw DivergenceError("zeta_series: s must exceed " + heat::format_double(a));
  const auto& law = *data.zero_law;
  specfun::ZeroList zeros{law.order, {}, 0.0};
  zeros.zeros.reserve(data.size());
  for (double lambda : data.eigenvalues) zeros.zeros.push_back(std::sqrt(lambda));
  double err = 0.0;
  const double sum = law.prefactor * specfun::zero_power_sum(zeros, law.power + 2.0 * s, &err);
  err *= law.prefactor;
  if (!(err <= tol)) throw NumericalError("zeta_series: tail error " + heat::format_double(err) + " exceeds tol");
  return sum;
}

std::string_view to_string(Variant v) { return v == Variant::Axis ? "axis" : "circle_plus_axis"; }

Variant parse_variant(std::string_view text) {
  if (text == "axis") return Variant::Axis;
  if (text == "circle_plus_axis") return Variant::CirclePlusAxis;
  throw DomainError("unknown variant '" + std::string(text) + "' (expected axis or circle_plus_axis)");
}

std::string_view to_string(Provenance p) {
  return p == Provenance::ContourFormula ? "contour_formula" : "spectral_sum";
}

const SpecialValue& ZetaSpecialValues::value_at(int n) const {
  for (const auto& v : values)
    if (v.n == n) return v;
  throw MissingValueError("zeta(" + std::to_string(-n) + ") not available (k_max = " + std::to_string(k_max) + ")");
}

const Residue& ZetaSpecialValues::residue_at(int n) const {
  for (const auto& r : residues)
    if (r.n == n) return r;
  throw MissingValueError("residue at s = -" + std::to_string(n) + "-1/2 not available (k_max = " +
                          std::to_string(k_max) + ")");
}

ZetaSpecialValues zeta_contour_values(const ball::BallSetup& setup, ball::TestFunction f, int k_max) {
  if (k_max < 1) throw DomainError("zeta_contour_values: k_max must be at least 1");
  const Rational nu = setup.nu.exact();
  const int p = ball::weight_power(f);
  const int half_p = p / 2;
  const Rational P = f == ball::TestFunction::F1 ? Rational(2) : Rational(2 * setup.m * setup.m);

  const auto g = specfun::log_j_small_k_coeffs(setup.nu, static_cast<std::size_t>(std::max(half_p, 1)));
  const auto h = specfun::log_i_large_k_coeffs(setup.nu, static_cast<std::size_t>(2 * k_max + 2));

  // zeta_J at the integer u, split into the small-k part and the axis part.
  auto circle = [&](int u) -> Rational {
    if (u >= 1) return -Rational(u) * g.coeff(static_cast<std::size_t>(u));
    if (u == 0) return -nu / 2;  // left over from ln J_nu(k) - nu ln k
    return 0;
  };
  auto axis = [&](int u) -> Rational {
    if (u >= 1) return 0;
    if (u == 0) return -(nu + Rational(1, 2)) / 2;
    const int n = -u;
    return sign_pow(n + 1) * n * h.coeff(static_cast<std::size_t>(2 * n));
  };

  ZetaSpecialValues out;
  out.m = setup.m;
  out.function = f;
  out.k_max = k_max;
  for (int n = 0; n <= k_max; ++n) {
    const int u = half_p - n;
    out.values.push_back({n, P * axis(u), P * (circle(u) + axis(u))});
  }
  // Poles of zeta_J at u = 1/2 - j; s = -n - 1/2 maps to j = n + 1 - p/2.
  for (int n = 0; n < k_max; ++n) {
    const int j = n + 1 - half_p;
    Rational res_times_2pi = 0;
    if (j == 0) {
      res_times_2pi = 1;
    } else if (j > 0) {
      res_times_2pi = sign_pow(j + 1) * (2 * j - 1) * h.coeff(static_cast<std::size_t>(2 * j - 1));
    }
    out.residues.push_back({n, P * res_times_2pi / 2});
  }
  return out;
}

Rational gamma_negative_half_over_sqrt_pi(int k) {
  if (k < 0) throw DomainError("gamma_negative_half_over_sqrt_pi: k must be non-negative");
  // Gamma(x - 1) = Gamma(x) / (x - 1), starting from Gamma(1/2) = sqrt(pi).
  Rational g = 1;
  Rational x(1, 2);
  for (int i = 0; i <= k; ++i) {
    x -= 1;
    g /= x;
  }
  return g;
}

double ExactCoefficient::value() const {
  const double r = to_double(rational);
  return over_sqrt_pi ? r * std::numbers::inv_sqrtpi : r;
}

ExactCoefficient beta_from_zeta(const ZetaSpecialValues& values, int n, Variant variant) {
  if (n < 0) throw DomainError("beta_from_zeta: n must be non-negative");
  const int k = n / 2;
  if (n % 2 == 0) return {n, sign_pow(k) / factorial(k) * values.value_at(k).get(variant), false};
  // Gamma(-k-1/2) Res = (q sqrt(pi)) (r / pi) = q r / sqrt(pi)
  return {n, gamma_negative_half_over_sqrt_pi(k) * values.residue_at(k).over_pi, true};
}

Variant Arbitration::variant_at(int n) const {
  for (const auto& r : records)
    if (r.n == n && r.selected) return *r.selected;
  return Variant::Axis;
}

bool Arbitration::all_consistent() const {
  return std::all_of(records.begin(), records.end(), [](const ArbitrationRecord& r) { return r.consistent; });
}

Arbitration arbitrate(const ZetaSpecialValues& values, const std::vector<Reference>& references) {
  Arbitration a;
  for (const auto& ref : references) {
    const auto& v = values.value_at(ref.n);
    ArbitrationRecord rec;
    rec.n = ref.n;
    rec.reference = ref;
    rec.axis = to_double(v.axis);
    rec.circle_plus_axis = to_double(v.circle_plus_axis);
    double chosen = rec.axis;
    if (!v.variants_agree()) {
      const bool axis_closer = std::fabs(rec.axis - ref.value) <= std::fabs(rec.circle_plus_axis - ref.value);
      rec.selected = axis_closer ? Variant::Axis : Variant::CirclePlusAxis;
      chosen = axis_closer ? rec.axis : rec.circle_plus_axis;
    }
    rec.consistent = std::fabs(chosen - ref.value) <= ref.tolerance;
    a.records.push_back(std::move(rec));
  }
  return a;
}

ExactCoefficient beta_from_zeta(const ZetaSpecialValues& values, int n, const Arbitration& arbitration) {
  return beta_from_zeta(values, n, arbitration.variant_at(n / 2));
}

void write_zeta_json(const ZetaSpecialValues& values, const ExportOptions& options, std::ostream& out) {
  using json = nlohmann::ordered_json;
  std::vector<Variant> variants;
  if (options.only) {
    variants = {*options.only};
  } else {
    variants = {Variant::Axis, Variant::CirclePlusAxis};
  }

  json j;
  j["schema"] = 1;
  j["m"] = values.m;
  j["function"] = std::string(ball::to_string(values.function));
  j["provenance"] = std::string(to_string(values.provenance));
  j["k_max"] = values.k_max;

  auto vals = json::array();
  for (const auto& v : values.values)
    for (Variant var : variants)
      vals.push_back({{"s", -v.n},
                      {"variant", std::string(to_string(var))},
                      {"exact", apsheat::to_string(v.get(var))},
                      {"value", to_double(v.get(var))}});
  j["values"] = std::move(vals);

  auto res = json::array();
  for (const auto& r : values.residues)
    res.push_back({{"s", apsheat::to_string(Rational(-2 * r.n - 1, 2))},
                   {"residue_times_pi", apsheat::to_string(r.over_pi)},
                   {"value", to_double(r.over_pi) / std::numbers::pi}});
  j["residues"] = std::move(res);

  auto betas = json::array();
  for (int n = 0; n <= 2 * values.k_max; ++n) {
    if (n % 2 == 1) {
      const auto b = beta_from_zeta(values, n, Variant::Axis);
      betas.push_back({{"n", n}, {"variant", "any"}, {"exact", apsheat::to_string(b.rational)}, {"unit", b.unit()},
                       {"value", b.value()}});
      continue;
    }
    for (Variant var : variants) {
      const auto b = beta_from_zeta(values, n, var);
      betas.push_back({{"n", n}, {"variant", std::string(to_string(var))}, {"exact", apsheat::to_string(b.rational)},
                       {"unit", b.unit()}, {"value", b.value()}});
    }
  }
  j["betas"] = std::move(betas);

  if (options.spectral_sum_at_zero)
    j["spectral_sum"] = {{"s", 0}, {"provenance", "spectral_sum"}, {"value", *options.spectral_sum_at_zero}};

  if (options.arbitration) {
    auto arb = json::array();
    for (const auto& r : options.arbitration->records)
      arb.push_back({{"s", -r.n},
                     {"reference", r.reference.value},
                     {"reference_tolerance", r.reference.tolerance},
                     {"reference_source", r.reference.source},
                     {"axis", r.axis},
                     {"circle_plus_axis", r.circle_plus_axis},
                     {"selected", r.selected ? json(std::string(to_string(*r.selected))) : json("either")},
                     {"consistent", r.consistent}});
    j["arbitration"] = std::move(arb);
  }
  out << j.dump(2) << '\n';
}

}  // namespace apsheat::zeta
