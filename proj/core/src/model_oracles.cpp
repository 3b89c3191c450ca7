#include "apsheat/model_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include <boost/math/quadrature/gauss.hpp>
#include <json.hpp>

#include "apsheat/errors.hpp"
#include "apsheat/heat_content.hpp"

namespace apsheat::oracles {

namespace {

const double kInvSqrtPi = std::numbers::inv_sqrtpi;

double need(const std::optional<double>& v, const char* name) {
  if (!v) throw MissingValueError(std::string("missing input: ") + name);
  return *v;
}

#define APSHEAT_NEED(obj, field) need((obj).field, #field)

}  // namespace

Coefficients dirichlet_coeffs(const BoundaryGeometryData& d) {
  const double b0 = APSHEAT_NEED(d, pair);
  const double b1 = -2.0 * kInvSqrtPi * APSHEAT_NEED(d, bd_pair);
  const double b2 = -APSHEAT_NEED(d, d_pair) + 0.5 * APSHEAT_NEED(d, laa_pair) - APSHEAT_NEED(d, pair_dn2);
  const double inner = 2.0 / 3.0 * APSHEAT_NEED(d, dnn1_pair) + 2.0 / 3.0 * APSHEAT_NEED(d, pair_dnn2) -
                       APSHEAT_NEED(d, tangential_grad) + APSHEAT_NEED(d, e_pair) -
                       2.0 / 3.0 * APSHEAT_NEED(d, laa_dn1_pair) - 2.0 / 3.0 * APSHEAT_NEED(d, laa_pair_dn2) +
                       APSHEAT_NEED(d, laa_lbb_pair) / 12.0 - APSHEAT_NEED(d, lab_lab_pair) / 6.0 +
                       APSHEAT_NEED(d, ramam_pair) / 6.0;
  return {b0, b1, b2, -2.0 * kInvSqrtPi * inner};
}

Coefficients robin_coeffs(const BoundaryGeometryData& d) {
  const double b0 = APSHEAT_NEED(d, pair);
  const double b2 = -APSHEAT_NEED(d, d_pair) + APSHEAT_NEED(d, b_pair);
  const double b3 = 4.0 / 3.0 * kInvSqrtPi * APSHEAT_NEED(d, bb_pair);
  return {b0, 0.0, b2, b3};
}

std::array<double, 2> ansatz_coeffs(const AnsatzInputs& in, const AnsatzConstants& c) {
  const double b1 = 2.0 * kInvSqrtPi * c.c0 * APSHEAT_NEED(in, pi_pair);
  const double b2 = -APSHEAT_NEED(in, interior_pp) +
                    c.c1 * (APSHEAT_NEED(in, gamma_p1) + APSHEAT_NEED(in, gamma_p2)) +
                    c.c2 * APSHEAT_NEED(in, laa_pi_pair) + c.c3 * APSHEAT_NEED(in, theta_pi_pair);
  return {b1, b2};
}

#undef APSHEAT_NEED

AnsatzInputs transposed(const AnsatzInputs& in) {
  AnsatzInputs out = in;
  std::swap(out.gamma_p1, out.gamma_p2);
  return out;
}

BoundaryGeometryData interval_geometry(const IntervalFunction& f1, const IntervalFunction& f2, double S) {
  using Quad = boost::math::quadrature::gauss<double, 30>;
  BoundaryGeometryData d;
  d.dimension = 1;
  d.pair = Quad::integrate([&](double x) { return f1.value(x) * f2.value(x); }, 0.0, 1.0);
  d.d_pair = Quad::integrate([&](double x) { return -f1.d2(x) * f2.value(x); }, 0.0, 1.0);

  // Boundary points x = 0 and x = 1 with inward normal derivative +d/dx and -d/dx.
  struct End {
    double x, sign;
  };
  const End ends[] = {{0.0, 1.0}, {1.0, -1.0}};
  double bd = 0, p_dn2 = 0, dn1_p = 0, dnn1 = 0, dnn2 = 0, bp = 0, bb = 0;
  for (const auto& e : ends) {
    const double u1 = f1.value(e.x), u2 = f2.value(e.x);
    const double n1 = e.sign * f1.d1(e.x), n2 = e.sign * f2.d1(e.x);
    bd += u1 * u2;
    p_dn2 += u1 * n2;
    dn1_p += n1 * u2;
    dnn1 += f1.d2(e.x) * u2;
    dnn2 += u1 * f2.d2(e.x);
    bp += (n1 + S * u1) * u2;
    bb += (n1 + S * u1) * (n2 + S * u2);
  }
  d.bd_pair = bd;
  d.pair_dn2 = p_dn2;
  d.dn1_pair = dn1_p;
  d.dnn1_pair = dnn1;
  d.pair_dnn2 = dnn2;
  d.b_pair = bp;
  d.bb_pair = bb;
  d.laa_pair = d.tangential_grad = d.e_pair = d.laa_dn1_pair = d.laa_pair_dn2 = d.laa_lbb_pair =
      d.lab_lab_pair = d.ramam_pair = 0.0;
  return d;
}

RecursionReport lemma2_recursion_check(const heat::SpectralData& data, const std::vector<double>& t_grid,
                                       double tolerance, double sum_tol) {
  if (!data.satisfies_boundary_condition)
    throw DomainError("lemma2_recursion_check: f1 does not satisfy the boundary condition");
  if (t_grid.empty()) throw DomainError("lemma2_recursion_check: empty t grid");
  const heat::SpectralData image = heat::operator_image(data);

  RecursionReport r;
  heat::HeatCurve curve, image_curve;
  for (double t : t_grid) {
    const auto rate = heat::beta_rate_at(data, t, sum_tol);
    const auto img = heat::beta_at(image, t, sum_tol);
    const double scale = std::max(std::fabs(img.value), 1e-300);
    r.max_identity_deviation = std::max(r.max_identity_deviation, std::fabs(rate.value - img.value) / scale);

    const double h = 1e-4 * t;
    const double fd = (heat::beta_at(data, t - h, sum_tol).value - heat::beta_at(data, t + h, sum_tol).value) / (2 * h);
    const double fd_scale = std::max(std::fabs(rate.value), 1e-300);
    r.max_difference_deviation =
        std::max(r.max_difference_deviation, rate.value == 0.0 && fd == 0.0 ? 0.0 : std::fabs(fd - rate.value) / fd_scale);

    const auto b = heat::beta_at(data, t, sum_tol);
    curve.samples.push_back({t, b.value, b.tail_bound});
    image_curve.samples.push_back({t, img.value, img.tail_bound});
  }
  r.identity_pass = r.max_identity_deviation <= 1e-12;

  constexpr int kOrder = 6;
  if (t_grid.size() >= 3 * (kOrder + 1) && std::is_sorted(t_grid.begin(), t_grid.end())) {
    const auto fit = asym::fit_expansion(curve, kOrder);
    const auto image_fit = asym::fit_expansion(image_curve, kOrder);
    r.beta2 = fit.coefficients[2];
    r.beta2_uncertainty = fit.uncertainties[2];
    r.image_beta0 = image_fit.coefficients[0];
    r.image_beta0_uncertainty = image_fit.uncertainties[0];
    r.recursion_checked = true;
    r.recursion_pass = std::fabs(r.beta2 + r.image_beta0) <= tolerance;
  }
  return r;
}

void Report::add(std::string name, double expected, double fitted, double tolerance) {
  const bool pass = std::fabs(fitted - expected) <= tolerance;
  cases.push_back({std::move(name), expected, fitted, tolerance, pass});
}

bool Report::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const ReportCase& c) { return c.pass; });
}

void write_report_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["suite"] = report.suite;
  auto cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"name", c.name},
                     {"expected", c.expected},
                     {"fitted", c.fitted},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
  j["cases"] = std::move(cases);
  out << j.dump(2) << '\n';
}

}  // namespace apsheat::oracles
