#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apsheat/asymptotics.hpp"
#include "apsheat/spectral_data.hpp"

namespace apsheat::oracles {

/// Pre-integrated geometric data for a pair (f1, f2) and a Laplace type
/// operator D. Boundary quantities use the inward unit normal e_m; `;`
/// denotes covariant differentiation. Unset fields are reported as missing
/// by the evaluators that need them.
struct BoundaryGeometryData {
  int dimension = 1;
  // interior
  std::optional<double> pair;    // int_M <f1, f2>
  std::optional<double> d_pair;  // int_M <D f1, f2>
  // boundary
  std::optional<double> bd_pair;           // <f1, f2>
  std::optional<double> laa_pair;          // L_aa <f1, f2>
  std::optional<double> pair_dn2;          // <f1, f2;m>
  std::optional<double> dn1_pair;          // <f1;m, f2>
  std::optional<double> dnn1_pair;         // <f1;mm, f2>
  std::optional<double> pair_dnn2;         // <f1, f2;mm>
  std::optional<double> tangential_grad;   // <f1;a, f2;a>
  std::optional<double> e_pair;            // <E f1, f2>
  std::optional<double> laa_dn1_pair;      // L_aa <f1;m, f2>
  std::optional<double> laa_pair_dn2;      // L_aa <f1, f2;m>
  std::optional<double> laa_lbb_pair;      // L_aa L_bb <f1, f2>
  std::optional<double> lab_lab_pair;      // L_ab L_ab <f1, f2>
  std::optional<double> ramam_pair;        // R_amam <f1, f2>
  // Robin, B = grad_m + S
  std::optional<double> b_pair;   // <B f1, f2>
  std::optional<double> bb_pair;  // <B f1, B f2>
};

/// Inputs of the spectral boundary condition ansatz.
struct AnsatzInputs {
  std::optional<double> interior_pp;   // int_M <P f1, P f2>
  std::optional<double> pi_pair;       // <Pi f1, Pi f2>
  std::optional<double> gamma_p1;      // <Pi gamma_m P f1, Pi f2>
  std::optional<double> gamma_p2;      // <Pi f1, Pi gamma_m P f2>
  std::optional<double> laa_pi_pair;   // L_aa <Pi f1, Pi f2>
  std::optional<double> theta_pi_pair; // <Theta Pi f1, Pi f2>
};

struct AnsatzConstants {
  double c0 = -1.0;
  double c1 = 1.0;
  double c2 = 0.5;
  double c3 = 0.0;
};

using Coefficients = std::array<double, 4>;

/// beta_0..beta_3 for Dirichlet conditions. Throws MissingValueError.
Coefficients dirichlet_coeffs(const BoundaryGeometryData& data);

/// beta_0..beta_3 for Robin conditions. Throws MissingValueError.
Coefficients robin_coeffs(const BoundaryGeometryData& data);

/// (beta_1, beta_2) from the ansatz. Throws MissingValueError.
std::array<double, 2> ansatz_coeffs(const AnsatzInputs& inputs, const AnsatzConstants& constants = {});

/// The inputs of the pair (f2, f1).
AnsatzInputs transposed(const AnsatzInputs& inputs);

/// A smooth function on [0, 1] with its first two derivatives.
struct IntervalFunction {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
};

/// Geometry data of (f1, f2) on the flat unit interval with D = -d^2/dx^2
/// and Robin parameter S (the same at both ends), by Gauss-Legendre
/// quadrature in the interior. Curvature and tangential entries are 0.
BoundaryGeometryData interval_geometry(const IntervalFunction& f1, const IntervalFunction& f2, double S = 0.0);

struct RecursionReport {
  /// max over the grid of |(-d beta/dt) - beta_{D f1}| / |beta_{D f1}|.
  double max_identity_deviation = 0.0;
  /// max over the grid of the relative central-difference mismatch.
  double max_difference_deviation = 0.0;
  double beta2 = 0.0;
  double beta2_uncertainty = 0.0;
  double image_beta0 = 0.0;
  double image_beta0_uncertainty = 0.0;
  bool identity_pass = false;
  /// Set when the grid was long enough (>= 21 sorted points) for the fits.
  bool recursion_checked = false;
  bool recursion_pass = false;

  bool pass() const { return identity_pass && (!recursion_checked || recursion_pass); }
};

/// Checks -d beta/dt = beta(D f1, f2)(t) on `t_grid` and, when the grid
/// supports a fit through order 2, beta_2 = -beta_0(D f1, f2) within
/// `tolerance`. Throws DomainError if data.satisfies_boundary_condition is
/// false or the grid is empty.
RecursionReport lemma2_recursion_check(const heat::SpectralData& data, const std::vector<double>& t_grid,
                                       double tolerance = 1e-3, double sum_tol = 1e-15);

struct ReportCase {
  std::string name;
  double expected = 0.0;
  double fitted = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<ReportCase> cases;

  void add(std::string name, double expected, double fitted, double tolerance);
  bool all_pass() const;
};

/// {"schema": 1, "suite", "cases": [{"name", "expected", "fitted", "tolerance", "pass"}]}
void write_report_json(const Report& report, std::ostream& out);

}  // namespace apsheat::oracles
