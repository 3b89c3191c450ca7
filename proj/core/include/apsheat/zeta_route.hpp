#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apsheat/ball_dirac.hpp"
#include "apsheat/rational.hpp"
#include "apsheat/spectral_data.hpp"

namespace apsheat::zeta {

/// sum_k w_k lambda_k^{-s} for data built from Bessel zeros, with the
/// omitted zeros summed from McMahon asymptotics. Throws DivergenceError
/// below the abscissa of convergence (s <= -1/2 for F1, s <= -3/2 for F2),
/// DomainError if the data carries no zero law, NumericalError if the tail
/// error estimate exceeds tol.
double zeta_series(const heat::SpectralData& data, double s, double tol = 1e-10);

/// Abscissa of convergence of zeta_series for the data.
double abscissa(const heat::SpectralData& data);

/// Two ways of combining the small-k (circle) and imaginary-axis parts of the
/// contour representation at non-positive integers s.
enum class Variant { Axis, CirclePlusAxis };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);

enum class Provenance { ContourFormula, SpectralSum };
std::string_view to_string(Provenance p);

/// zeta(-n) under both variants, exact. They differ only where the
/// shifted argument s + p/2 is 0 or positive.
struct SpecialValue {
  int n = 0;  // s = -n
  Rational axis;
  Rational circle_plus_axis;

  const Rational& get(Variant v) const { return v == Variant::Axis ? axis : circle_plus_axis; }
  bool variants_agree() const { return axis == circle_plus_axis; }
};

/// Res zeta(-n - 1/2) = over_pi / pi.
struct Residue {
  int n = 0;
  Rational over_pi;
};

struct ZetaSpecialValues {
  int m = 0;
  ball::TestFunction function = ball::TestFunction::F1;
  int k_max = 0;
  std::vector<SpecialValue> values;  // n = 0..k_max
  std::vector<Residue> residues;     // n = 0..k_max-1
  Provenance provenance = Provenance::ContourFormula;

  const SpecialValue& value_at(int n) const;  // throws MissingValueError
  const Residue& residue_at(int n) const;     // throws MissingValueError
};

/// zeta(s) = P zeta_J(s + p/2), zeta_J(u) = sum_k mu_k^{-2u}, from the g_l
/// and h_j series of J_nu and I_nu. Throws DomainError for k_max < 1.
ZetaSpecialValues zeta_contour_values(const ball::BallSetup& setup, ball::TestFunction f, int k_max);

/// Gamma(-k - 1/2) / sqrt(pi), exact.
Rational gamma_negative_half_over_sqrt_pi(int k);

/// An exact coefficient: value = rational, or rational / sqrt(pi) for odd n.
struct ExactCoefficient {
  int n = 0;
  Rational rational;
  bool over_sqrt_pi = false;

  double value() const;
  std::string unit() const { return over_sqrt_pi ? "1/sqrt(pi)" : "1"; }
};

/// beta_{2k} = (-1)^k / k! zeta(-k), beta_{2k+1} = Gamma(-k-1/2) Res zeta(-k-1/2).
/// Throws MissingValueError if the needed value or residue is absent.
ExactCoefficient beta_from_zeta(const ZetaSpecialValues& values, int n, Variant variant);

/// An independent estimate of zeta(-n).
struct Reference {
  int n = 0;
  double value = 0.0;
  double tolerance = 0.0;
  std::string source;
};

struct ArbitrationRecord {
  int n = 0;
  Reference reference;
  double axis = 0.0;
  double circle_plus_axis = 0.0;
  /// Empty when the variants coincide at this n.
  std::optional<Variant> selected;
  bool consistent = false;
};

struct Arbitration {
  std::vector<ArbitrationRecord> records;

  /// The variant selected at n, or Axis where the variants agree.
  Variant variant_at(int n) const;
  bool all_consistent() const;
};

/// For each reference picks the variant closer to it and records whether the
/// pick lies within the reference tolerance.
Arbitration arbitrate(const ZetaSpecialValues& values, const std::vector<Reference>& references);

/// beta_n using the arbitrated variant for even n.
ExactCoefficient beta_from_zeta(const ZetaSpecialValues& values, int n, const Arbitration& arbitration);

struct ExportOptions {
  std::optional<Variant> only;  // both variants when empty
  std::optional<double> spectral_sum_at_zero;
  const Arbitration* arbitration = nullptr;
};

void write_zeta_json(const ZetaSpecialValues& values, const ExportOptions& options, std::ostream& out);

}  // namespace apsheat::zeta
