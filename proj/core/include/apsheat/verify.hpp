#pragma once

#include <string_view>
#include <vector>

#include "apsheat/asymptotics.hpp"
#include "apsheat/ball_dirac.hpp"
#include "apsheat/heat_content.hpp"
#include "apsheat/model_oracles.hpp"

namespace apsheat::verify {

/// Sampling and fitting parameters shared by the suites. The defaults keep
/// every ball spectrum under 300 zeros.
struct CurveSettings {
  double t_min = 5e-5;
  double t_max = 2e-2;
  std::size_t points = 150;
  double tol = 1e-15;
  int max_order = 6;
  unsigned threads = 1;
};

struct FittedCurve {
  heat::SpectralData data;
  heat::HeatCurve curve;
  asym::AsymptoticFit fit;
};

/// Samples and fits an arbitrary spectrum on the settings' grid.
FittedCurve fit_spectrum(heat::SpectralData data, const CurveSettings& settings);

/// Ball spectrum with just enough zeros for the settings, sampled and fitted.
FittedCurve fit_ball(int m, ball::TestFunction f, const CurveSettings& settings);

/// "2..5" or "3". Throws DomainError when malformed or empty.
std::vector<int> parse_m_range(std::string_view text);

/// Suites: "ball", "lemma1", "lemma2", "zeta". Throws DomainError for an
/// unknown suite or an empty m list.
oracles::Report run_suite(std::string_view suite, const std::vector<int>& ms, const CurveSettings& settings = {});

}  // namespace apsheat::verify
