// apsheat: batch front end. Every subcommand writes one CSV or JSON file
// (or stdout for "-") and maps failures to exit codes:
//   0 success, 2 usage or domain error, 3 numerical failure, 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "apsheat/asymptotics.hpp"
#include "apsheat/ball_dirac.hpp"
#include "apsheat/bessel_zeros.hpp"
#include "apsheat/errors.hpp"
#include "apsheat/heat_content.hpp"
#include "apsheat/verify.hpp"
#include "apsheat/zeta_route.hpp"

namespace {

using namespace apsheat;

constexpr int kExitDomain = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerification = 4;

void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file '" + path + "'");
  out << text;
}

struct ZerosArgs {
  std::string nu;
  std::size_t count = 1;
  std::string out = "-";
};

int run_zeros(const ZerosArgs& a) {
  const auto order = specfun::BesselOrder::parse(a.nu);
  const auto zeros = specfun::bessel_j_zeros(order, a.count);
  std::ostringstream os;
  os << "index,zero,residual\n";
  for (std::size_t k = 0; k < zeros.zeros.size(); ++k) {
    const double mu = zeros.zeros[k];
    os << k + 1 << ',' << heat::format_double(mu) << ',' << heat::format_double(std::fabs(specfun::bessel_j(order, mu)))
       << '\n';
  }
  emit(a.out, os.str());
  return 0;
}

struct HeatArgs {
  int m = 3;
  std::string function = "f1";
  double t_min = 1e-4;
  double t_max = 1e-1;
  std::size_t points = 40;
  double tol = 1e-12;
  std::size_t modes = 0;
  std::string out = "-";
};

int run_heat(const HeatArgs& a, unsigned threads) {
  if (!(a.t_min > 0.0)) throw DomainError("--t-min must be positive");
  if (!(a.t_max > a.t_min)) throw DomainError("--t-max must exceed --t-min");
  const auto setup = ball::BallSetup::make(a.m);
  const auto f = ball::parse_test_function(a.function);
  const std::size_t modes = a.modes ? a.modes : ball::modes_for(setup, f, a.t_min, a.tol);
  const auto data = ball::build_spectral_data(setup, f, modes);
  const auto curve = heat::sample_curve(data, a.t_min, a.t_max, a.points, a.tol, threads);
  std::ostringstream os;
  heat::write_curve_csv(curve, os);
  emit(a.out, os.str());
  return 0;
}

struct FitArgs {
  std::string input;
  int max_order = 6;
  int log_order = -1;
  double window_ratio = 10.0;
  std::string out = "-";
};

int run_fit(const FitArgs& a) {
  std::ifstream in(a.input, std::ios::binary);
  if (!in) throw DomainError("cannot open input file '" + a.input + "'");
  const auto curve = heat::read_curve_csv(in);
  asym::WindowSpec spec;
  spec.ratio = a.window_ratio;
  auto fit = asym::fit_expansion(curve, a.max_order, spec);
  if (a.log_order >= 0) fit.log_diagnostic = asym::log_term_scan(curve, a.log_order, a.max_order, spec);
  std::ostringstream os;
  asym::write_fit_json(fit, os);
  emit(a.out, os.str());
  return 0;
}

struct ZetaArgs {
  int m = 3;
  std::string function = "f1";
  std::string variant = "both";
  int k_max = 2;
  std::string out = "-";
};

int run_zeta(const ZetaArgs& a, unsigned threads) {
  const auto setup = ball::BallSetup::make(a.m);
  const auto f = ball::parse_test_function(a.function);
  const auto values = zeta::zeta_contour_values(setup, f, a.k_max);
  zeta::ExportOptions options;
  zeta::Arbitration arbitration;
  if (a.variant == "arbitrated") {
    verify::CurveSettings settings;
    settings.threads = threads;
    const auto fc = verify::fit_ball(a.m, f, settings);
    const double z0 = zeta::zeta_series(fc.data, 0.0);
    options.spectral_sum_at_zero = z0;
    arbitration = zeta::arbitrate(values, {{0, z0, 1e-8, "spectral sum"},
                                           {1, -fc.fit.coefficients[2], 1e-3, "fitted beta2"}});
    options.arbitration = &arbitration;
  } else if (a.variant != "both") {
    options.only = zeta::parse_variant(a.variant);
  }
  std::ostringstream os;
  zeta::write_zeta_json(values, options, os);
  emit(a.out, os.str());
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::string m_range = "2..6";
  std::string out = "-";
};

int run_verify(const VerifyArgs& a, unsigned threads) {
  const auto ms = verify::parse_m_range(a.m_range);
  verify::CurveSettings settings;
  settings.threads = threads;
  const auto report = verify::run_suite(a.suite, ms, settings);
  std::ostringstream os;
  oracles::write_report_json(report, os);
  emit(a.out, os.str());
  for (const auto& c : report.cases)
    if (!c.pass) std::cerr << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.fitted << '\n';
  return report.all_pass() ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat content asymptotics of the Dirac Laplacian on the ball with spectral boundary conditions"};
  app.require_subcommand(1);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--threads", threads, "Worker threads; results do not depend on it")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ZerosArgs za;
  auto* zeros = app.add_subcommand("zeros", "Positive zeros of J_nu as CSV index,zero,residual");
  zeros->add_option("--nu", za.nu, "Order, e.g. 0.5 or 3/2")->required();
  zeros->add_option("--count", za.count, "Number of zeros")->check(CLI::PositiveNumber)->capture_default_str();
  zeros->add_option("--out", za.out, "Output path, - for stdout")->capture_default_str();

  HeatArgs ha;
  auto* heatc = app.add_subcommand("heat-content", "Heat content curve of a ball test function as CSV");
  heatc->add_option("--m", ha.m, "Ball dimension")->check(CLI::Range(2, 64))->capture_default_str();
  heatc->add_option("--function", ha.function, "f1 or f2")->capture_default_str();
  heatc->add_option("--t-min", ha.t_min, "Smallest time")->capture_default_str();
  heatc->add_option("--t-max", ha.t_max, "Largest time")->capture_default_str();
  heatc->add_option("--points", ha.points, "Samples on the geometric grid")->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  heatc->add_option("--tol", ha.tol, "Truncation tolerance per sample")->check(CLI::PositiveNumber)
      ->capture_default_str();
  heatc->add_option("--modes", ha.modes, "Bessel zeros to use; 0 picks the smallest certified count")
      ->capture_default_str();
  heatc->add_option("--out", ha.out, "Output path, - for stdout")->capture_default_str();

  FitArgs fa;
  auto* fit = app.add_subcommand("fit", "Fit beta_n from a heat content CSV; JSON output");
  fit->add_option("--input", fa.input, "Curve CSV")->required();
  fit->add_option("--max-order", fa.max_order, "Highest order N (0..6)")->check(CLI::Range(0, 6))
      ->capture_default_str();
  fit->add_option("--log-order", fa.log_order, "Also scan for a t^{n/2} ln t term at this order")
      ->check(CLI::Range(0, 6));
  fit->add_option("--window-ratio", fa.window_ratio, "t_hi / t_lo per window")->capture_default_str();
  fit->add_option("--out", fa.out, "Output path, - for stdout")->capture_default_str();

  ZetaArgs zta;
  auto* zetac = app.add_subcommand("zeta", "Zeta special values and residues from the contour formulas; JSON");
  zetac->add_option("--m", zta.m, "Ball dimension")->check(CLI::Range(2, 64))->capture_default_str();
  zetac->add_option("--function", zta.function, "f1 or f2")->capture_default_str();
  zetac->add_option("--variant", zta.variant, "both, axis, circle_plus_axis or arbitrated")
      ->check(CLI::IsMember({"both", "axis", "circle_plus_axis", "arbitrated"}))
      ->capture_default_str();
  zetac->add_option("--k-max", zta.k_max, "Values at s = 0..-k_max, residues at -1/2..-k_max+1/2")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();
  zetac->add_option("--out", zta.out, "Output path, - for stdout")->capture_default_str();

  VerifyArgs va;
  auto* verifyc = app.add_subcommand("verify", "Run a verification suite; JSON report, exit 4 on failure");
  verifyc->add_option("--suite", va.suite, "ball, lemma1, lemma2 or zeta")
      ->required()
      ->check(CLI::IsMember({"ball", "lemma1", "lemma2", "zeta"}));
  verifyc->add_option("--m-range", va.m_range, "Dimensions, e.g. 2..5")->capture_default_str();
  verifyc->add_option("--out", va.out, "Output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*zeros) return run_zeros(za);
    if (*heatc) return run_heat(ha, threads);
    if (*fit) return run_fit(fa);
    if (*zetac) return run_zeta(zta, threads);
    if (*verifyc) return run_verify(va, threads);
  } catch (const DomainError& e) {
    std::cerr << "apsheat: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "apsheat: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitDomain;
}
