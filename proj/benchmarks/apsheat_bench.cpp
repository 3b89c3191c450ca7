#include <benchmark/benchmark.h>

#include "apsheat/ball_dirac.hpp"
#include "apsheat/bessel.hpp"
#include "apsheat/bessel_zeros.hpp"
#include "apsheat/heat_content.hpp"
#include "apsheat/log_series.hpp"
#include "apsheat/verify.hpp"
#include "apsheat/zeta_route.hpp"

using namespace apsheat;

namespace {

void BM_BesselJ(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_j(1.5, x));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(20)->Arg(200);

void BM_Zeros(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::bessel_j_zeros(specfun::BesselOrder(1, 2), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Zeros)->Arg(50)->Arg(300);

void BM_LogSeries(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(specfun::log_i_large_k_coeffs(specfun::BesselOrder(3, 2), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_LogSeries)->Arg(4)->Arg(12);

void BM_BetaAt(benchmark::State& state) {
  const auto setup = ball::BallSetup::make(4);
  const auto data = ball::build_spectral_data(setup, ball::TestFunction::F1, 250);
  for (auto _ : state) benchmark::DoNotOptimize(heat::beta_at(data, 1e-4, 1e-15));
}
BENCHMARK(BM_BetaAt);

void BM_FitBall(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify::fit_ball(m, ball::TestFunction::F2, {}));
}
BENCHMARK(BM_FitBall)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ZetaContour(benchmark::State& state) {
  const auto setup = ball::BallSetup::make(5);
  for (auto _ : state) benchmark::DoNotOptimize(zeta::zeta_contour_values(setup, ball::TestFunction::F1, 4));
}
BENCHMARK(BM_ZetaContour);

}  // namespace
BENCHMARK_MAIN();
