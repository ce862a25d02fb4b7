#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "distft/derivative.hpp"
#include "distft/quadrature.hpp"
#include "distft/sinc_integrals.hpp"
#include "distft/transform.hpp"
#include "distft/trig_series.hpp"
#include "distft/verify.hpp"

using namespace distft;

static void BM_TransformRoundTrip(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<dist::DistExpr> exprs;
  for (int i = 0; i < 64; ++i)
    exprs.push_back(verify::random_invertible_expr(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& e = exprs[i++ % exprs.size()];
    benchmark::DoNotOptimize(dist::ift(dist::ft(e)));
  }
}
BENCHMARK(BM_TransformRoundTrip);

static void BM_HalfDerivativeTheta(benchmark::State& state) {
  const auto theta = dist::DistExpr::single(
      dist::Side::X, exact::Coeff::one(),
      dist::DistTerm::one_sided(exact::Rational(0), +1));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dist::frac_derivative(theta, exact::Rational(1, 2)));
}
BENCHMARK(BM_HalfDerivativeTheta);

static void BM_SincExactDiagonal(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sinc::full_line(n, n));
}
BENCHMARK(BM_SincExactDiagonal)->Arg(8)->Arg(24)->Arg(64);

static void BM_SincOracle(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        quad::integrate_sinc_power(5, 3, quad::Range::Half, 1e-9));
}
BENCHMARK(BM_SincOracle);

static void BM_SeriesHalfDerivSample(benchmark::State& state) {
  const auto s = series::builtin_series("sawtooth", state.range(0));
  std::vector<double> xs(1000);
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = -3.14 + 6.28 * static_cast<double>(i) / (xs.size() - 1);
  for (auto _ : state) {
    const auto d = series::frac_deriv_series(s, exact::Rational(1, 2));
    benchmark::DoNotOptimize(series::sample_series(d, xs));
  }
}
BENCHMARK(BM_SeriesHalfDerivSample)->Arg(30)->Arg(100);

BENCHMARK_MAIN();
