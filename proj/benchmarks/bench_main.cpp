// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "fracspec/fracspec.hpp"

using namespace fracspec;

namespace {

SimilaritySet cantor() {
  auto r = [](const char* t) { return parse_scalar(t); };
  return SimilaritySet::validate({r("1/3"), r("1/3"), r("1/3")}, {r("1/2"), r("0"), r("1/2")},
                                 {r("0"), r("1/2"), r("1/2")});
}

void BM_Iterate(benchmark::State& state) {
  const auto s = cantor();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iterate(s, m));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(pieces_at_level(s, m)));
}
BENCHMARK(BM_Iterate)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto s = cantor();
  const auto it = iterate(s, static_cast<int>(state.range(0)));
  const auto mom = moments(s);
  const Rational lambda = parse_scalar("1234/7");
  for (auto _ : state) benchmark::DoNotOptimize(assemble(it, mom, lambda, parse_scalar("1/1000")));
}
BENCHMARK(BM_Assemble)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

template <MinorScaling Scaling>
void BM_Inertia(benchmark::State& state) {
  const auto s = cantor();
  const int m = static_cast<int>(state.range(0));
  const auto t = assemble(iterate(s, m), moments(s), parse_scalar("1234/7"), Rational(0));
  for (auto _ : state) benchmark::DoNotOptimize(inertia(t, Scaling));
  state.counters["dim"] = static_cast<double>(t.dim());
}
BENCHMARK(BM_Inertia<MinorScaling::exact>)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Inertia<MinorScaling::common_factor>)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BracketCantor(benchmark::State& state) {
  const auto s = cantor();
  BracketOptions opts;
  opts.width_tol = parse_scalar("1/100");
  opts.relative_tol = true;
  for (auto _ : state) {
    Certifier c(s);
    benchmark::DoNotOptimize(c.bracket(static_cast<int>(state.range(0)), opts));
  }
}
BENCHMARK(BM_BracketCantor)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
