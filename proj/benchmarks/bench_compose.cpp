#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ptrust/trust.hpp"

using namespace ptrust;

namespace {

std::vector<double> random_values(std::size_t n) {
  std::mt19937 rng(5u);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::vector<double> values(n);
  for (double& v : values) v = value(rng);
  return values;
}

void ComposeAnd(benchmark::State& state) {
  std::vector<double> values = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_and(values));
}
BENCHMARK(ComposeAnd)->Arg(4)->Arg(64);

void ComposeOr(benchmark::State& state) {
  std::vector<double> values = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compose_or(values));
}
BENCHMARK(ComposeOr)->Arg(4)->Arg(64);

void ComposeXorSelfWeighted(benchmark::State& state) {
  std::vector<double> values = random_values(static_cast<std::size_t>(state.range(0)));
  std::vector<XorTerm> terms;
  for (double v : values) terms.push_back({v, v});
  for (auto _ : state) benchmark::DoNotOptimize(compose_xor_weighted(terms));
}
BENCHMARK(ComposeXorSelfWeighted)->Arg(4)->Arg(64);

}  // namespace
