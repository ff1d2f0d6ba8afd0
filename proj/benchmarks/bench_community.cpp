#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "ptrust/community.hpp"
#include "ptrust/graph_file.hpp"

using namespace ptrust;

namespace {

TrustMatrix random_matrix(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> entry(0.0, 1.0);
  std::vector<AgentId> roster;
  for (std::size_t i = 0; i < n; ++i) roster.push_back(AgentId{"a" + std::to_string(i)});
  TrustMatrix m(roster, PromiseType{"pay"});
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (entry(rng) < 0.3) m.set(i, j, entry(rng));
  return m;
}

void PrincipalEigenvector(benchmark::State& state) {
  TrustMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7u);
  for (auto _ : state) {
    EigenResult r = principal_eigenvector(m);
    benchmark::DoNotOptimize(r.eigenvalue);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PrincipalEigenvector)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void CommunityTrustPair(benchmark::State& state) {
  TrustMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11u);
  for (auto _ : state) {
    CommunityTrustResult r = community_trust(m);
    benchmark::DoNotOptimize(r.eigenvalue_trusting);
  }
}
BENCHMARK(CommunityTrustPair)->Arg(8)->Arg(64)->Arg(128);

void ParseSyntheticGraph(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::string text;
  for (std::size_t i = 0; i < n; ++i) text += "agent a" + std::to_string(i) + "\n";
  std::mt19937 rng(3u);
  for (std::size_t i = 0; i < 4 * n; ++i) {
    std::size_t from = rng() % n, to = rng() % n;
    text += "trust a" + std::to_string(from) + " -> a" + std::to_string(to % n) +
            " : pay = 0." + std::to_string(1 + rng() % 9) + "\n";
  }
  for (auto _ : state) {
    // Duplicate truster/trustee pairs are fine at parse time; only the
    // matrix build rejects them.
    GraphModel model = parse_graph(text);
    benchmark::DoNotOptimize(model.trust_edges.size());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(ParseSyntheticGraph)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
