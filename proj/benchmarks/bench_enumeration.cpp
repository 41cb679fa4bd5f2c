// Delay-oriented benchmarks: wall time per full enumeration plus the
// worst observed output gap in oracle calls, surfaced as counters.

#include <benchmark/benchmark.h>

#include <memory>

#include "menum/applications.hpp"
#include "menum/exchange.hpp"
#include "menum/intersection_enum.hpp"
#include "menum/matching.hpp"
#include "menum/matroid.hpp"
#include "menum/stats.hpp"

namespace {

using namespace menum;

Graph cycle(int n) {
  Graph g;
  g.vertices = n;
  for (int v = 0; v < n; ++v) g.edges.emplace_back(v, (v + 1) % n);
  return g;
}

void BM_MaximumCommonIndependentSet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniformMatroid m1(n, n / 2);
  const PartitionMatroid m2(
      n, [&] {
        std::vector<std::vector<int>> blocks;
        for (int e = 0; e < n; e += 2) {
          blocks.push_back({e});
          if (e + 1 < n) blocks.back().push_back(e + 1);
        }
        return blocks;
      }(),
      std::vector<int>(static_cast<std::size_t>((n + 1) / 2), 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_common_independent_set(m1, m2));
  }
  state.counters["oracle_calls"] =
      benchmark::Counter(static_cast<double>(m1.query_count() + m2.query_count()),
                         benchmark::Counter::kAvgIterations);
}
BENCHMARK(BM_MaximumCommonIndependentSet)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateLargeUniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const UniformMatroid m1(n, 3);
  const UniformMatroid m2(n, 4);
  double max_gap = 0;
  std::uint64_t solutions = 0;
  for (auto _ : state) {
    DelayRecorder recorder([&] { return m1.query_count() + m2.query_count(); });
    solutions = 0;
    enumerate_large(m1, m2, 1, [&](const ElementSet&) {
      recorder.output();
      ++solutions;
      return true;
    });
    recorder.finish();
    max_gap = static_cast<double>(recorder.stats().max_gap_queries());
  }
  state.counters["solutions"] = static_cast<double>(solutions);
  state.counters["max_gap_queries"] = max_gap;
}
BENCHMARK(BM_EnumerateLargeUniform)->Arg(7)->Arg(9);

void BM_EnumerateLargeMatchingsEncoded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto m1 = std::make_shared<UniformMatroid>(n, 3);
  auto m2 = std::make_shared<UniformMatroid>(n, 2);
  const TractablePair pair = encode_intersection(m1, m2);
  double max_gap = 0;
  for (auto _ : state) {
    DelayRecorder recorder([&] { return pair.matroid->query_count(); });
    enumerate_large_matchings(pair, 1, [&](const ElementSet&) {
      recorder.output();
      return true;
    });
    recorder.finish();
    max_gap = static_cast<double>(recorder.stats().max_gap_queries());
  }
  state.counters["max_gap_queries"] = max_gap;
}
BENCHMARK(BM_EnumerateLargeMatchingsEncoded)->Arg(5)->Arg(6);

void BM_MinimalConnectedVertexCovers(benchmark::State& state) {
  const Graph g = cycle(static_cast<int>(state.range(0)));
  std::uint64_t covers = 0;
  for (auto _ : state) {
    covers = 0;
    enumerate_min_cvc(g, static_cast<std::size_t>(g.vertices), [&](const ElementSet&) {
      ++covers;
      return true;
    });
  }
  state.counters["covers"] = static_cast<double>(covers);
}
BENCHMARK(BM_MinimalConnectedVertexCovers)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
