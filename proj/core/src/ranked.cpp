#include "menum/ranked.hpp"

#include "menum/exchange.hpp"
#include "menum/intersection_enum.hpp"

namespace menum {

RankedRunInfo ranked_enumerate(const ThresholdAlgorithm& algorithm, const SolutionSink& sink) {
  RankedRunInfo info;
  if (algorithm.k_min > algorithm.k_max) return info;
  for (std::size_t k = algorithm.k_max;; --k) {
    ++info.stages;
    const bool keep_going = algorithm.run(k, [&](const ElementSet& solution) {
      ++info.stage_outputs;
      if (solution.count() != k) return true;  // later stage's business
      ++info.forwarded;
      return sink(solution);
    });
    if (!keep_going) {
      info.stopped = true;
      return info;
    }
    if (k == algorithm.k_min) return info;
  }
}

ThresholdAlgorithm make_intersection_threshold(const Matroid& m1, const Matroid& m2,
                                               std::size_t k_min) {
  ThresholdAlgorithm a;
  a.k_max = maximum_common_independent_set(m1, m2).count();
  a.k_min = k_min;
  a.run = [&m1, &m2](std::size_t k, const SolutionSink& sink) {
    return enumerate_large(m1, m2, k, sink);
  };
  return a;
}

ThresholdAlgorithm make_matching_threshold(const TractablePair& pair, std::size_t k_min) {
  ThresholdAlgorithm a;
  a.k_max = pair.solver
                ->maximum_matching(*pair.matroid, pair.graph,
                                   ElementSet::full(pair.graph.edge_count()))
                .count();
  a.k_min = k_min;
  a.run = [&pair](std::size_t k, const SolutionSink& sink) {
    return enumerate_large_matchings(pair, k, sink);
  };
  return a;
}

}  // namespace menum
