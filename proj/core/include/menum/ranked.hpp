#pragma once

#include <cstdint>
#include <functional>

#include "menum/matching.hpp"
#include "menum/matroid.hpp"
#include "menum/sink.hpp"

namespace menum {

/// A threshold enumerator A(k): streams every family member of cardinality
/// at least k. k_max is the largest useful stage (the family's optimum),
/// k_min the smallest stage to run (0 = full ranked enumeration).
struct ThresholdAlgorithm {
  std::size_t k_max = 0;
  std::size_t k_min = 0;
  std::function<bool(std::size_t k, const SolutionSink&)> run;
};

struct RankedRunInfo {
  std::uint64_t forwarded = 0;       // solutions actually emitted
  std::uint64_t stage_outputs = 0;   // everything the stages produced, ignored or not
  std::uint64_t stages = 0;
  bool stopped = false;              // sink ended the run early
};

/// Runs A(k) for k = k_max down to k_min, forwarding only the solutions of
/// cardinality exactly k, so the output is every family member exactly once
/// in non-increasing cardinality order.
RankedRunInfo ranked_enumerate(const ThresholdAlgorithm& algorithm, const SolutionSink& sink);

/// Threshold wrapper around the maximal-common-independent-set enumerator;
/// k_max is the pair's optimum, computed once.
ThresholdAlgorithm make_intersection_threshold(const Matroid& m1, const Matroid& m2,
                                               std::size_t k_min = 0);

/// Threshold wrapper around the maximal-matroid-matching enumerator.
ThresholdAlgorithm make_matching_threshold(const TractablePair& pair, std::size_t k_min = 0);

}  // namespace menum
