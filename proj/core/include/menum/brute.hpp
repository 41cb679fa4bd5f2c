#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "menum/element_set.hpp"
#include "menum/graph.hpp"
#include "menum/matching.hpp"
#include "menum/matroid.hpp"

namespace menum {

/// Ground-truth generators. Deliberately independent of the enumeration
/// machinery: plain subset scans against the raw oracles, with hard guards so
/// nobody runs them at real scale by accident.

enum class SolutionMode { All, Maximal, Maximum };

/// Common independent sets of the pair, by a 2^n scan (n <= 20), canonically
/// sorted. Maximality is decided by single-element additions.
std::vector<ElementSet> brute_common_independent(const Matroid& m1, const Matroid& m2,
                                                 SolutionMode mode, std::size_t tau);

/// Matchings of (m, g) by a 2^|E| scan (|E| <= 20); the pair's solver is never
/// consulted.
std::vector<ElementSet> brute_matchings(const Matroid& m, const MatchingGraph& g,
                                        SolutionMode mode, std::size_t tau);

/// Minimal connected vertex covers of size <= tau by a 2^|V| scan (|V| <= 16).
/// On a connected graph non-separating independent sets are downward closed,
/// so maximality of the complement is certified by single-vertex additions.
std::vector<ElementSet> brute_min_cvc(const Graph& g, std::size_t tau);

struct BruteForceReport {
  std::string digest;
  std::vector<ElementSet> solutions;  // canonically sorted, duplicate-free
  std::map<std::size_t, std::size_t> counts_by_size;
};

BruteForceReport make_report(std::string digest, std::vector<ElementSet> solutions);

struct ComparisonResult {
  bool match = false;
  std::vector<ElementSet> missing;     // expected but not streamed
  std::vector<ElementSet> unexpected;  // streamed but not expected
  std::vector<ElementSet> duplicated;  // streamed more than once
};

/// Diff a streamed enumeration against the report's solution list.
ComparisonResult compare_with_stream(const BruteForceReport& expected,
                                     const std::vector<ElementSet>& streamed);

}  // namespace menum
