#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "menum/element_set.hpp"
#include "menum/matroid.hpp"
#include "menum/sink.hpp"

namespace menum {

/// Graph whose vertex set is the matroid's ground set; no self-loops.
/// Edge index = element id of matching sets.
struct MatchingGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
  std::size_t edge_count() const { return edges.size(); }
};

/// V(F): the vertices covered by an edge set.
ElementSet matched_vertices(const MatchingGraph& g, const ElementSet& edge_set);

/// A maximum-matroid-matching procedure. It must handle any minor of the
/// matroid together with the spanning subgraph induced on the minor's ground
/// set: edges with an endpoint outside m.ground() or outside allowed_edges are
/// unavailable. Returns a maximum matching as an edge set.
class MatchingSolver {
 public:
  virtual ~MatchingSolver() = default;
  virtual ElementSet maximum_matching(const Matroid& m, const MatchingGraph& g,
                                      const ElementSet& allowed_edges) const = 0;
};

/// Exact branch-and-bound over edge subsets. Desk-scale only: refuses graphs
/// with more than 30 edges and aborts past a node budget instead of silently
/// burning CPU.
class BruteForceMatchingSolver final : public MatchingSolver {
 public:
  explicit BruteForceMatchingSolver(std::uint64_t node_budget = std::uint64_t{1} << 26)
      : node_budget_(node_budget) {}
  ElementSet maximum_matching(const Matroid& m, const MatchingGraph& g,
                              const ElementSet& allowed_edges) const override;

 private:
  std::uint64_t node_budget_;
};

/// For free matroids: plain maximum graph matching, the oracle is never asked.
class GraphOnlyMatchingSolver final : public MatchingSolver {
 public:
  ElementSet maximum_matching(const Matroid& m, const MatchingGraph& g,
                              const ElementSet& allowed_edges) const override;

 private:
  static ElementSet filter_mask(const Matroid& m, const MatchingGraph& g);
};

/// For pairs whose graph is a disjoint union of edges and whose matroid is a
/// direct sum split by the edges (the intersection encoding produces exactly
/// this shape): solves by matroid intersection over the edge ids, via the
/// augmenting-path machinery. Correctness is the caller's tractability claim;
/// the disjoint-edges shape is verified, the direct-sum property is not.
class PairedGraphIntersectionSolver final : public MatchingSolver {
 public:
  ElementSet maximum_matching(const Matroid& m, const MatchingGraph& g,
                              const ElementSet& allowed_edges) const override;
};

/// A matroid-graph pair bundled with a maximum-matching solver.
struct TractablePair {
  std::shared_ptr<const Matroid> matroid;
  MatchingGraph graph;
  std::shared_ptr<const MatchingSolver> solver;
};

/// Direct sum of two matroids over interleaved element copies: element 2e is
/// the M1-copy of e, element 2e+1 the M2-copy.
class InterleavedSumMatroid final : public Matroid {
 public:
  InterleavedSumMatroid(std::shared_ptr<const Matroid> m1, std::shared_ptr<const Matroid> m2);
  std::uint64_t query_count() const override {
    return m1_->query_count() + m2_->query_count();
  }

 private:
  bool independent_impl(const ElementSet& x) const override;
  std::shared_ptr<const Matroid> m1_, m2_;
};

/// Is m simultaneously a graph matching and matroid-independent on V(m)?
bool is_matching(const TractablePair& p, const ElementSet& edge_set);

/// The (M_12, G_12) encoding of a matroid-intersection instance: copies of
/// each element paired by an edge, so common independent sets correspond to
/// matchings. Solved by delegation to matroid intersection.
TractablePair encode_intersection(std::shared_ptr<const Matroid> m1,
                                  std::shared_ptr<const Matroid> m2);

/// mu(m): lowest-edge-index greedy completion to a maximal matching.
ElementSet complete_matching(const TractablePair& p, const ElementSet& m);

/// Is there a maximum matching containing In and avoiding Ex? ContractError
/// when In is not a matching. Solved on the minor pair: contract V(In),
/// restrict to the untouched vertices, drop the Ex edges only.
bool matching_extension_feasible(const TractablePair& p, const ElementSet& include,
                                 const ElementSet& exclude);
bool matching_extension_feasible(const TractablePair& p, const ElementSet& include,
                                 const ElementSet& exclude, std::size_t opt);

/// Flashlight enumeration of all maximum matchings, lowest edge index first,
/// include branch first. Returns false iff the sink stopped the run.
bool enumerate_maximum_matchings(const TractablePair& p, const SolutionSink& sink);

/// Parent of a maximal matching m with |m| < |root|, under a fixed maximum
/// matching root: exchange one root edge in (constructively, via the lowest
/// addable root vertex and, when needed, the fundamental circuit), drop the
/// clashing edge, complete greedily. Asserts the growth and distance bounds
/// on every call.
ElementSet matching_parent(const TractablePair& p, const ElementSet& m, const ElementSet& root);

std::uint64_t matching_parent_call_count();

/// Lexicographic potential (|root|-|m|, |m ^ root|); (0,0) for maximum m.
std::pair<std::size_t, std::size_t> matching_potential(const ElementSet& m,
                                                       const ElementSet& root);

/// Reverse-search enumeration of every maximal matching with cardinality at
/// least tau, exactly once, pre-order; children arise from edge-set
/// perturbations of size 2..4. Returns false iff the sink stopped the run.
bool enumerate_large_matchings(const TractablePair& p, std::size_t tau, const SolutionSink& sink);

}  // namespace menum
