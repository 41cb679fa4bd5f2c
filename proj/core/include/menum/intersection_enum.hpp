#pragma once

#include <cstdint>

#include "menum/element_set.hpp"
#include "menum/exchange.hpp"
#include "menum/matroid.hpp"
#include "menum/sink.hpp"

namespace menum {

/// An extension query: is there a maximum common independent set containing
/// `include` and avoiding `exclude`?
struct ExtensionInstance {
  const Matroid* m1 = nullptr;
  const Matroid* m2 = nullptr;
  ElementSet include;
  ElementSet exclude;
};

bool extension_feasible(const ExtensionInstance& inst);
/// Same, with the pair's optimum already known (saves one Lawler run).
bool extension_feasible(const ExtensionInstance& inst, std::size_t opt);

/// Flashlight enumeration of every maximum common independent set, exactly
/// once, branching on the lowest-id undecided element, include branch first.
/// Returns false iff the sink stopped the run.
bool enumerate_maximum(const Matroid& m1, const Matroid& m2, const SolutionSink& sink);

/// Evidence accompanying a parent computation, for invariant suites.
struct ParentCertificate {
  ElementSet parent;
  AugmentingPath path;  // canonical path in D(root, i)
  int v2 = -1;          // second path vertex (in root \ i)
  int v3 = -1;          // third path vertex (in i \ root)
};

/// Parent of a maximal common independent set i with |i| < |root|, under the
/// fixed maximum set `root`: restrict both matroids to root+i, contract
/// root&i, take the canonical shortest path of the minor pair's exchange
/// digraph and return mu(i ^ {v2, v3}).
///
/// Postconditions are enforced on every call (ContractError on violation):
/// the path has at least four vertices, i ^ {v2,v3} is common independent,
/// |parent| <= |i| + 1, |i| <= |parent|, |root ^ parent| <= |root ^ i| - 1,
/// and |i ^ parent| <= 3.
ParentCertificate parent_certified(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                                   const ElementSet& root);
ElementSet parent_solution(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                           const ElementSet& root);

/// How many parent computations have run process-wide (every one of them
/// passed the postcondition checks, or a ContractError would have escaped).
std::uint64_t parent_call_count();

/// Streams the children of solution i in the reverse-search forest: candidates
/// i ^ X over 2- and 3-element subsets X in lexicographic order, kept when the
/// candidate is a maximal common independent set with tau <= |child| < |root|
/// whose parent is i. Returns false iff the sink stopped.
bool for_each_child(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                    const ElementSet& root, std::size_t tau, const SolutionSink& sink);

/// Reverse-search enumeration of every maximal common independent set of
/// cardinality at least tau, exactly once, pre-order, roots = maximum sets.
/// Returns false iff the sink stopped the run.
bool enumerate_large(const Matroid& m1, const Matroid& m2, std::size_t tau,
                     const SolutionSink& sink);

}  // namespace menum
