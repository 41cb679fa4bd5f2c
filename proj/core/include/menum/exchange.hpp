#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "menum/element_set.hpp"
#include "menum/matroid.hpp"

namespace menum {

/// Shortcut-free s-t path; vertices() includes the s and t sentinels.
struct AugmentingPath {
  std::vector<int> vertices;

  /// Ground elements on the path (everything but s and t).
  ElementSet interior() const {
    ElementSet s;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i)
      s.set(static_cast<std::size_t>(vertices[i]));
    return s;
  }
};

/// The exchange digraph of a common independent set I: vertices are the ground
/// elements of the (possibly minor) pair plus two sentinels s and t, arcs fall
/// into four classes:
///   A1  (e in I) -> (f not in I)  with I+f dependent in M1, I+f-e independent in M1
///   A2  (f not in I) -> (e in I)  with I+f dependent in M2, I+f-e independent in M2
///   A3  s -> f                    with I+f independent in M1
///   A4  f -> t                    with I+f independent in M2
/// s and t live at ids n and n+1 of the id space.
class ExchangeDigraph {
 public:
  enum class ArcClass : std::uint8_t { A1, A2, A3, A4 };
  struct Arc {
    int from;
    int to;
    ArcClass cls;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  /// Requires i to be a common independent set of the pair (ContractError
  /// otherwise); both matroids must share the ground mask. Issues at most
  /// 4n^2 + 2n oracle queries.
  static ExchangeDigraph build(const Matroid& m1, const Matroid& m2, const ElementSet& i);

  int s() const { return static_cast<int>(n_); }
  int t() const { return static_cast<int>(n_) + 1; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Out-neighbors / in-neighbors of a ground element, as element sets
  /// (sentinels excluded).
  ElementSet out_elements(int e) const;
  ElementSet in_elements(int e) const;

  /// Deterministic BFS shortest path: frontier scanned in ascending vertex id,
  /// adjacency in ascending target id, so each vertex gets the smallest
  /// eligible predecessor. Shortest paths have no shortcuts. Returns nullopt
  /// iff t is unreachable, which certifies maximum cardinality.
  std::optional<AugmentingPath> shortest_augmenting_path() const;

  /// DOT dump with arc-class labels, for eyeballing against worked examples.
  std::string to_dot() const;

 private:
  std::size_t n_ = 0;
  ElementSet base_set_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

/// i triangle (path interior); one element larger than i.
ElementSet augment(const ElementSet& i, const AugmentingPath& p);

/// Lawler-style augmentation from the empty set; deterministic.
ElementSet maximum_common_independent_set(const Matroid& m1, const Matroid& m2);

/// mu(x): lowest-id greedy completion of a common independent set to a maximal
/// one; deterministic, idempotent. ContractError when x is not common independent.
ElementSet complete_to_maximal(const Matroid& m1, const Matroid& m2, const ElementSet& x);

}  // namespace menum
