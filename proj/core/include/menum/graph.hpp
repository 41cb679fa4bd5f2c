#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "menum/element_set.hpp"

namespace menum {

/// Undirected multigraph; self-loops and parallel edges are allowed.
/// Edge index = element id wherever a matroid lives on the edges.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  std::size_t edge_count() const { return edges.size(); }

  /// Throws InputError on endpoints outside [0, vertices).
  void validate() const;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), components_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  /// Returns false if a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }

  std::size_t components() const { return components_; }

 private:
  std::vector<int> parent_;
  std::size_t components_;
};

/// Component count of (V, E \ removed); self-loops never join anything.
std::size_t component_count(const Graph& g, const ElementSet& removed_edges);

/// Does the picked edge set form a forest? A self-loop is a cycle by itself.
bool edge_set_is_forest(const Graph& g, const ElementSet& picked);

}  // namespace menum
