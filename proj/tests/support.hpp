#pragma once

// Shared fixtures for the unit and acceptance suites: the seven-element
// worked-example pair, seeded random instance generators, and sink helpers.

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "menum/applications.hpp"
#include "menum/element_set.hpp"
#include "menum/graph.hpp"
#include "menum/matching.hpp"
#include "menum/matroid.hpp"
#include "menum/sink.hpp"

namespace menum::testing {

// Seven-element pair given by explicit base lists (0-based ids). Note the two
// families are not actual matroids (the exchange axiom fails for both), which
// the axiom-checker tests pin down; the pair still drives the digraph,
// augmentation, and maximum-enumeration worked examples.
inline std::shared_ptr<const BasisListMatroid> sample7_first() {
  return std::make_shared<BasisListMatroid>(
      7, std::vector<ElementSet>{ElementSet::of({0, 1, 2, 3}), ElementSet::of({0, 1, 2, 4}),
                                 ElementSet::of({0, 2, 4, 5}), ElementSet::of({0, 1, 4, 5}),
                                 ElementSet::of({0, 1, 4, 6})});
}

inline std::shared_ptr<const BasisListMatroid> sample7_second() {
  return std::make_shared<BasisListMatroid>(
      7, std::vector<ElementSet>{ElementSet::of({0, 1, 2, 5}), ElementSet::of({0, 1, 2, 6}),
                                 ElementSet::of({0, 1, 4, 5}), ElementSet::of({0, 2, 4, 5}),
                                 ElementSet::of({0, 1, 4, 6}), ElementSet::of({1, 2, 3, 5})});
}

inline std::vector<ElementSet> collect_sink(const std::function<bool(const SolutionSink&)>& run) {
  std::vector<ElementSet> out;
  run([&](const ElementSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

struct MatroidPair {
  std::shared_ptr<const Matroid> m1;
  std::shared_ptr<const Matroid> m2;
};

class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int pick(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  MatroidPair uniform_pair(int max_n = 12) {
    const int n = pick(1, max_n);
    return {std::make_shared<UniformMatroid>(n, pick(0, n)),
            std::make_shared<UniformMatroid>(n, pick(0, n))};
  }

  std::shared_ptr<const Matroid> random_partition(int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    std::shuffle(ids.begin(), ids.end(), rng_);
    std::vector<std::vector<int>> blocks;
    std::size_t at = 0;
    while (at < ids.size()) {
      const std::size_t k = static_cast<std::size_t>(pick(1, 3));
      std::vector<int> block;
      for (std::size_t i = 0; i < k && at < ids.size(); ++i) block.push_back(ids[at++]);
      blocks.push_back(std::move(block));
    }
    std::vector<int> caps;
    for (std::size_t b = 0; b < blocks.size(); ++b) caps.push_back(pick(0, 2));
    return std::make_shared<PartitionMatroid>(n, blocks, caps);
  }

  std::shared_ptr<const Matroid> random_graphic(int n) {
    Graph g;
    g.vertices = pick(2, std::max(2, n / 2 + 1));
    for (int e = 0; e < n; ++e)
      g.edges.emplace_back(pick(0, g.vertices - 1), pick(0, g.vertices - 1));
    return std::make_shared<GraphicMatroid>(g);
  }

  MatroidPair partition_graphic_pair(int max_n = 10) {
    const int n = pick(1, max_n);
    return {random_partition(n), random_graphic(n)};
  }

  MatroidPair gf2_pair(int max_n = 8) {
    const int n = pick(2, max_n);
    const auto random_rows = [&] {
      const int rows = pick(2, 5);
      std::vector<std::string> out;
      for (int r = 0; r < rows; ++r) {
        std::string row(static_cast<std::size_t>(n), '0');
        for (int c = 0; c < n; ++c)
          if (pick(0, 1)) row[static_cast<std::size_t>(c)] = '1';
        out.push_back(std::move(row));
      }
      return out;
    };
    return {std::make_shared<LinearGf2Matroid>(random_rows()),
            std::make_shared<LinearGf2Matroid>(random_rows())};
  }

  /// Simple graph without isolated vertices is not guaranteed; matching tests
  /// only need distinct endpoints.
  MatchingGraph random_matching_graph(int max_vertices, int max_edges) {
    MatchingGraph g;
    g.vertices = pick(2, max_vertices);
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < g.vertices; ++u)
      for (int v = u + 1; v < g.vertices; ++v) pool.emplace_back(u, v);
    std::shuffle(pool.begin(), pool.end(), rng_);
    const int ne = pick(1, std::min<int>(max_edges, static_cast<int>(pool.size())));
    g.edges.assign(pool.begin(), pool.begin() + ne);
    return g;
  }

  /// Connected graph with max degree 3, vertex count in [lo, hi].
  Graph random_subcubic(int lo, int hi) {
    for (;;) {
      Graph g;
      g.vertices = pick(lo, hi);
      std::vector<int> degree(static_cast<std::size_t>(g.vertices), 0);
      std::vector<int> reachable = {0};
      bool ok = true;
      for (int v = 1; v < g.vertices; ++v) {
        std::vector<int> hosts;
        for (int u : reachable)
          if (degree[static_cast<std::size_t>(u)] < 3) hosts.push_back(u);
        if (hosts.empty()) {
          ok = false;
          break;
        }
        const int u = hosts[static_cast<std::size_t>(pick(0, static_cast<int>(hosts.size()) - 1))];
        g.edges.emplace_back(u, v);
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
        reachable.push_back(v);
      }
      if (!ok) continue;
      int extra = pick(0, 3);
      for (int u = 0; u < g.vertices && extra > 0; ++u)
        for (int v = u + 1; v < g.vertices && extra > 0; ++v) {
          if (degree[static_cast<std::size_t>(u)] >= 3 || degree[static_cast<std::size_t>(v)] >= 3)
            continue;
          bool present = false;
          for (const auto& [a, b] : g.edges)
            if ((a == u && b == v) || (a == v && b == u)) present = true;
          if (present || pick(0, 2) != 0) continue;
          g.edges.emplace_back(u, v);
          ++degree[static_cast<std::size_t>(u)];
          ++degree[static_cast<std::size_t>(v)];
          --extra;
        }
      return g;
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline Graph path_graph(int n) {
  Graph g;
  g.vertices = n;
  for (int v = 0; v + 1 < n; ++v) g.edges.emplace_back(v, v + 1);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  g.edges.emplace_back(n - 1, 0);
  return g;
}

inline Graph cube_graph() {
  Graph g;
  g.vertices = 8;
  for (int v = 0; v < 8; ++v)
    for (int bit = 0; bit < 3; ++bit) {
      const int u = v ^ (1 << bit);
      if (v < u) g.edges.emplace_back(v, u);
    }
  return g;
}

inline Graph k4_minus_edge() {
  Graph g;
  g.vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return g;
}

inline Graph star_graph(int leaves) {
  Graph g;
  g.vertices = leaves + 1;
  for (int v = 1; v <= leaves; ++v) g.edges.emplace_back(0, v);
  return g;
}

}  // namespace menum::testing
