#include "menum/graph.hpp"

#include "menum/errors.hpp"

namespace menum {

void Graph::validate() const {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("graph edge endpoint out of range");
  }
}

std::size_t component_count(const Graph& g, const ElementSet& removed_edges) {
  DisjointSets ds(static_cast<std::size_t>(g.vertices));
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (removed_edges.test(i)) continue;
    const auto& [u, v] = g.edges[i];
    if (u != v) ds.unite(u, v);
  }
  return ds.components();
}

bool edge_set_is_forest(const Graph& g, const ElementSet& picked) {
  DisjointSets ds(static_cast<std::size_t>(g.vertices));
  bool ok = true;
  picked.for_each([&](int i) {
    if (!ok) return;
    const auto& [u, v] = g.edges[static_cast<std::size_t>(i)];
    if (u == v || !ds.unite(u, v)) ok = false;
  });
  return ok;
}

}  // namespace menum
