#include "menum/applications.hpp"

#include <algorithm>

#include "menum/errors.hpp"

namespace menum {

void BipartiteInstance::validate() const {
  if (nx < 0 || ny < 0) throw InputError("b-matching: negative class size");
  if (static_cast<int>(bx.size()) != nx || static_cast<int>(by.size()) != ny)
    throw InputError("b-matching: capacity vector length mismatch");
  for (int c : bx)
    if (c < 0) throw InputError("b-matching: negative capacity");
  for (int c : by)
    if (c < 0) throw InputError("b-matching: negative capacity");
  for (const auto& [x, y] : edges)
    if (x < 0 || x >= nx || y < 0 || y >= ny)
      throw InputError("b-matching: edge endpoint out of range");
}

std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>> encode_b_matching(
    const BipartiteInstance& inst) {
  inst.validate();
  const std::size_t n = inst.edges.size();
  std::vector<std::vector<int>> x_stars(static_cast<std::size_t>(inst.nx));
  std::vector<std::vector<int>> y_stars(static_cast<std::size_t>(inst.ny));
  for (std::size_t e = 0; e < n; ++e) {
    x_stars[static_cast<std::size_t>(inst.edges[e].first)].push_back(static_cast<int>(e));
    y_stars[static_cast<std::size_t>(inst.edges[e].second)].push_back(static_cast<int>(e));
  }
  return {std::make_shared<PartitionMatroid>(n, x_stars, inst.bx),
          std::make_shared<PartitionMatroid>(n, y_stars, inst.by)};
}

void ColoredGraph::validate() const {
  graph.validate();
  if (colors.size() != graph.edges.size())
    throw InputError("colorful forest: one color per edge required");
  for (int c : colors)
    if (c < 0) throw InputError("colorful forest: negative color id");
}

std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>> encode_colorful_forest(
    const ColoredGraph& g) {
  g.validate();
  const std::size_t n = g.graph.edges.size();
  const int palette = g.colors.empty() ? 0 : *std::max_element(g.colors.begin(), g.colors.end()) + 1;
  std::vector<std::vector<int>> classes(static_cast<std::size_t>(palette));
  for (std::size_t e = 0; e < n; ++e)
    classes[static_cast<std::size_t>(g.colors[e])].push_back(static_cast<int>(e));
  return {std::make_shared<GraphicMatroid>(g.graph),
          std::make_shared<PartitionMatroid>(n, classes,
                                             std::vector<int>(static_cast<std::size_t>(palette), 1))};
}

void DegreeConstrainedInstance::validate() const {
  if (vertices < 0) throw InputError("degree-constrained: negative vertex count");
  if (static_cast<int>(delta_out.size()) != vertices ||
      static_cast<int>(delta_in.size()) != vertices)
    throw InputError("degree-constrained: bound vector length mismatch");
  for (const auto& [u, v] : arcs)
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("degree-constrained: arc endpoint out of range");
  for (int d : delta_out)
    if (d < 0) throw InputError("degree-constrained: negative bound");
  for (int d : delta_in)
    if (d < 0) throw InputError("degree-constrained: negative bound");
}

std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>>
encode_degree_constrained(const DegreeConstrainedInstance& inst) {
  inst.validate();
  const std::size_t n = inst.arcs.size();
  std::vector<std::vector<int>> out_stars(static_cast<std::size_t>(inst.vertices));
  std::vector<std::vector<int>> in_stars(static_cast<std::size_t>(inst.vertices));
  for (std::size_t a = 0; a < n; ++a) {
    out_stars[static_cast<std::size_t>(inst.arcs[a].first)].push_back(static_cast<int>(a));
    in_stars[static_cast<std::size_t>(inst.arcs[a].second)].push_back(static_cast<int>(a));
  }
  return {std::make_shared<PartitionMatroid>(n, out_stars, inst.delta_out),
          std::make_shared<PartitionMatroid>(n, in_stars, inst.delta_in)};
}

ElementSet CvcInstance::phi_vertices(const ElementSet& h_edges) const {
  ElementSet verts;
  bool inside = true;
  h_edges.for_each([&](int e) { inside = inside && e < input.vertices; });
  if (!inside) throw InputError("phi: matching touches a subdivision pair");
  h_edges.for_each([&](int e) { verts.set(static_cast<std::size_t>(e)); });
  return verts;
}

CvcInstance build_cvc_instance(const Graph& g) {
  g.validate();
  if (g.vertices < 2) throw InputError("cvc: at least two vertices required");
  for (const auto& [u, v] : g.edges)
    if (u == v) throw InputError("cvc: self-loops not allowed");

  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertices));
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[static_cast<std::size_t>(g.edges[e].first)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(g.edges[e].second)].push_back(static_cast<int>(e));
  }
  for (const auto& inc : incident) {
    if (inc.empty()) throw InputError("cvc: graph is disconnected (isolated vertex)");
    if (inc.size() > 3) throw InputError("cvc: graph is not subcubic");
  }
  {
    DisjointSets ds(static_cast<std::size_t>(g.vertices));
    for (const auto& [u, v] : g.edges) ds.unite(u, v);
    if (ds.components() != 1) throw InputError("cvc: graph is disconnected");
  }

  CvcInstance inst;
  inst.input = g;

  // Split every vertex into one copy per incident edge (degree-3 vertices get
  // a 3-path of copies, degree-2 a parallel pair, degree-1 two self-loops),
  // then subdivide every original edge. copy_at[(v, e)] = the G' vertex of v
  // holding edge e.
  std::vector<std::vector<int>> copy_at(static_cast<std::size_t>(g.vertices));
  Graph split;
  inst.vertex_copies.resize(static_cast<std::size_t>(g.vertices));
  std::vector<std::pair<int, int>> f_edges;
  for (int v = 0; v < g.vertices; ++v) {
    const auto& inc = incident[static_cast<std::size_t>(v)];
    auto& copies = inst.vertex_copies[static_cast<std::size_t>(v)];
    const auto fresh = [&]() {
      copies.push_back(split.vertices);
      return split.vertices++;
    };
    if (inc.size() == 3) {
      const int a = fresh(), b = fresh(), c = fresh();
      f_edges.emplace_back(a, b);
      f_edges.emplace_back(b, c);
    } else if (inc.size() == 2) {
      const int a = fresh(), b = fresh();
      f_edges.emplace_back(a, b);
      f_edges.emplace_back(a, b);
    } else {
      const int a = fresh();
      f_edges.emplace_back(a, a);
      f_edges.emplace_back(a, a);
    }
    copy_at[static_cast<std::size_t>(v)].assign(inc.size(), -1);
    for (std::size_t k = 0; k < inc.size(); ++k)
      copy_at[static_cast<std::size_t>(v)][k] = copies[std::min(k, copies.size() - 1)];
  }
  split.edges = std::move(f_edges);

  const auto copy_for = [&](int v, int e) {
    const auto& inc = incident[static_cast<std::size_t>(v)];
    const auto it = std::find(inc.begin(), inc.end(), e);
    return copy_at[static_cast<std::size_t>(v)][static_cast<std::size_t>(it - inc.begin())];
  };

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [u, v] = g.edges[e];
    const int mid = split.vertices++;
    split.edges.emplace_back(copy_for(u, static_cast<int>(e)), mid);
    split.edges.emplace_back(mid, copy_for(v, static_cast<int>(e)));
  }
  inst.split = split;

  MatchingGraph h;
  h.vertices = static_cast<int>(split.edges.size());
  for (int v = 0; v < g.vertices; ++v) h.edges.emplace_back(2 * v, 2 * v + 1);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int base = 2 * g.vertices + 2 * static_cast<int>(e);
    h.edges.emplace_back(base, base + 1);
  }
  inst.h = h;

  inst.pair = TractablePair{std::make_shared<CographicMatroid>(split), std::move(h),
                            std::make_shared<BruteForceMatchingSolver>()};
  return inst;
}

bool enumerate_min_cvc(const Graph& g, std::size_t tau, const SolutionSink& sink) {
  g.validate();
  if (g.vertices == 1) {
    // No edges to cover; the empty set is the unique minimal cover.
    return sink(ElementSet{});
  }
  if (g.vertices == 2) {
    if (g.edges.empty()) throw InputError("cvc: graph is disconnected");
    if (tau < 1) return true;
    return sink(ElementSet::of({0})) && sink(ElementSet::of({1}));
  }

  const CvcInstance inst = build_cvc_instance(g);
  const std::size_t nv = static_cast<std::size_t>(g.vertices);
  const std::size_t threshold = tau >= nv ? 0 : nv - tau;
  return enumerate_large_matchings(inst.pair, threshold, [&](const ElementSet& matching) {
    const ElementSet cover = ElementSet::full(nv) - inst.phi_vertices(matching);
    return sink(cover);
  });
}

}  // namespace menum
