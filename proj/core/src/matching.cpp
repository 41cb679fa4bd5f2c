#include "menum/matching.hpp"

#include <algorithm>
#include <atomic>

#include "menum/errors.hpp"
#include "menum/exchange.hpp"
#include "subset_cursor.hpp"

namespace menum {

namespace {

std::atomic<std::uint64_t>& matching_parent_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

void validate_edge_set(const MatchingGraph& g, const ElementSet& edge_set) {
  bool ok = true;
  edge_set.for_each([&](int e) { ok = ok && e < static_cast<int>(g.edge_count()); });
  if (!ok) throw InputError("edge index out of range");
}

bool vertex_disjoint(const MatchingGraph& g, const ElementSet& edge_set) {
  ElementSet covered;
  bool ok = true;
  edge_set.for_each([&](int e) {
    if (!ok) return;
    const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (covered.test(static_cast<std::size_t>(u)) || covered.test(static_cast<std::size_t>(v))) {
      ok = false;
      return;
    }
    covered.set(static_cast<std::size_t>(u));
    covered.set(static_cast<std::size_t>(v));
  });
  return ok;
}

// Exact maximum matroid matching by include/exclude branching with a
// cardinality bound. The oracle can be skipped for plain graph matchings.
class BranchAndBound {
 public:
  BranchAndBound(const Matroid* m, const MatchingGraph& g, const ElementSet& allowed,
                 std::uint64_t budget)
      : m_(m), g_(g), budget_(budget) {
    const ElementSet& ground = m != nullptr ? m->ground() : ElementSet::full(g.vertices);
    allowed.for_each([&](int e) {
      const auto& [u, v] = g_.edges[static_cast<std::size_t>(e)];
      if (ground.test(static_cast<std::size_t>(u)) && ground.test(static_cast<std::size_t>(v)))
        edges_.push_back(e);
    });
  }

  ElementSet solve() {
    ElementSet covered;
    ElementSet current;
    descend(0, current, covered);
    return best_;
  }

 private:
  void descend(std::size_t idx, ElementSet& current, ElementSet& covered) {
    if (--budget_ == 0) throw InputError("matching solver: node budget exhausted");
    if (current.count() > best_.count()) best_ = current;
    if (idx == edges_.size()) return;
    if (current.count() + (edges_.size() - idx) <= best_.count()) return;

    const int e = edges_[idx];
    const auto& [u, v] = g_.edges[static_cast<std::size_t>(e)];
    if (!covered.test(static_cast<std::size_t>(u)) && !covered.test(static_cast<std::size_t>(v))) {
      const ElementSet next_covered =
          covered.with(static_cast<std::size_t>(u)).with(static_cast<std::size_t>(v));
      if (m_ == nullptr || m_->is_independent(next_covered)) {
        current.set(static_cast<std::size_t>(e));
        ElementSet nc = next_covered;
        descend(idx + 1, current, nc);
        current.reset(static_cast<std::size_t>(e));
      }
    }
    descend(idx + 1, current, covered);
  }

  const Matroid* m_;
  const MatchingGraph& g_;
  std::vector<int> edges_;
  std::uint64_t budget_;
  ElementSet best_;
};

}  // namespace

void MatchingGraph::validate() const {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InputError("matching graph edge endpoint out of range");
    if (u == v) throw InputError("matching graph must not contain self-loops");
  }
}

ElementSet matched_vertices(const MatchingGraph& g, const ElementSet& edge_set) {
  ElementSet covered;
  edge_set.for_each([&](int e) {
    const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
    covered.set(static_cast<std::size_t>(u));
    covered.set(static_cast<std::size_t>(v));
  });
  return covered;
}

ElementSet BruteForceMatchingSolver::maximum_matching(const Matroid& m, const MatchingGraph& g,
                                                      const ElementSet& allowed_edges) const {
  if (g.edge_count() > 30)
    throw InputError("brute matching solver: more than 30 edges, refusing");
  return BranchAndBound(&m, g, allowed_edges, node_budget_).solve();
}

ElementSet GraphOnlyMatchingSolver::maximum_matching(const Matroid& m, const MatchingGraph& g,
                                                     const ElementSet& allowed_edges) const {
  if (g.edge_count() > 30)
    throw InputError("graph matching solver: more than 30 edges, refusing");
  // Free matroid assumed: only the graph constrains the matching. The minor's
  // ground mask still decides which vertices survive.
  BranchAndBound search(nullptr, g, allowed_edges & filter_mask(m, g), std::uint64_t{1} << 26);
  return search.solve();
}

ElementSet GraphOnlyMatchingSolver::filter_mask(const Matroid& m, const MatchingGraph& g) {
  ElementSet mask;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& [u, v] = g.edges[e];
    if (m.ground().test(static_cast<std::size_t>(u)) &&
        m.ground().test(static_cast<std::size_t>(v)))
      mask.set(e);
  }
  return mask;
}

ElementSet PairedGraphIntersectionSolver::maximum_matching(const Matroid& m,
                                                           const MatchingGraph& g,
                                                           const ElementSet& allowed_edges) const {
  // Available edges: allowed and fully inside the minor's ground.
  ElementSet avail;
  allowed_edges.for_each([&](int e) {
    const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (m.ground().test(static_cast<std::size_t>(u)) &&
        m.ground().test(static_cast<std::size_t>(v)))
      avail.set(static_cast<std::size_t>(e));
  });

  ElementSet seen;
  bool disjoint = true;
  avail.for_each([&](int e) {
    const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
    if (seen.test(static_cast<std::size_t>(u)) || seen.test(static_cast<std::size_t>(v)))
      disjoint = false;
    seen.set(static_cast<std::size_t>(u));
    seen.set(static_cast<std::size_t>(v));
  });
  if (!disjoint)
    throw InputError("intersection solver: graph is not a disjoint union of edges");

  // Two matroids over edge ids: project an edge set onto the lower / upper
  // endpoints and ask the (minor of the) sum matroid. For a direct sum split
  // by the edges this is exactly matroid intersection.
  const auto project = [&](const ElementSet& picked, bool lower) {
    ElementSet verts;
    picked.for_each([&](int e) {
      const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
      const int lo = std::min(u, v), hi = std::max(u, v);
      verts.set(static_cast<std::size_t>(lower ? lo : hi));
    });
    return verts;
  };
  const CallbackMatroid lower(g.edge_count(),
                              [&](const ElementSet& x) { return m.is_independent(project(x, true)); });
  const CallbackMatroid upper(g.edge_count(),
                              [&](const ElementSet& x) { return m.is_independent(project(x, false)); });
  const MinorMatroid left = MinorMatroid::restriction(lower, avail);
  const MinorMatroid right = MinorMatroid::restriction(upper, avail);
  return maximum_common_independent_set(left, right);
}

InterleavedSumMatroid::InterleavedSumMatroid(std::shared_ptr<const Matroid> m1,
                                             std::shared_ptr<const Matroid> m2)
    : Matroid(2 * (m1 ? m1->size() : 0)), m1_(std::move(m1)), m2_(std::move(m2)) {
  if (!m1_ || !m2_ || m1_->size() != m2_->size())
    throw InputError("interleaved sum: matroids must share a ground-set size");
}

bool InterleavedSumMatroid::independent_impl(const ElementSet& x) const {
  ElementSet first, second;
  x.for_each([&](int e) {
    if (e % 2 == 0)
      first.set(static_cast<std::size_t>(e / 2));
    else
      second.set(static_cast<std::size_t>(e / 2));
  });
  return m1_->is_independent(first) && m2_->is_independent(second);
}

bool is_matching(const TractablePair& p, const ElementSet& edge_set) {
  validate_edge_set(p.graph, edge_set);
  if (!vertex_disjoint(p.graph, edge_set)) return false;
  const ElementSet covered = matched_vertices(p.graph, edge_set);
  if (!p.matroid->ground().contains(covered)) return false;
  return p.matroid->is_independent(covered);
}

TractablePair encode_intersection(std::shared_ptr<const Matroid> m1,
                                  std::shared_ptr<const Matroid> m2) {
  auto sum = std::make_shared<InterleavedSumMatroid>(std::move(m1), std::move(m2));
  MatchingGraph g;
  g.vertices = static_cast<int>(sum->size());
  for (int e = 0; e < g.vertices / 2; ++e) g.edges.emplace_back(2 * e, 2 * e + 1);
  return TractablePair{std::move(sum), std::move(g),
                       std::make_shared<PairedGraphIntersectionSolver>()};
}

ElementSet complete_matching(const TractablePair& p, const ElementSet& m) {
  if (!is_matching(p, m)) throw ContractError("complete_matching: not a matching");
  ElementSet result = m;
  ElementSet covered = matched_vertices(p.graph, m);
  for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
    if (result.test(e)) continue;
    const auto& [u, v] = p.graph.edges[e];
    if (covered.test(static_cast<std::size_t>(u)) || covered.test(static_cast<std::size_t>(v)))
      continue;
    const ElementSet next =
        covered.with(static_cast<std::size_t>(u)).with(static_cast<std::size_t>(v));
    if (!p.matroid->ground().contains(next)) continue;
    if (p.matroid->is_independent(next)) {
      result.set(e);
      covered = next;
    }
  }
  return result;
}

namespace {

bool is_maximal_matching(const TractablePair& p, const ElementSet& m, const ElementSet& covered) {
  for (std::size_t e = 0; e < p.graph.edge_count(); ++e) {
    if (m.test(e)) continue;
    const auto& [u, v] = p.graph.edges[e];
    if (covered.test(static_cast<std::size_t>(u)) || covered.test(static_cast<std::size_t>(v)))
      continue;
    const ElementSet next =
        covered.with(static_cast<std::size_t>(u)).with(static_cast<std::size_t>(v));
    if (!p.matroid->ground().contains(next)) continue;
    if (p.matroid->is_independent(next)) return false;
  }
  return true;
}

}  // namespace

bool matching_extension_feasible(const TractablePair& p, const ElementSet& include,
                                 const ElementSet& exclude, std::size_t opt) {
  if (include.intersects(exclude))
    throw InputError("matching extension: include and exclude overlap");
  if (!is_matching(p, include))
    throw ContractError("matching extension: include is not a matching");
  const ElementSet covered = matched_vertices(p.graph, include);
  const MinorMatroid minor = MinorMatroid::contraction(*p.matroid, covered);
  const ElementSet allowed = ElementSet::full(p.graph.edge_count()) - include - exclude;
  const ElementSet residual = p.solver->maximum_matching(minor, p.graph, allowed);
  return include.count() + residual.count() == opt;
}

bool matching_extension_feasible(const TractablePair& p, const ElementSet& include,
                                 const ElementSet& exclude) {
  const std::size_t opt =
      p.solver->maximum_matching(*p.matroid, p.graph, ElementSet::full(p.graph.edge_count()))
          .count();
  return matching_extension_feasible(p, include, exclude, opt);
}

bool enumerate_maximum_matchings(const TractablePair& p, const SolutionSink& sink) {
  const std::size_t ne = p.graph.edge_count();
  const std::size_t opt =
      p.solver->maximum_matching(*p.matroid, p.graph, ElementSet::full(ne)).count();

  struct Rec {
    const TractablePair& p;
    std::size_t ne;
    std::size_t opt;
    const SolutionSink& sink;

    bool run(const ElementSet& include, const ElementSet& exclude, std::size_t first_undecided) const {
      std::size_t e = first_undecided;
      while (e < ne && (include.test(e) || exclude.test(e))) ++e;
      if (e == ne) return sink(include);
      const ElementSet with_e = include.with(e);
      if (is_matching(p, with_e) && matching_extension_feasible(p, with_e, exclude, opt)) {
        if (!run(with_e, exclude, e + 1)) return false;
      }
      if (matching_extension_feasible(p, include, exclude.with(e), opt)) {
        if (!run(include, exclude.with(e), e + 1)) return false;
      }
      return true;
    }
  };

  return Rec{p, ne, opt, sink}.run(ElementSet{}, ElementSet{}, 0);
}

ElementSet matching_parent(const TractablePair& p, const ElementSet& m, const ElementSet& root) {
  if (m.count() >= root.count())
    throw ContractError("matching parent: |m| must be smaller than |root|");
  if (!is_matching(p, m)) throw ContractError("matching parent: m is not a matching");
  matching_parent_counter().fetch_add(1, std::memory_order_relaxed);

  const ElementSet vm = matched_vertices(p.graph, m);
  const ElementSet vr = matched_vertices(p.graph, root);

  // Lowest root vertex whose addition keeps V(m) independent.
  const ElementSet fresh = vr - vm;
  int x = -1;
  for (int cand = fresh.first(); cand >= 0; cand = fresh.next(cand)) {
    if (p.matroid->is_independent(vm.with(static_cast<std::size_t>(cand)))) {
      x = cand;
      break;
    }
  }
  if (x < 0)
    throw ContractError("matching parent: no addable root vertex (not a matroid oracle?)");

  // The root edge covering x.
  int f = -1;
  (root - m).for_each([&](int e) {
    if (f >= 0) return;
    const auto& [u, v] = p.graph.edges[static_cast<std::size_t>(e)];
    if (u == x || v == x) f = e;
  });
  if (f < 0) throw ContractError("matching parent: root does not cover the chosen vertex");
  const auto& [fu, fv] = p.graph.edges[static_cast<std::size_t>(f)];
  const int other = fu == x ? fv : fu;

  int drop = -1;
  if (vm.test(static_cast<std::size_t>(other))) {
    // Adding f clashes at the other endpoint; drop the clashing edge.
    m.for_each([&](int e) {
      if (drop >= 0) return;
      const auto& [u, v] = p.graph.edges[static_cast<std::size_t>(e)];
      if (u == other || v == other) drop = e;
    });
  } else {
    // f fits the graph matching, so V(m)+x+other is dependent; break the
    // unique circuit of `other` over V(m)+x. The dropped edge must come from
    // m \ root or the swap would leave the root distance unchanged; one such
    // edge always meets the circuit, because the circuit cannot lie inside
    // the independent set V(root).
    const ElementSet circuit =
        fundamental_circuit(*p.matroid, vm.with(static_cast<std::size_t>(x)), other);
    ElementSet inside = circuit;
    inside.reset(static_cast<std::size_t>(x));
    inside.reset(static_cast<std::size_t>(other));
    if (inside.empty())
      throw ContractError("matching parent: circuit confined to the new edge");
    (m - root).for_each([&](int e) {
      if (drop >= 0) return;
      const auto& [u, v] = p.graph.edges[static_cast<std::size_t>(e)];
      if (inside.test(static_cast<std::size_t>(u)) || inside.test(static_cast<std::size_t>(v)))
        drop = e;
    });
  }
  if (drop < 0) throw ContractError("matching parent: no edge to drop");

  ElementSet swapped = m;
  swapped.reset(static_cast<std::size_t>(drop));
  swapped.set(static_cast<std::size_t>(f));
  if (!is_matching(p, swapped))
    throw ContractError("matching parent: swap did not produce a matching");
  const ElementSet parent = complete_matching(p, swapped);

  if (parent.count() > m.count() + 2)
    throw ContractError("matching parent: completion grew by more than two edges");
  if (m.count() > parent.count())
    throw ContractError("matching parent: |m| <= |parent| violated");
  if ((m ^ parent).count() > 4)
    throw ContractError("matching parent: |m ^ parent| exceeds 4");
  if (!(matching_potential(parent, root) < matching_potential(m, root)))
    throw ContractError("matching parent: potential did not decrease");
  return parent;
}

std::uint64_t matching_parent_call_count() {
  return matching_parent_counter().load(std::memory_order_relaxed);
}

std::pair<std::size_t, std::size_t> matching_potential(const ElementSet& m,
                                                       const ElementSet& root) {
  if (m.count() == root.count()) return {0, 0};
  return {root.count() - m.count(), (m ^ root).count()};
}

namespace {

bool is_matching_child(const TractablePair& p, const ElementSet& m, const ElementSet& root,
                       std::size_t tau, const ElementSet& candidate) {
  const std::size_t size = candidate.count();
  if (size < tau || size >= root.count()) return false;
  if (!is_matching(p, candidate)) return false;
  if (!is_maximal_matching(p, candidate, matched_vertices(p.graph, candidate))) return false;
  return matching_parent(p, candidate, root) == m;
}

}  // namespace

bool enumerate_large_matchings(const TractablePair& p, std::size_t tau, const SolutionSink& sink) {
  const std::size_t ne = p.graph.edge_count();
  const std::size_t opt =
      p.solver->maximum_matching(*p.matroid, p.graph, ElementSet::full(ne)).count();
  if (opt < tau) return true;

  ElementSet root;
  enumerate_maximum_matchings(p, [&](const ElementSet& r) {
    root = r;
    return false;
  });

  struct Frame {
    ElementSet solution;
    detail::SubsetCursor cursor{4};
  };

  const auto traverse = [&](const ElementSet& start) -> bool {
    std::vector<Frame> stack;
    if (!sink(start)) return false;
    stack.push_back({start});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (!top.cursor.advance(static_cast<int>(ne))) {
        stack.pop_back();
        continue;
      }
      const ElementSet candidate = top.solution ^ ElementSet::from_ids(top.cursor.ids());
      if (is_matching_child(p, top.solution, root, tau, candidate)) {
        if (!sink(candidate)) return false;
        stack.push_back({candidate});
      }
    }
    return true;
  };

  return enumerate_maximum_matchings(p, [&](const ElementSet& r) { return traverse(r); });
}

}  // namespace menum
