#include "menum/exchange.hpp"

#include <algorithm>

#include "menum/errors.hpp"

namespace menum {

ExchangeDigraph ExchangeDigraph::build(const Matroid& m1, const Matroid& m2,
                                       const ElementSet& i) {
  if (m1.size() != m2.size() || m1.ground() != m2.ground())
    throw InputError("exchange digraph: matroids disagree on the ground set");
  if (!m1.is_independent(i) || !m2.is_independent(i))
    throw ContractError("exchange digraph: i is not a common independent set");

  ExchangeDigraph d;
  d.n_ = m1.size();
  d.base_set_ = i;
  d.adj_.assign(d.n_ + 2, {});

  const ElementSet outside = m1.ground() - i;
  outside.for_each([&](int f) {
    ElementSet extended = i.with(static_cast<std::size_t>(f));
    if (m1.is_independent(extended)) {
      d.arcs_.push_back({d.s(), f, ArcClass::A3});
    } else {
      i.for_each([&](int e) {
        if (m1.is_independent(extended.without(static_cast<std::size_t>(e))))
          d.arcs_.push_back({e, f, ArcClass::A1});
      });
    }
    if (m2.is_independent(extended)) {
      d.arcs_.push_back({f, d.t(), ArcClass::A4});
    } else {
      i.for_each([&](int e) {
        if (m2.is_independent(extended.without(static_cast<std::size_t>(e))))
          d.arcs_.push_back({f, e, ArcClass::A2});
      });
    }
  });

  std::sort(d.arcs_.begin(), d.arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (const Arc& a : d.arcs_) d.adj_[static_cast<std::size_t>(a.from)].push_back(a.to);
  return d;
}

ElementSet ExchangeDigraph::out_elements(int e) const {
  ElementSet out;
  for (int v : adj_[static_cast<std::size_t>(e)])
    if (v < static_cast<int>(n_)) out.set(static_cast<std::size_t>(v));
  return out;
}

ElementSet ExchangeDigraph::in_elements(int e) const {
  ElementSet in;
  for (const Arc& a : arcs_)
    if (a.to == e && a.from < static_cast<int>(n_)) in.set(static_cast<std::size_t>(a.from));
  return in;
}

std::optional<AugmentingPath> ExchangeDigraph::shortest_augmenting_path() const {
  const int source = s();
  const int sink = t();
  std::vector<int> parent(n_ + 2, -1);
  std::vector<char> seen(n_ + 2, 0);
  seen[static_cast<std::size_t>(source)] = 1;

  // Level-by-level BFS; frontiers kept sorted so the first assignment of a
  // parent is the smallest-id predecessor.
  std::vector<int> frontier = {source};
  while (!frontier.empty() && !seen[static_cast<std::size_t>(sink)]) {
    std::vector<int> next;
    for (int u : frontier) {
      for (int v : adj_[static_cast<std::size_t>(u)]) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        seen[static_cast<std::size_t>(v)] = 1;
        parent[static_cast<std::size_t>(v)] = u;
        next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  if (!seen[static_cast<std::size_t>(sink)]) return std::nullopt;

  AugmentingPath p;
  for (int v = sink; v != -1; v = parent[static_cast<std::size_t>(v)]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

std::string ExchangeDigraph::to_dot() const {
  static constexpr const char* kClassName[] = {"A1", "A2", "A3", "A4"};
  std::string out = "digraph exchange {\n  rankdir=LR;\n";
  out += "  s [shape=box];\n  t [shape=box];\n";
  base_set_.for_each([&](int e) { out += "  " + std::to_string(e) + " [style=filled];\n"; });
  for (const Arc& a : arcs_) {
    const auto name = [&](int v) -> std::string {
      if (v == s()) return "s";
      if (v == t()) return "t";
      return std::to_string(v);
    };
    out += "  " + name(a.from) + " -> " + name(a.to) + " [label=\"" +
           kClassName[static_cast<int>(a.cls)] + "\"];\n";
  }
  out += "}\n";
  return out;
}

ElementSet augment(const ElementSet& i, const AugmentingPath& p) {
  return i ^ p.interior();
}

ElementSet maximum_common_independent_set(const Matroid& m1, const Matroid& m2) {
  ElementSet current;
  for (;;) {
    const ExchangeDigraph d = ExchangeDigraph::build(m1, m2, current);
    const auto path = d.shortest_augmenting_path();
    if (!path) return current;
    current = augment(current, *path);
  }
}

ElementSet complete_to_maximal(const Matroid& m1, const Matroid& m2, const ElementSet& x) {
  if (!m1.is_independent(x) || !m2.is_independent(x))
    throw ContractError("complete_to_maximal: x is not a common independent set");
  ElementSet result = x;
  (m1.ground() - x).for_each([&](int e) {
    const ElementSet candidate = result.with(static_cast<std::size_t>(e));
    if (m1.is_independent(candidate) && m2.is_independent(candidate)) result = candidate;
  });
  return result;
}

}  // namespace menum
