#include "menum/brute.hpp"

#include <algorithm>

#include "menum/errors.hpp"

namespace menum {

namespace {

ElementSet index_to_set(std::uint64_t idx) {
  ElementSet s;
  while (idx != 0) {
    s.set(static_cast<std::size_t>(std::countr_zero(idx)));
    idx &= idx - 1;
  }
  return s;
}

std::vector<ElementSet> filter_mode(std::vector<ElementSet> sets,
                                    const std::function<bool(const ElementSet&)>& extendable,
                                    SolutionMode mode, std::size_t tau) {
  std::vector<ElementSet> out;
  std::size_t best = 0;
  for (const ElementSet& s : sets) best = std::max(best, s.count());
  for (ElementSet& s : sets) {
    switch (mode) {
      case SolutionMode::All:
        break;
      case SolutionMode::Maximal:
        if (extendable(s)) continue;
        break;
      case SolutionMode::Maximum:
        if (s.count() != best) continue;
        break;
    }
    if (s.count() < tau) continue;
    out.push_back(std::move(s));
  }
  sort_solutions(out);
  return out;
}

}  // namespace

std::vector<ElementSet> brute_common_independent(const Matroid& m1, const Matroid& m2,
                                                 SolutionMode mode, std::size_t tau) {
  const std::size_t n = m1.size();
  if (n > 20) throw InputError("brute_common_independent: ground set larger than 20");
  if (m1.size() != m2.size() || m1.ground() != m2.ground())
    throw InputError("brute_common_independent: mismatched ground sets");

  std::vector<ElementSet> sets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const ElementSet s = index_to_set(idx);
    if (!m1.ground().contains(s)) continue;
    if (m1.is_independent(s) && m2.is_independent(s)) sets.push_back(s);
  }
  const auto extendable = [&](const ElementSet& s) {
    bool can = false;
    (m1.ground() - s).for_each([&](int e) {
      if (can) return;
      const ElementSet bigger = s.with(static_cast<std::size_t>(e));
      if (m1.is_independent(bigger) && m2.is_independent(bigger)) can = true;
    });
    return can;
  };
  return filter_mode(std::move(sets), extendable, mode, tau);
}

std::vector<ElementSet> brute_matchings(const Matroid& m, const MatchingGraph& g,
                                        SolutionMode mode, std::size_t tau) {
  const std::size_t ne = g.edge_count();
  if (ne > 20) throw InputError("brute_matchings: more than 20 edges");
  g.validate();

  const auto matching = [&](const ElementSet& edges) {
    ElementSet covered;
    bool ok = true;
    edges.for_each([&](int e) {
      if (!ok) return;
      const auto& [u, v] = g.edges[static_cast<std::size_t>(e)];
      if (covered.test(static_cast<std::size_t>(u)) ||
          covered.test(static_cast<std::size_t>(v))) {
        ok = false;
        return;
      }
      covered.set(static_cast<std::size_t>(u));
      covered.set(static_cast<std::size_t>(v));
    });
    if (!ok || !m.ground().contains(covered)) return false;
    return m.is_independent(covered);
  };

  std::vector<ElementSet> sets;
  const std::uint64_t total = std::uint64_t{1} << ne;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const ElementSet s = index_to_set(idx);
    if (matching(s)) sets.push_back(s);
  }
  const auto extendable = [&](const ElementSet& s) {
    for (std::size_t e = 0; e < ne; ++e)
      if (!s.test(e) && matching(s.with(e))) return true;
    return false;
  };
  return filter_mode(std::move(sets), extendable, mode, tau);
}

std::vector<ElementSet> brute_min_cvc(const Graph& g, std::size_t tau) {
  if (g.vertices > 16) throw InputError("brute_min_cvc: more than 16 vertices");
  g.validate();
  const std::size_t nv = static_cast<std::size_t>(g.vertices);

  const auto connected_induced = [&](const ElementSet& keep) {
    if (keep.empty()) return true;
    DisjointSets ds(nv);
    for (const auto& [u, v] : g.edges)
      if (keep.test(static_cast<std::size_t>(u)) && keep.test(static_cast<std::size_t>(v)))
        ds.unite(u, v);
    ElementSet roots;
    keep.for_each([&](int v) { roots.set(static_cast<std::size_t>(ds.find(v))); });
    return roots.count() == 1;
  };

  const auto nsis = [&](const ElementSet& x) {
    for (const auto& [u, v] : g.edges)
      if (x.test(static_cast<std::size_t>(u)) && x.test(static_cast<std::size_t>(v))) return false;
    return connected_induced(ElementSet::full(nv) - x);
  };

  std::vector<ElementSet> out;
  const std::uint64_t total = std::uint64_t{1} << nv;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const ElementSet cover = index_to_set(idx);
    if (cover.count() > tau) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges)
      if (!cover.test(static_cast<std::size_t>(u)) && !cover.test(static_cast<std::size_t>(v))) {
        covers = false;
        break;
      }
    if (!covers || !connected_induced(cover)) continue;
    const ElementSet complement = ElementSet::full(nv) - cover;
    bool maximal = true;
    cover.for_each([&](int v) {
      if (maximal && nsis(complement.with(static_cast<std::size_t>(v)))) maximal = false;
    });
    if (maximal) out.push_back(cover);
  }
  sort_solutions(out);
  return out;
}

BruteForceReport make_report(std::string digest, std::vector<ElementSet> solutions) {
  BruteForceReport report;
  report.digest = std::move(digest);
  sort_solutions(solutions);
  report.solutions = std::move(solutions);
  for (const ElementSet& s : report.solutions) ++report.counts_by_size[s.count()];
  return report;
}

ComparisonResult compare_with_stream(const BruteForceReport& expected,
                                     const std::vector<ElementSet>& streamed) {
  ComparisonResult result;
  std::vector<ElementSet> got = streamed;
  sort_solutions(got);
  for (std::size_t i = 1; i < got.size(); ++i)
    if (got[i] == got[i - 1] &&
        (result.duplicated.empty() || result.duplicated.back() != got[i]))
      result.duplicated.push_back(got[i]);
  got.erase(std::unique(got.begin(), got.end()), got.end());

  std::set_difference(expected.solutions.begin(), expected.solutions.end(), got.begin(),
                      got.end(), std::back_inserter(result.missing), lexicographic_less);
  std::set_difference(got.begin(), got.end(), expected.solutions.begin(),
                      expected.solutions.end(), std::back_inserter(result.unexpected),
                      lexicographic_less);
  result.match =
      result.missing.empty() && result.unexpected.empty() && result.duplicated.empty();
  return result;
}

}  // namespace menum
