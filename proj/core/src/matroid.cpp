#include "menum/matroid.hpp"

#include <algorithm>
#include <utility>

namespace menum {

PartitionMatroid::PartitionMatroid(std::size_t n, const std::vector<std::vector<int>>& blocks,
                                   std::vector<int> capacities)
    : Matroid(n), block_of_(n, -1), capacities_(std::move(capacities)) {
  if (blocks.size() != capacities_.size())
    throw InputError("partition matroid: blocks and capacities differ in length");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (capacities_[b] < 0) throw InputError("partition matroid: negative capacity");
    for (int e : blocks[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n)
        throw InputError("partition matroid: block element out of range");
      if (block_of_[static_cast<std::size_t>(e)] != -1)
        throw InputError("partition matroid: blocks are not disjoint");
      block_of_[static_cast<std::size_t>(e)] = static_cast<int>(b);
    }
  }
}

bool PartitionMatroid::independent_impl(const ElementSet& x) const {
  count_query();
  // Occupancy per block; ground sets are small, a scratch vector is fine.
  std::vector<int> used(capacities_.size(), 0);
  bool ok = true;
  x.for_each([&](int e) {
    if (!ok) return;
    const int b = block_of_[static_cast<std::size_t>(e)];
    if (b >= 0 && ++used[static_cast<std::size_t>(b)] > capacities_[static_cast<std::size_t>(b)])
      ok = false;
  });
  return ok;
}

GraphicMatroid::GraphicMatroid(Graph g) : Matroid(g.edge_count()), graph_(std::move(g)) {
  graph_.validate();
}

bool GraphicMatroid::independent_impl(const ElementSet& x) const {
  count_query();
  return edge_set_is_forest(graph_, x);
}

CographicMatroid::CographicMatroid(Graph g)
    : Matroid(g.edge_count()), graph_(std::move(g)) {
  graph_.validate();
  base_components_ = component_count(graph_, ElementSet{});
}

bool CographicMatroid::independent_impl(const ElementSet& x) const {
  count_query();
  return component_count(graph_, x) == base_components_;
}

LinearGf2Matroid::LinearGf2Matroid(const std::vector<std::string>& rows)
    : Matroid(rows.empty() ? 0 : rows.front().size()) {
  columns_.resize(size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != size()) throw InputError("gf2 matroid: ragged rows");
    for (std::size_t c = 0; c < size(); ++c) {
      const char ch = rows[r][c];
      if (ch == '1')
        columns_[c].set(r);
      else if (ch != '0')
        throw InputError("gf2 matroid: rows must be 0/1 bitstrings");
    }
  }
}

bool LinearGf2Matroid::independent_impl(const ElementSet& x) const {
  count_query();
  // Incremental elimination over the selected columns.
  std::vector<ElementSet> pivots;
  bool ok = true;
  x.for_each([&](int c) {
    if (!ok) return;
    ElementSet v = columns_[static_cast<std::size_t>(c)];
    for (const ElementSet& p : pivots) {
      const int lead = p.first();
      if (lead >= 0 && v.test(static_cast<std::size_t>(lead))) v ^= p;
    }
    if (v.empty()) {
      ok = false;
      return;
    }
    // Keep pivots sorted by leading row so reduction stays one pass.
    pivots.push_back(v);
    std::sort(pivots.begin(), pivots.end(),
              [](const ElementSet& a, const ElementSet& b) { return a.first() < b.first(); });
  });
  return ok;
}

BasisListMatroid::BasisListMatroid(std::size_t n, std::vector<ElementSet> bases)
    : Matroid(n), bases_(std::move(bases)) {
  if (bases_.empty()) bases_.push_back(ElementSet{});
  for (const ElementSet& b : bases_)
    if (!ground().contains(b)) throw InputError("basis list: element out of range");
}

bool BasisListMatroid::independent_impl(const ElementSet& x) const {
  count_query();
  for (const ElementSet& b : bases_)
    if (b.contains(x)) return true;
  return false;
}

MinorMatroid::MinorMatroid(const Matroid& base, ElementSet ground, ElementSet add)
    : Matroid(base.size(), std::move(ground)), add_(std::move(add)) {
  if (const auto* minor = dynamic_cast<const MinorMatroid*>(&base)) {
    root_ = minor->root_;
    add_ |= minor->add_;
  } else {
    root_ = &base;
  }
}

MinorMatroid MinorMatroid::restriction(const Matroid& m, const ElementSet& keep) {
  return MinorMatroid(m, m.ground() & keep, ElementSet{});
}

MinorMatroid MinorMatroid::deletion(const Matroid& m, const ElementSet& drop) {
  return MinorMatroid(m, m.ground() - drop, ElementSet{});
}

MinorMatroid MinorMatroid::contraction(const Matroid& m, const ElementSet& contracted) {
  const ElementSet part = m.ground() & contracted;
  return MinorMatroid(m, m.ground() - part, greedy_base(m, part));
}

std::size_t rank(const Matroid& m, const ElementSet& x) { return greedy_base(m, x).count(); }

ElementSet greedy_base(const Matroid& m, const ElementSet& x) {
  if (!m.ground().contains(x)) throw InputError("greedy_base: element outside the ground set");
  ElementSet base;
  x.for_each([&](int e) {
    base.set(static_cast<std::size_t>(e));
    if (!m.is_independent(base)) base.reset(static_cast<std::size_t>(e));
  });
  return base;
}

ElementSet fundamental_circuit(const Matroid& m, const ElementSet& i, int f) {
  if (!m.is_independent(i)) throw ContractError("fundamental_circuit: i is dependent");
  ElementSet extended = i.with(static_cast<std::size_t>(f));
  if (i.test(static_cast<std::size_t>(f)) || m.is_independent(extended))
    throw ContractError("fundamental_circuit: i + f is independent");
  ElementSet circuit = ElementSet::of({f});
  i.for_each([&](int e) {
    if (m.is_independent(extended.without(static_cast<std::size_t>(e))))
      circuit.set(static_cast<std::size_t>(e));
  });
  return circuit;
}

namespace {

ElementSet index_to_set(std::uint64_t idx) {
  ElementSet s;
  while (idx != 0) {
    const int b = std::countr_zero(idx);
    s.set(static_cast<std::size_t>(b));
    idx &= idx - 1;
  }
  return s;
}

}  // namespace

AxiomReport check_axioms(const Matroid& m, std::size_t limit) {
  const std::size_t n = m.size();
  if (n > limit) throw InputError("check_axioms: ground set larger than the configured limit");

  AxiomReport report;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> indep(total, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    indep[idx] = m.is_independent(index_to_set(idx)) ? 1 : 0;

  if (!indep[0]) report.violations.push_back("empty set is dependent");

  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (!indep[idx]) continue;
    for (std::uint64_t rest = idx; rest != 0; rest &= rest - 1) {
      const std::uint64_t without = idx ^ (rest & ~(rest - 1));
      if (!indep[without]) {
        report.violations.push_back("hereditary axiom fails at " + index_to_set(idx).to_string());
        break;
      }
    }
  }

  std::vector<std::uint64_t> independents;
  for (std::uint64_t idx = 0; idx < total; ++idx)
    if (indep[idx]) independents.push_back(idx);
  for (std::uint64_t a : independents) {
    const int ca = std::popcount(a);
    for (std::uint64_t b : independents) {
      if (ca >= std::popcount(b)) continue;
      bool extended = false;
      for (std::uint64_t cand = b & ~a; cand != 0 && !extended; cand &= cand - 1) {
        if (indep[a | (cand & ~(cand - 1))]) extended = true;
      }
      if (!extended) {
        report.violations.push_back("exchange axiom fails for I=" + index_to_set(a).to_string() +
                                    " J=" + index_to_set(b).to_string());
      }
    }
  }

  // Circuits: minimal dependent sets.
  std::vector<std::uint64_t> circuits;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (indep[idx]) continue;
    bool minimal = true;
    for (std::uint64_t rest = idx; rest != 0 && minimal; rest &= rest - 1)
      if (!indep[idx ^ (rest & ~(rest - 1))]) minimal = false;
    if (minimal) circuits.push_back(idx);
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      const std::uint64_t common = circuits[i] & circuits[j];
      for (std::uint64_t rest = common; rest != 0; rest &= rest - 1) {
        const std::uint64_t e = rest & ~(rest - 1);
        // A circuit inside X exists iff X is dependent.
        if (indep[(circuits[i] | circuits[j]) & ~e]) {
          report.violations.push_back("circuit elimination fails for " +
                                      index_to_set(circuits[i]).to_string() + " and " +
                                      index_to_set(circuits[j]).to_string());
        }
      }
    }
  }

  // Deduplicate repeated messages to keep reports readable.
  std::sort(report.violations.begin(), report.violations.end());
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                          report.violations.end());
  return report;
}

}  // namespace menum
