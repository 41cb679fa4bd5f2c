#include "menum/intersection_enum.hpp"

#include <atomic>
#include <vector>

#include "menum/errors.hpp"
#include "subset_cursor.hpp"

namespace menum {

namespace {

std::atomic<std::uint64_t>& parent_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

bool common_independent(const Matroid& m1, const Matroid& m2, const ElementSet& x) {
  return m1.is_independent(x) && m2.is_independent(x);
}

bool is_maximal_common(const Matroid& m1, const Matroid& m2, const ElementSet& x) {
  bool maximal = true;
  (m1.ground() - x).for_each([&](int e) {
    if (!maximal) return;
    if (common_independent(m1, m2, x.with(static_cast<std::size_t>(e)))) maximal = false;
  });
  return maximal;
}

void validate_extension(const ExtensionInstance& inst) {
  if (inst.m1 == nullptr || inst.m2 == nullptr)
    throw InputError("extension: missing matroid");
  if (inst.include.intersects(inst.exclude))
    throw InputError("extension: include and exclude overlap");
  if (!inst.m1->ground().contains(inst.include) || !inst.m1->ground().contains(inst.exclude))
    throw InputError("extension: element outside the ground set");
}

}  // namespace

bool extension_feasible(const ExtensionInstance& inst, std::size_t opt) {
  validate_extension(inst);
  if (!common_independent(*inst.m1, *inst.m2, inst.include)) return false;
  const MinorMatroid r1 =
      MinorMatroid::deletion(MinorMatroid::contraction(*inst.m1, inst.include), inst.exclude);
  const MinorMatroid r2 =
      MinorMatroid::deletion(MinorMatroid::contraction(*inst.m2, inst.include), inst.exclude);
  const std::size_t residual = maximum_common_independent_set(r1, r2).count();
  return inst.include.count() + residual == opt;
}

bool extension_feasible(const ExtensionInstance& inst) {
  validate_extension(inst);
  const std::size_t opt = maximum_common_independent_set(*inst.m1, *inst.m2).count();
  return extension_feasible(inst, opt);
}

bool enumerate_maximum(const Matroid& m1, const Matroid& m2, const SolutionSink& sink) {
  const std::size_t opt = maximum_common_independent_set(m1, m2).count();
  const ElementSet ground = m1.ground();

  struct Rec {
    const Matroid& m1;
    const Matroid& m2;
    const ElementSet& ground;
    std::size_t opt;
    const SolutionSink& sink;

    bool run(const ElementSet& include, const ElementSet& exclude) const {
      const ElementSet undecided = ground - include - exclude;
      const int e = undecided.first();
      if (e < 0) return sink(include);
      if (extension_feasible({&m1, &m2, include.with(static_cast<std::size_t>(e)), exclude},
                             opt)) {
        if (!run(include.with(static_cast<std::size_t>(e)), exclude)) return false;
      }
      if (extension_feasible({&m1, &m2, include, exclude.with(static_cast<std::size_t>(e))},
                             opt)) {
        if (!run(include, exclude.with(static_cast<std::size_t>(e)))) return false;
      }
      return true;
    }
  };

  return Rec{m1, m2, ground, opt, sink}.run(ElementSet{}, ElementSet{});
}

ParentCertificate parent_certified(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                                   const ElementSet& root) {
  if (i.count() >= root.count())
    throw ContractError("parent: |i| must be smaller than |root|");
  if (!common_independent(m1, m2, i))
    throw ContractError("parent: i is not a common independent set");
  parent_counter().fetch_add(1, std::memory_order_relaxed);

  const ElementSet both = root & i;
  const MinorMatroid r1 =
      MinorMatroid::contraction(MinorMatroid::restriction(m1, root | i), both);
  const MinorMatroid r2 =
      MinorMatroid::contraction(MinorMatroid::restriction(m2, root | i), both);
  const ExchangeDigraph digraph = ExchangeDigraph::build(r1, r2, i - root);
  const auto path = digraph.shortest_augmenting_path();
  if (!path)
    throw ContractError("parent: D(root, i) has no s-t path (oracle is not a matroid pair?)");
  if (path->vertices.size() < 4)
    throw ContractError("parent: canonical path has fewer than four vertices");

  ParentCertificate cert;
  cert.path = *path;
  cert.v2 = path->vertices[1];
  cert.v3 = path->vertices[2];
  const ElementSet swapped =
      i ^ ElementSet::of({cert.v2, cert.v3});
  if (!common_independent(m1, m2, swapped))
    throw ContractError("parent: i ^ {v2, v3} is not common independent");
  cert.parent = complete_to_maximal(m1, m2, swapped);

  if (cert.parent.count() > i.count() + 1)
    throw ContractError("parent: completion grew by more than one element");
  if (i.count() > cert.parent.count())
    throw ContractError("parent: |i| <= |parent| violated");
  if ((root ^ cert.parent).count() + 1 > (root ^ i).count())
    throw ContractError("parent: |root ^ parent| did not shrink");
  if ((i ^ cert.parent).count() > 3)
    throw ContractError("parent: |i ^ parent| exceeds 3");
  return cert;
}

ElementSet parent_solution(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                           const ElementSet& root) {
  return parent_certified(m1, m2, i, root).parent;
}

std::uint64_t parent_call_count() { return parent_counter().load(std::memory_order_relaxed); }

namespace {

bool is_child(const Matroid& m1, const Matroid& m2, const ElementSet& i, const ElementSet& root,
              std::size_t tau, const ElementSet& candidate) {
  const std::size_t size = candidate.count();
  if (size < tau || size >= root.count()) return false;
  if (!common_independent(m1, m2, candidate)) return false;
  if (!is_maximal_common(m1, m2, candidate)) return false;
  if (parent_solution(m1, m2, candidate, root) != i) return false;
  // Monotone by construction: the parent's distance-to-root postcondition
  // already forces |root ^ candidate| > |root ^ i|.
  return true;
}

}  // namespace

bool for_each_child(const Matroid& m1, const Matroid& m2, const ElementSet& i,
                    const ElementSet& root, std::size_t tau, const SolutionSink& sink) {
  const int n = static_cast<int>(m1.size());
  detail::SubsetCursor cursor(3);
  while (cursor.advance(n)) {
    const ElementSet candidate = i ^ ElementSet::from_ids(cursor.ids());
    if (is_child(m1, m2, i, root, tau, candidate)) {
      if (!sink(candidate)) return false;
    }
  }
  return true;
}

bool enumerate_large(const Matroid& m1, const Matroid& m2, std::size_t tau,
                     const SolutionSink& sink) {
  const std::size_t opt = maximum_common_independent_set(m1, m2).count();
  if (opt < tau) return true;

  // Fix the reference maximum: the first output of the deterministic
  // flashlight enumeration.
  ElementSet root;
  enumerate_maximum(m1, m2, [&](const ElementSet& r) {
    root = r;
    return false;
  });

  const int n = static_cast<int>(m1.size());

  struct Frame {
    ElementSet solution;
    detail::SubsetCursor cursor{3};
  };

  // Pre-order traversal of the subtree below one root solution. The explicit
  // stack honors the O(n) depth bound without leaning on the runtime stack.
  const auto traverse = [&](const ElementSet& start) -> bool {
    std::vector<Frame> stack;
    if (!sink(start)) return false;
    stack.push_back({start});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (!top.cursor.advance(n)) {
        stack.pop_back();
        continue;
      }
      const ElementSet candidate = top.solution ^ ElementSet::from_ids(top.cursor.ids());
      if (is_child(m1, m2, top.solution, root, tau, candidate)) {
        if (!sink(candidate)) return false;
        stack.push_back({candidate});
      }
    }
    return true;
  };

  return enumerate_maximum(m1, m2, [&](const ElementSet& r) { return traverse(r); });
}

}  // namespace menum
