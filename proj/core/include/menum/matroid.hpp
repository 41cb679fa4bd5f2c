#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "menum/element_set.hpp"
#include "menum/errors.hpp"
#include "menum/graph.hpp"

namespace menum {

/// Independence oracle over ground elements 0..n-1.
///
/// Oracles are immutable after construction apart from the query counter,
/// which is atomic, so a single oracle may be shared across threads.
/// Minor wrappers keep the parent's id space and expose a ground() mask;
/// their queries are charged to the root oracle's counter.
class Matroid {
 public:
  virtual ~Matroid() = default;

  std::size_t size() const { return n_; }
  const ElementSet& ground() const { return ground_; }

  /// Is x independent? Requires x to be a subset of ground().
  bool is_independent(const ElementSet& x) const {
    if (!ground_.contains(x)) throw InputError("is_independent: element outside the ground set");
    return independent_impl(x);
  }

  virtual std::uint64_t query_count() const { return queries_.load(std::memory_order_relaxed); }

 protected:
  explicit Matroid(std::size_t n) : n_(n), ground_(ElementSet::full(n)) {}
  Matroid(std::size_t n, ElementSet ground) : n_(n), ground_(std::move(ground)) {}

  virtual bool independent_impl(const ElementSet& x) const = 0;

  void count_query() const { queries_.fetch_add(1, std::memory_order_relaxed); }

 private:
  std::size_t n_;
  ElementSet ground_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

class FreeMatroid final : public Matroid {
 public:
  explicit FreeMatroid(std::size_t n) : Matroid(n) {}

 private:
  bool independent_impl(const ElementSet&) const override {
    count_query();
    return true;
  }
};

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t n, std::size_t rank) : Matroid(n), rank_(rank) {}

 private:
  bool independent_impl(const ElementSet& x) const override {
    count_query();
    return x.count() <= rank_;
  }
  std::size_t rank_;
};

/// Blocks need not cover the ground set; uncovered elements are unconstrained.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::size_t n, const std::vector<std::vector<int>>& blocks,
                   std::vector<int> capacities);

 private:
  bool independent_impl(const ElementSet& x) const override;

  std::vector<int> block_of_;  // -1 for uncovered elements
  std::vector<int> capacities_;
};

/// Elements are edge indices; independent sets are forests.
class GraphicMatroid final : public Matroid {
 public:
  explicit GraphicMatroid(Graph g);
  const Graph& graph() const { return graph_; }

 private:
  bool independent_impl(const ElementSet& x) const override;
  Graph graph_;
};

/// Elements are edge indices; F is independent iff removing F keeps the
/// component count of the underlying graph (connectivity, not a rank formula).
class CographicMatroid final : public Matroid {
 public:
  explicit CographicMatroid(Graph g);
  const Graph& graph() const { return graph_; }

 private:
  bool independent_impl(const ElementSet& x) const override;
  Graph graph_;
  std::size_t base_components_;
};

/// Column matroid of a GF(2) matrix; column index = element id.
class LinearGf2Matroid final : public Matroid {
 public:
  /// Each row is a bitstring of equal length n, e.g. "10110".
  explicit LinearGf2Matroid(const std::vector<std::string>& rows);

 private:
  bool independent_impl(const ElementSet& x) const override;
  std::vector<ElementSet> columns_;  // column -> set of rows with a 1
};

/// Downward closure of an explicit base list. Mostly used to express worked
/// examples given by their bases; nothing checks that the family is a matroid
/// (run check_axioms when that matters).
class BasisListMatroid final : public Matroid {
 public:
  BasisListMatroid(std::size_t n, std::vector<ElementSet> bases);
  const std::vector<ElementSet>& bases() const { return bases_; }

 private:
  bool independent_impl(const ElementSet& x) const override;
  std::vector<ElementSet> bases_;
};

/// Arbitrary predicate oracle; handy in tests (e.g. deliberately corrupted
/// families for the axiom checker).
class CallbackMatroid final : public Matroid {
 public:
  CallbackMatroid(std::size_t n, std::function<bool(const ElementSet&)> pred)
      : Matroid(n), pred_(std::move(pred)) {}

 private:
  bool independent_impl(const ElementSet& x) const override {
    count_query();
    return pred_(x);
  }
  std::function<bool(const ElementSet&)> pred_;
};

/// Restriction / deletion / contraction wrapper, flattened so a chain of minors
/// stays one hop from the root oracle. Ids are those of the root; ground()
/// is the surviving mask. Contraction fixes the lowest-id greedy base of the
/// contracted part once, at construction, and unions it into every query.
class MinorMatroid final : public Matroid {
 public:
  static MinorMatroid restriction(const Matroid& m, const ElementSet& keep);
  static MinorMatroid deletion(const Matroid& m, const ElementSet& drop);
  static MinorMatroid contraction(const Matroid& m, const ElementSet& contracted);

  std::uint64_t query_count() const override { return root_->query_count(); }

 private:
  MinorMatroid(const Matroid& base, ElementSet ground, ElementSet add);

  const Matroid* root_;
  ElementSet add_;

  bool independent_impl(const ElementSet& x) const override {
    return root_->is_independent(x | add_);
  }
};

/// Rank of x: size of the greedily grown independent subset (ids ascending).
std::size_t rank(const Matroid& m, const ElementSet& x);

/// Lowest-id-first greedy base of m restricted to x.
ElementSet greedy_base(const Matroid& m, const ElementSet& x);

/// Unique circuit inside i + f, for independent i with i + f dependent.
ElementSet fundamental_circuit(const Matroid& m, const ElementSet& i, int f);

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Exhaustively verifies the three independence axioms plus circuit
/// elimination. Refuses ground sets larger than `limit` (default 12).
AxiomReport check_axioms(const Matroid& m, std::size_t limit = 12);

}  // namespace menum
