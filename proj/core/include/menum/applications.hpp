#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "menum/graph.hpp"
#include "menum/matching.hpp"
#include "menum/matroid.hpp"
#include "menum/sink.hpp"

namespace menum {

/// Bipartite b-matching instance; edges cross the X / Y classes, element id =
/// edge index.
struct BipartiteInstance {
  int nx = 0;
  int ny = 0;
  std::vector<std::pair<int, int>> edges;  // (x index, y index)
  std::vector<int> bx;
  std::vector<int> by;

  void validate() const;
};

/// Star partition matroids: independent = degree within capacity on each side.
std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>> encode_b_matching(
    const BipartiteInstance& inst);

struct ColoredGraph {
  Graph graph;
  std::vector<int> colors;  // one color id per edge

  void validate() const;
};

/// Graphic matroid x one-per-color partition matroid.
std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>> encode_colorful_forest(
    const ColoredGraph& g);

struct DegreeConstrainedInstance {
  int vertices = 0;
  std::vector<std::pair<int, int>> arcs;  // (from, to)
  std::vector<int> delta_out;
  std::vector<int> delta_in;

  void validate() const;
};

/// Out-star and in-star partition matroids over arc ids.
std::pair<std::shared_ptr<const Matroid>, std::shared_ptr<const Matroid>>
encode_degree_constrained(const DegreeConstrainedInstance& inst);

/// The subcubic connected-vertex-cover reduction: the input graph G, the
/// split graph G' (self-loops and parallel edges), the pairing graph H whose
/// vertices are the G' edges, and the tractable pair (cographic(G'), H).
///
/// Element ids of G': f-edges first, two per input vertex (2v, 2v+1), then the
/// two halves of each subdivided input edge (2|V|+2e, 2|V|+2e+1). H-edge h
/// maps to input vertex h for h < |V| and to input edge h - |V| otherwise.
struct CvcInstance {
  Graph input;
  Graph split;
  std::vector<std::vector<int>> vertex_copies;  // V'(w) per input vertex
  MatchingGraph h;
  TractablePair pair;

  int vertex_edge_count() const { return input.vertices; }

  /// phi of a matching: the covered input vertices. InputError when the
  /// matching touches a subdivision pair (its image would leave V).
  ElementSet phi_vertices(const ElementSet& h_edges) const;
};

/// Requires G connected, max degree 3, at least 2 vertices (InputError
/// otherwise; |V| <= 2 callers should answer directly, see enumerate_min_cvc).
CvcInstance build_cvc_instance(const Graph& g);

/// Streams the minimal connected vertex covers of cardinality at most tau as
/// vertex sets, via large-maximal-matching enumeration on the reduction with
/// threshold |V| - tau. Graphs with one or two vertices are answered
/// directly: the two-vertex pairing breaks the reduction's independence
/// argument (its f-edges are all self-loops), and its covers are immediate
/// anyway. Returns false iff the sink stopped the run.
bool enumerate_min_cvc(const Graph& g, std::size_t tau, const SolutionSink& sink);

}  // namespace menum
