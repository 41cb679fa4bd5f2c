#pragma once

#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "menum/applications.hpp"
#include "menum/graph.hpp"
#include "menum/matching.hpp"
#include "menum/matroid.hpp"
#include "menum/stats.hpp"

namespace menum {

/// Matroid schema: {"type": ...} with
///   free       {n}
///   uniform    {n, r}
///   partition  {blocks: [[ids]], capacities: [ints], n?}
///   graphic    {vertices, edges: [[u,v],...]}     (edge index = element id)
///   cographic  {vertices, edges: [[u,v],...]}
///   linear_gf2 {rows: ["0101", ...]}              (column index = element id)
///   bases      {n, bases: [[ids], ...]}           (explicit worked examples)
/// Throws InputError on malformed documents.
std::shared_ptr<const Matroid> parse_matroid(const nlohmann::json& doc);

struct IntersectionInstance {
  std::shared_ptr<const Matroid> m1;
  std::shared_ptr<const Matroid> m2;
};

/// {"m1": <matroid>, "m2": <matroid>} with equal ground sizes.
IntersectionInstance parse_intersection_instance(const nlohmann::json& doc);

/// {"matroid": <matroid>, "graph": {"edges": [[u,v],...]},
///  "solver": "brute"|"intersection"|"free"}
TractablePair parse_matching_instance(const nlohmann::json& doc);

/// {"nx", "ny", "edges": [[x,y],...], "bx": [...], "by": [...]}
BipartiteInstance parse_b_matching_instance(const nlohmann::json& doc);

/// {"vertices", "edges": [[u,v],...], "colors": [...]}
ColoredGraph parse_colorful_instance(const nlohmann::json& doc);

/// {"vertices", "arcs": [[u,v],...], "delta_out": [...], "delta_in": [...]}
DegreeConstrainedInstance parse_dcs_instance(const nlohmann::json& doc);

/// {"vertices", "edges": [[u,v],...]}
Graph parse_graph_instance(const nlohmann::json& doc);

enum class InstanceKind { Intersection, Matching, Graph, Unknown };

/// Field-based sniffing: m1/m2, matroid+graph, or vertices+edges.
InstanceKind detect_instance_kind(const nlohmann::json& doc);

nlohmann::json solutions_to_json(const std::vector<ElementSet>& solutions);
nlohmann::json stats_to_json(const EnumerationStats& stats);

/// Parse from a file path, or stdin when path is "-".
nlohmann::json load_json(const std::string& path);

}  // namespace menum
