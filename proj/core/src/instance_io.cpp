#include "menum/instance_io.hpp"

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "menum/errors.hpp"

namespace menum {

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw InputError(std::string("missing field \"") + name + '"');
  return *it;
}

std::size_t size_field(const json& doc, const char* name) {
  const json& f = field(doc, name);
  if (!f.is_number_unsigned()) throw InputError(std::string(name) + " must be a non-negative integer");
  return f.get<std::size_t>();
}

std::vector<std::pair<int, int>> edge_list(const json& doc, const char* name) {
  const json& f = field(doc, name);
  if (!f.is_array()) throw InputError(std::string(name) + " must be an array of pairs");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : f) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw InputError(std::string(name) + " entries must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

std::vector<int> int_list(const json& doc, const char* name) {
  const json& f = field(doc, name);
  if (!f.is_array()) throw InputError(std::string(name) + " must be an array of integers");
  std::vector<int> out;
  for (const json& x : f) {
    if (!x.is_number_integer()) throw InputError(std::string(name) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Graph graph_fields(const json& doc) {
  Graph g;
  g.vertices = static_cast<int>(size_field(doc, "vertices"));
  g.edges = edge_list(doc, "edges");
  g.validate();
  return g;
}

}  // namespace

std::shared_ptr<const Matroid> parse_matroid(const json& doc) {
  if (!doc.is_object()) throw InputError("matroid must be a JSON object");
  const json& type = field(doc, "type");
  if (!type.is_string()) throw InputError("matroid type must be a string");
  const std::string kind = type.get<std::string>();

  if (kind == "free") return std::make_shared<FreeMatroid>(size_field(doc, "n"));
  if (kind == "uniform")
    return std::make_shared<UniformMatroid>(size_field(doc, "n"), size_field(doc, "r"));
  if (kind == "partition") {
    const json& blocks_doc = field(doc, "blocks");
    if (!blocks_doc.is_array()) throw InputError("partition blocks must be an array");
    std::vector<std::vector<int>> blocks;
    int max_id = -1;
    for (const json& b : blocks_doc) {
      if (!b.is_array()) throw InputError("partition block must be an array of ids");
      std::vector<int> block;
      for (const json& x : b) {
        if (!x.is_number_integer() || x.get<int>() < 0)
          throw InputError("partition block ids must be non-negative integers");
        block.push_back(x.get<int>());
        max_id = std::max(max_id, block.back());
      }
      blocks.push_back(std::move(block));
    }
    const std::size_t n =
        doc.contains("n") ? size_field(doc, "n") : static_cast<std::size_t>(max_id + 1);
    return std::make_shared<PartitionMatroid>(n, blocks, int_list(doc, "capacities"));
  }
  if (kind == "graphic") return std::make_shared<GraphicMatroid>(graph_fields(doc));
  if (kind == "cographic") return std::make_shared<CographicMatroid>(graph_fields(doc));
  if (kind == "linear_gf2") {
    const json& rows_doc = field(doc, "rows");
    if (!rows_doc.is_array()) throw InputError("gf2 rows must be an array of bitstrings");
    std::vector<std::string> rows;
    for (const json& r : rows_doc) {
      if (!r.is_string()) throw InputError("gf2 rows must be strings");
      rows.push_back(r.get<std::string>());
    }
    return std::make_shared<LinearGf2Matroid>(rows);
  }
  if (kind == "bases") {
    const std::size_t n = size_field(doc, "n");
    const json& bases_doc = field(doc, "bases");
    if (!bases_doc.is_array()) throw InputError("bases must be an array of id arrays");
    std::vector<ElementSet> bases;
    for (const json& b : bases_doc) {
      if (!b.is_array()) throw InputError("each base must be an array of ids");
      ElementSet base;
      for (const json& x : b) {
        if (!x.is_number_integer() || x.get<int>() < 0 ||
            x.get<std::size_t>() >= n)
          throw InputError("base element out of range");
        base.set(x.get<std::size_t>());
      }
      bases.push_back(std::move(base));
    }
    return std::make_shared<BasisListMatroid>(n, std::move(bases));
  }
  throw InputError("unknown matroid type \"" + kind + '"');
}

IntersectionInstance parse_intersection_instance(const json& doc) {
  IntersectionInstance inst;
  inst.m1 = parse_matroid(field(doc, "m1"));
  inst.m2 = parse_matroid(field(doc, "m2"));
  if (inst.m1->size() != inst.m2->size())
    throw InputError("intersection instance: ground sets differ in size");
  return inst;
}

TractablePair parse_matching_instance(const json& doc) {
  TractablePair pair;
  pair.matroid = parse_matroid(field(doc, "matroid"));
  const json& graph_doc = field(doc, "graph");
  pair.graph.vertices = static_cast<int>(pair.matroid->size());
  pair.graph.edges = edge_list(graph_doc, "edges");
  pair.graph.validate();

  const json& solver_doc = field(doc, "solver");
  if (!solver_doc.is_string()) throw InputError("solver must be a string");
  const std::string solver = solver_doc.get<std::string>();
  if (solver == "brute")
    pair.solver = std::make_shared<BruteForceMatchingSolver>();
  else if (solver == "intersection")
    pair.solver = std::make_shared<PairedGraphIntersectionSolver>();
  else if (solver == "free")
    pair.solver = std::make_shared<GraphOnlyMatchingSolver>();
  else
    throw InputError("unknown solver \"" + solver + "\" (want brute, intersection, or free)");
  return pair;
}

BipartiteInstance parse_b_matching_instance(const json& doc) {
  BipartiteInstance inst;
  inst.nx = static_cast<int>(size_field(doc, "nx"));
  inst.ny = static_cast<int>(size_field(doc, "ny"));
  inst.edges = edge_list(doc, "edges");
  inst.bx = int_list(doc, "bx");
  inst.by = int_list(doc, "by");
  inst.validate();
  return inst;
}

ColoredGraph parse_colorful_instance(const json& doc) {
  ColoredGraph g;
  g.graph = graph_fields(doc);
  g.colors = int_list(doc, "colors");
  g.validate();
  return g;
}

DegreeConstrainedInstance parse_dcs_instance(const json& doc) {
  DegreeConstrainedInstance inst;
  inst.vertices = static_cast<int>(size_field(doc, "vertices"));
  inst.arcs = edge_list(doc, "arcs");
  inst.delta_out = int_list(doc, "delta_out");
  inst.delta_in = int_list(doc, "delta_in");
  inst.validate();
  return inst;
}

Graph parse_graph_instance(const json& doc) { return graph_fields(doc); }

InstanceKind detect_instance_kind(const json& doc) {
  if (!doc.is_object()) return InstanceKind::Unknown;
  if (doc.contains("m1") && doc.contains("m2")) return InstanceKind::Intersection;
  if (doc.contains("matroid") && doc.contains("graph")) return InstanceKind::Matching;
  if (doc.contains("vertices") && doc.contains("edges")) return InstanceKind::Graph;
  return InstanceKind::Unknown;
}

json solutions_to_json(const std::vector<ElementSet>& solutions) {
  json out = json::array();
  for (const ElementSet& s : solutions) out.push_back(s.to_vector());
  return out;
}

json stats_to_json(const EnumerationStats& stats) {
  json out;
  out["outputs"] = stats.outputs;
  out["max_delay_queries"] = stats.max_gap_queries();
  out["mean_delay_queries"] = stats.mean_gap_queries();
  out["median_delay_queries"] = stats.median_gap_queries();
  out["max_delay_ns"] = stats.max_gap_ns();
  out["mean_delay_ns"] = stats.mean_gap_ns();
  out["preprocess_queries"] = stats.preprocess_queries;
  out["preprocess_ns"] = stats.preprocess_ns;
  out["postprocess_queries"] = stats.postprocess_queries;
  out["postprocess_ns"] = stats.postprocess_ns;
  out["total_queries"] = stats.total_queries;
  out["total_ns"] = stats.total_ns;
  out["gap_queries"] = stats.gap_queries;
  return out;
}

json load_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot open instance file: " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
}

}  // namespace menum
