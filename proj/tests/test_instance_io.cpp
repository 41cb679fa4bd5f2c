#include <doctest.h>

#include <nlohmann/json.hpp>

#include "menum/brute.hpp"
#include "menum/instance_io.hpp"
#include "support.hpp"

using namespace menum;
using nlohmann::json;

TEST_CASE("matroid schema round trips by behavior") {
  const auto free = parse_matroid(json::parse(R"({"type":"free","n":3})"));
  CHECK(free->size() == 3);
  CHECK(free->is_independent(ElementSet::full(3)));

  const auto uniform = parse_matroid(json::parse(R"({"type":"uniform","n":5,"r":2})"));
  CHECK(uniform->is_independent(ElementSet::of({0, 4})));
  CHECK_FALSE(uniform->is_independent(ElementSet::of({0, 1, 2})));

  const auto partition = parse_matroid(
      json::parse(R"({"type":"partition","blocks":[[0,1],[2]],"capacities":[1,1]})"));
  CHECK(partition->size() == 3);
  CHECK_FALSE(partition->is_independent(ElementSet::of({0, 1})));

  const auto graphic = parse_matroid(
      json::parse(R"({"type":"graphic","vertices":3,"edges":[[0,1],[1,2],[2,0]]})"));
  CHECK_FALSE(graphic->is_independent(ElementSet::full(3)));

  const auto cographic = parse_matroid(
      json::parse(R"({"type":"cographic","vertices":3,"edges":[[0,1],[1,2],[2,0]]})"));
  CHECK(cographic->is_independent(ElementSet::of({0})));
  CHECK_FALSE(cographic->is_independent(ElementSet::of({0, 1})));

  const auto gf2 = parse_matroid(json::parse(R"({"type":"linear_gf2","rows":["110","011"]})"));
  CHECK_FALSE(gf2->is_independent(ElementSet::full(3)));

  const auto bases = parse_matroid(
      json::parse(R"({"type":"bases","n":3,"bases":[[0,1]]})"));
  CHECK(bases->is_independent(ElementSet::of({0, 1})));
  CHECK_FALSE(bases->is_independent(ElementSet::of({2})));
}

TEST_CASE("schema errors carry InputError") {
  CHECK_THROWS_AS((void)parse_matroid(json::parse(R"({"type":"nope"})")), InputError);
  CHECK_THROWS_AS((void)parse_matroid(json::parse(R"({"n":3})")), InputError);
  CHECK_THROWS_AS((void)parse_matroid(json::parse(R"({"type":"uniform","n":3})")), InputError);
  CHECK_THROWS_AS(
      (void)parse_matroid(json::parse(R"({"type":"bases","n":2,"bases":[[5]]})")), InputError);
  CHECK_THROWS_AS((void)parse_intersection_instance(json::parse(
                      R"({"m1":{"type":"free","n":2},"m2":{"type":"free","n":3}})")),
                  InputError);
}

TEST_CASE("pair instance with each solver") {
  const json doc = json::parse(R"({
    "matroid": {"type":"free","n":4},
    "graph": {"edges": [[0,1],[2,3],[1,2]]},
    "solver": "brute"
  })");
  const auto pair = parse_matching_instance(doc);
  CHECK(pair.graph.vertices == 4);
  CHECK(pair.graph.edge_count() == 3);
  CHECK(pair.solver
            ->maximum_matching(*pair.matroid, pair.graph, ElementSet::full(3))
            .count() == 2);

  json free_doc = doc;
  free_doc["solver"] = "free";
  CHECK(parse_matching_instance(free_doc)
            .solver->maximum_matching(*pair.matroid, pair.graph, ElementSet::full(3))
            .count() == 2);

  json bad = doc;
  bad["solver"] = "magic";
  CHECK_THROWS_AS((void)parse_matching_instance(bad), InputError);
}

TEST_CASE("intersection-encoded pair instance solves through the delegate") {
  // Partition matroid over interleaved copies = direct sum of two partition
  // matroids; the canonical pairing graph makes the delegate applicable.
  const json doc = json::parse(R"({
    "matroid": {"type":"partition",
                "blocks":[[0,2],[4],[1,3],[5]],
                "capacities":[1,1,2,0],
                "n":6},
    "graph": {"edges": [[0,1],[2,3],[4,5]]},
    "solver": "intersection"
  })");
  const auto pair = parse_matching_instance(doc);
  const auto brute = brute_matchings(*pair.matroid, pair.graph, SolutionMode::Maximum, 0);
  const auto via_delegate = pair.solver->maximum_matching(*pair.matroid, pair.graph,
                                                          ElementSet::full(3));
  CHECK(via_delegate.count() == brute.front().count());
}

TEST_CASE("application instance parsing") {
  const auto b = parse_b_matching_instance(json::parse(
      R"({"nx":2,"ny":2,"edges":[[0,0],[1,1]],"bx":[1,1],"by":[1,1]})"));
  CHECK(b.edges.size() == 2);

  const auto c = parse_colorful_instance(json::parse(
      R"({"vertices":3,"edges":[[0,1],[1,2]],"colors":[0,1]})"));
  CHECK(c.colors.size() == 2);

  const auto d = parse_dcs_instance(json::parse(
      R"({"vertices":2,"arcs":[[0,1]],"delta_out":[1,1],"delta_in":[1,1]})"));
  CHECK(d.arcs.size() == 1);

  CHECK_THROWS_AS((void)parse_dcs_instance(json::parse(
                      R"({"vertices":2,"arcs":[[0,5]],"delta_out":[1,1],"delta_in":[1,1]})")),
                  InputError);
}

TEST_CASE("kind detection") {
  CHECK(detect_instance_kind(json::parse(
            R"({"m1":{"type":"free","n":1},"m2":{"type":"free","n":1}})")) ==
        InstanceKind::Intersection);
  CHECK(detect_instance_kind(json::parse(
            R"({"matroid":{},"graph":{},"solver":"brute"})")) == InstanceKind::Matching);
  CHECK(detect_instance_kind(json::parse(R"({"vertices":2,"edges":[[0,1]]})")) ==
        InstanceKind::Graph);
  CHECK(detect_instance_kind(json::parse(R"({"x":1})")) == InstanceKind::Unknown);
}

TEST_CASE("solution serialization is canonical") {
  const auto doc = solutions_to_json({ElementSet::of({2, 0}), ElementSet{}});
  CHECK(doc.dump() == "[[0,2],[]]");
}
