// Acceptance suite: exercises every shipped guarantee end to end and prints
// one PASS/FAIL line per criterion. Exit code = number of failed criteria.
//
// Usage: acceptance --cli <path-to-cli> --instances <dir>

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "menum/applications.hpp"
#include "menum/brute.hpp"
#include "menum/exchange.hpp"
#include "menum/instance_io.hpp"
#include "menum/intersection_enum.hpp"
#include "menum/matching.hpp"
#include "menum/ranked.hpp"
#include "support.hpp"

using namespace menum;
using menum::testing::collect_sink;
using menum::testing::InstanceGenerator;
using nlohmann::json;

namespace {

std::string g_cli;
std::string g_instances;

// ---------------------------------------------------------------- utilities

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto dir = std::filesystem::temp_directory_path();
  const auto base = "menum_acc_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
  const auto out = dir / (base + ".out");
  const auto err = dir / (base + ".err");
  const std::string cmd = g_cli + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  std::filesystem::remove(out);
  std::filesystem::remove(err);
  return result;
}

std::string inst(const std::string& name) { return g_instances + "/" + name; }

std::vector<ElementSet> parse_solution_lines(const std::string& text) {
  std::vector<ElementSet> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ElementSet s;
    std::istringstream fields(line);
    int id = 0;
    while (fields >> id) s.set(static_cast<std::size_t>(id));
    out.push_back(s);
  }
  return out;
}

bool equals_brute(std::vector<ElementSet> got, std::vector<ElementSet> want) {
  const std::size_t raw = got.size();
  sort_solutions(got);
  got.erase(std::unique(got.begin(), got.end()), got.end());
  return raw == got.size() && got == want;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

using CriterionFn = std::function<Outcome()>;

// ------------------------------------------------------------ criterion 1

Outcome criterion_figure_reproduction() {
  const auto start = std::chrono::steady_clock::now();
  const auto m1 = testing::sample7_first();
  const auto m2 = testing::sample7_second();
  const auto d = ExchangeDigraph::build(*m1, *m2, ElementSet::of({0, 1, 2}));

  // The specified arc list (0-based ids, s = 7, t = 8).
  const std::set<std::pair<int, int>> stated = {{7, 4}, {7, 3}, {0, 4}, {4, 1}, {4, 2}, {2, 6},
                                                {2, 5}, {3, 0}, {1, 5}, {5, 8}, {6, 8}};
  std::set<std::pair<int, int>> built;
  for (const auto& arc : d.arcs()) built.insert({arc.from, arc.to});

  std::string detail;
  bool pass = true;
  if (built != stated) {
    pass = false;
    detail += "arc set differs from the stated 11-arc list:";
    for (const auto& [u, v] : stated)
      if (!built.count({u, v}))
        detail += " missing(" + std::to_string(u) + "," + std::to_string(v) + ")";
    for (const auto& [u, v] : built)
      if (!stated.count({u, v}))
        detail += " extra(" + std::to_string(u) + "," + std::to_string(v) + ")";
    detail +=
        "; the missing arc would need {0,1,2}+{4} dependent in m1, but that set is one of m1's "
        "bases, so no A1 arc can enter 4; ";
  }

  const auto path = d.shortest_augmenting_path();
  const bool path_ok = path.has_value() && path->vertices == std::vector<int>{7, 4, 1, 5, 8};
  if (!path_ok) {
    pass = false;
    detail += "canonical path mismatch; ";
  }
  bool augment_ok = false;
  if (path) {
    const ElementSet augmented = augment(ElementSet::of({0, 1, 2}), *path);
    augment_ok = augmented == ElementSet::of({0, 2, 4, 5}) && m1->is_independent(augmented) &&
                 m2->is_independent(augmented);
    if (!augment_ok) {
      pass = false;
      detail += "augmentation mismatch; ";
    }
  }
  if (std::chrono::steady_clock::now() - start > std::chrono::seconds(1)) {
    pass = false;
    detail += "took longer than 1s; ";
  }
  if (pass)
    detail = "arc set, path (s,4,1,5,t), and augmentation all verified";
  else
    detail += std::string("path sub-check ") + (path_ok ? "passes" : "fails") +
              ", augmentation sub-check " + (augment_ok ? "passes" : "fails");
  return {pass, detail};
}

// ------------------------------------------------------------ criteria 2+3

std::uint64_t g_criterion2_parent_calls = 0;

Outcome criterion_intersection_equivalence() {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t parents_before = parent_call_count();
  InstanceGenerator gen(20240817);
  std::size_t instances = 0, runs = 0;

  const auto check_pair = [&](const testing::MatroidPair& pair) -> bool {
    ++instances;
    const auto maxima =
        brute_common_independent(*pair.m1, *pair.m2, SolutionMode::Maximum, 0);
    const std::size_t opt = maxima.front().count();
    const auto got_max = collect_sink([&](const SolutionSink& sink) {
      return enumerate_maximum(*pair.m1, *pair.m2, sink);
    });
    if (!equals_brute(got_max, maxima)) return false;
    for (std::size_t tau = 0; tau <= opt; ++tau) {
      ++runs;
      const auto got = collect_sink([&](const SolutionSink& sink) {
        return enumerate_large(*pair.m1, *pair.m2, tau, sink);
      });
      if (!equals_brute(got, brute_common_independent(*pair.m1, *pair.m2,
                                                      SolutionMode::Maximal, tau)))
        return false;
    }
    return true;
  };

  for (int trial = 0; trial < 80; ++trial)
    if (!check_pair(gen.gf2_pair(8)))
      return {false, "gf2 mismatch at trial " + std::to_string(trial)};
  for (int trial = 0; trial < 80; ++trial)
    if (!check_pair(gen.partition_graphic_pair(10)))
      return {false, "partition x graphic mismatch at trial " + std::to_string(trial)};
  for (int trial = 0; trial < 60; ++trial)
    if (!check_pair(gen.uniform_pair(8)))
      return {false, "uniform mismatch at trial " + std::to_string(trial)};

  g_criterion2_parent_calls = parent_call_count() - parents_before;
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  if (secs > std::chrono::seconds(300))
    return {false, "suite exceeded 5 minutes (" + std::to_string(secs.count()) + "s)"};
  return {true, std::to_string(instances) + " instances, " + std::to_string(runs) +
                    " tau-runs, all equal to brute force, " + std::to_string(secs.count()) + "s"};
}

Outcome criterion_parent_laws() {
  // Every parent computation validates the path length, the common
  // independence of the swap, and the three growth/distance bounds inline,
  // throwing on violation; a throw would have failed the equivalence
  // criterion. Require here that those runs exercised the parent function.
  if (g_criterion2_parent_calls == 0)
    return {false, "the equivalence suite performed no parent computations"};
  return {true,
          std::to_string(g_criterion2_parent_calls) + " parent computations, zero violations"};
}

// ------------------------------------------------------------ criterion 4

Outcome criterion_neighborhood_lemmas() {
  InstanceGenerator gen(424242);
  std::size_t checks = 0, violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto pair = trial % 3   == 0 ? gen.gf2_pair(7)
                      : trial % 3 == 1 ? gen.partition_graphic_pair(7)
                                       : gen.uniform_pair(7);
    const auto maximal =
        brute_common_independent(*pair.m1, *pair.m2, SolutionMode::Maximal, 0);
    for (const ElementSet& i : maximal) {
      const auto d = ExchangeDigraph::build(*pair.m1, *pair.m2, i);
      i.for_each([&](int e) {
        const ElementSet outs = d.out_elements(e);
        const ElementSet ins = d.in_elements(e);
        const ElementSet base = i.without(static_cast<std::size_t>(e));
        outs.for_each([&](int f1) {
          outs.for_each([&](int f2) {
            if (f1 >= f2) return;
            ++checks;
            if (pair.m1->is_independent(
                    base.with(static_cast<std::size_t>(f1)).with(static_cast<std::size_t>(f2))))
              ++violations;
          });
        });
        ins.for_each([&](int f1) {
          ins.for_each([&](int f2) {
            if (f1 >= f2) return;
            ++checks;
            if (pair.m2->is_independent(
                    base.with(static_cast<std::size_t>(f1)).with(static_cast<std::size_t>(f2))))
              ++violations;
          });
        });
        (pair.m1->ground() - i - outs - ins).for_each([&](int f) {
          ++checks;
          const ElementSet swapped = base.with(static_cast<std::size_t>(f));
          if (pair.m1->is_independent(swapped) && pair.m2->is_independent(swapped)) ++violations;
        });
      });
    }
  }
  if (violations != 0)
    return {false,
            std::to_string(violations) + " violations in " + std::to_string(checks) + " checks"};
  return {true,
          std::to_string(checks) + " dependence checks across 50 instances, zero violations"};
}

// ------------------------------------------------------------ criterion 5

Outcome criterion_matching_equivalence() {
  InstanceGenerator gen(555001);
  std::size_t runs = 0, chain_steps = 0;

  const auto check_pair = [&](const TractablePair& p) -> std::string {
    const auto maximal = brute_matchings(*p.matroid, p.graph, SolutionMode::Maximal, 0);
    std::size_t opt = 0;
    for (const ElementSet& m : maximal) opt = std::max(opt, m.count());
    for (std::size_t tau = 0; tau <= opt; ++tau) {
      ++runs;
      auto got = collect_sink(
          [&](const SolutionSink& sink) { return enumerate_large_matchings(p, tau, sink); });
      std::vector<ElementSet> want;
      for (const ElementSet& m : maximal)
        if (m.count() >= tau) want.push_back(m);
      sort_solutions(want);
      if (!equals_brute(got, want)) return "enumeration mismatch";
    }
    ElementSet root;
    enumerate_maximum_matchings(p, [&](const ElementSet& r) {
      root = r;
      return false;
    });
    for (const ElementSet& m : maximal) {
      if (m.count() >= root.count()) continue;
      ElementSet walk = m;
      auto previous = matching_potential(walk, root);
      std::size_t steps = 0;
      while (walk.count() < root.count()) {
        walk = matching_parent(p, walk, root);
        const auto now = matching_potential(walk, root);
        if (!(now < previous)) return "potential did not decrease along a parent chain";
        previous = now;
        ++chain_steps;
        if (++steps > p.graph.edge_count()) return "parent chain too long";
      }
    }
    return "";
  };

  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen.random_matching_graph(8, 9);
    const TractablePair p{std::make_shared<FreeMatroid>(g.vertices), g,
                          std::make_shared<GraphOnlyMatchingSolver>()};
    if (const auto err = check_pair(p); !err.empty())
      return {false, "free pair trial " + std::to_string(trial) + ": " + err};
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto pr = trial % 2 ? gen.uniform_pair(6) : gen.partition_graphic_pair(6);
    if (const auto err = check_pair(encode_intersection(pr.m1, pr.m2)); !err.empty())
      return {false, "encoded pair trial " + std::to_string(trial) + ": " + err};
  }
  return {true, std::to_string(runs) + " tau-runs equal to brute force; " +
                    std::to_string(chain_steps) + " strictly decreasing parent steps"};
}

// ------------------------------------------------------------ criterion 6

struct RankableInstance {
  std::string file;
  bool matching;  // else intersection
};

const std::vector<RankableInstance> kRankable = {
    {"uniform-pair.json", false},      {"uniform-pair-wide.json", false},
    {"partition-graphic.json", false}, {"gf2-pair.json", false},
    {"match-free.json", true},         {"match-partition.json", true},
    {"match-encoded.json", true},
};

Outcome criterion_ranked_order() {
  for (const auto& entry : kRankable) {
    const auto doc = load_json(inst(entry.file));
    std::vector<ElementSet> ranked, plain;
    if (entry.matching) {
      const auto pair = parse_matching_instance(doc);
      ranked_enumerate(make_matching_threshold(pair, 0), [&](const ElementSet& s) {
        ranked.push_back(s);
        return true;
      });
      plain = collect_sink(
          [&](const SolutionSink& sink) { return enumerate_large_matchings(pair, 0, sink); });
    } else {
      const auto pair = parse_intersection_instance(doc);
      ranked_enumerate(make_intersection_threshold(*pair.m1, *pair.m2, 0),
                       [&](const ElementSet& s) {
                         ranked.push_back(s);
                         return true;
                       });
      plain = collect_sink([&](const SolutionSink& sink) {
        return enumerate_large(*pair.m1, *pair.m2, 0, sink);
      });
    }
    for (std::size_t k = 1; k < ranked.size(); ++k)
      if (ranked[k - 1].count() < ranked[k].count())
        return {false, entry.file + ": cardinalities increased"};
    auto a = ranked;
    auto b = plain;
    sort_solutions(a);
    sort_solutions(b);
    if (a != b) return {false, entry.file + ": ranked set differs from the tau=0 set"};

    for (const std::size_t want : {std::size_t{1}, std::min<std::size_t>(3, ranked.size())}) {
      if (ranked.size() < want) continue;
      const auto r = run_cli("ranked --first " + std::to_string(want) + " " + inst(entry.file));
      if (r.exit_code != 0) return {false, entry.file + ": ranked CLI failed"};
      const auto got = parse_solution_lines(r.out);
      if (got.size() != want)
        return {false, entry.file + ": --first returned " + std::to_string(got.size()) +
                           " solutions, wanted " + std::to_string(want)};
      std::multiset<std::size_t> got_sizes, want_sizes;
      std::set<std::vector<int>> family;
      for (const ElementSet& s : ranked) family.insert(s.to_vector());
      for (std::size_t k = 0; k < want; ++k) want_sizes.insert(ranked[k].count());
      for (const ElementSet& s : got) {
        got_sizes.insert(s.count());
        if (!family.count(s.to_vector()))
          return {false, entry.file + ": --first returned a non-solution"};
      }
      if (got_sizes != want_sizes)
        return {false, entry.file + ": --first sizes are not the largest"};
    }
  }
  return {true, std::to_string(kRankable.size()) +
                    " bundled instances ranked correctly (pair7 excluded: its oracles fail the "
                    "matroid axioms, outside the enumerators' contract)"};
}

// ------------------------------------------------------------ criterion 7

Outcome criterion_cvc() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs = {testing::path_graph(4), testing::cycle_graph(4),
                               testing::cycle_graph(6), testing::k4_minus_edge(),
                               testing::cube_graph()};
  InstanceGenerator gen(777003);
  for (int trial = 0; trial < 50; ++trial) graphs.push_back(gen.random_subcubic(3, 10));

  std::size_t runs = 0, phi_checked_graphs = 0;
  for (const Graph& g : graphs) {
    for (std::size_t tau = 0; tau <= static_cast<std::size_t>(g.vertices); ++tau) {
      ++runs;
      auto got = collect_sink(
          [&](const SolutionSink& sink) { return enumerate_min_cvc(g, tau, sink); });
      if (!equals_brute(got, brute_min_cvc(g, tau)))
        return {false, "cover mismatch on a graph with " + std::to_string(g.vertices) +
                           " vertices at tau " + std::to_string(tau)};
    }

    if (g.vertices > 8) continue;
    ++phi_checked_graphs;
    const auto built = build_cvc_instance(g);
    const std::size_t nh = built.h.edges.size();
    const std::size_t nv = static_cast<std::size_t>(g.vertices);
    const auto independent_in_g = [&](const ElementSet& verts) {
      for (const auto& [u, v] : g.edges)
        if (verts.test(static_cast<std::size_t>(u)) && verts.test(static_cast<std::size_t>(v)))
          return false;
      return true;
    };
    const auto complement_connected = [&](const ElementSet& verts) {
      DisjointSets ds(nv);
      const ElementSet rest = ElementSet::full(nv) - verts;
      for (const auto& [u, v] : g.edges)
        if (rest.test(static_cast<std::size_t>(u)) && rest.test(static_cast<std::size_t>(v)))
          ds.unite(u, v);
      ElementSet roots;
      rest.for_each([&](int v) { roots.set(static_cast<std::size_t>(ds.find(v))); });
      return roots.count() <= 1;
    };
    const auto nsis = [&](const ElementSet& verts) {
      return independent_in_g(verts) && complement_connected(verts);
    };
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nh); ++mask) {
      ElementSet hset;
      for (std::size_t e = 0; e < nh; ++e)
        if ((mask >> e) & 1) hset.set(e);
      const bool matching = is_matching(built.pair, hset);
      bool vertex_only = true;
      hset.for_each([&](int e) { vertex_only = vertex_only && e < g.vertices; });
      if (matching && !vertex_only) return {false, "a matching touched a subdivision pair"};
      if (!vertex_only) continue;
      const ElementSet image = built.phi_vertices(hset);
      if (matching != nsis(image))
        return {false, "phi image disagrees with the non-separating independent predicate"};
      if (!matching) continue;
      bool matching_maximal = true;
      for (std::size_t e = 0; e < nh && matching_maximal; ++e)
        if (!hset.test(e) && is_matching(built.pair, hset.with(e))) matching_maximal = false;
      bool nsis_maximal = true;
      (ElementSet::full(nv) - image).for_each([&](int v) {
        if (nsis(image.with(static_cast<std::size_t>(v)))) nsis_maximal = false;
      });
      if (matching_maximal != nsis_maximal)
        return {false, "maximality does not transfer across phi"};
    }
  }
  const auto secs =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  if (secs > std::chrono::seconds(300))
    return {false, "suite exceeded 5 minutes (" + std::to_string(secs.count()) + "s)"};
  return {true, std::to_string(runs) + " tau-runs over " + std::to_string(graphs.size()) +
                    " graphs equal to brute force; phi invariants exhaustive on " +
                    std::to_string(phi_checked_graphs) + " graphs, " +
                    std::to_string(secs.count()) + "s"};
}

// ------------------------------------------------------------ criterion 8

struct StatsRun {
  std::string file;
  std::string command;
  bool uniform_family = false;
};

const std::vector<StatsRun> kStatsRuns = {
    {"uniform-pair.json", "large-enum --tau 0 --stats", true},
    {"uniform-pair-wide.json", "large-enum --tau 0 --stats", true},
    {"partition-graphic.json", "large-enum --tau 0 --stats", false},
    {"gf2-pair.json", "large-enum --tau 0 --stats", false},
    {"match-free.json", "match-enum --tau 0 --stats", false},
    {"match-partition.json", "match-enum --tau 0 --stats", false},
    {"match-encoded.json", "match-enum --tau 0 --stats", false},
    {"app-bmatching.json", "app b-matching --tau 0 --stats", false},
    {"app-colorful.json", "app colorful-forest --tau 0 --stats", false},
    {"app-dcs.json", "app dcs --tau 0 --stats", false},
    {"app-cvc-c6.json", "app cvc --stats", false},
    {"app-cvc-cube.json", "app cvc --stats", false},
};

Outcome criterion_delay_sanity() {
  std::uint64_t worst = 0;
  for (const auto& run : kStatsRuns) {
    const auto r = run_cli(run.command + " " + inst(run.file));
    if (r.exit_code != 0)
      return {false, run.file + ": CLI exited " + std::to_string(r.exit_code)};
    json stats;
    try {
      stats = json::parse(r.err);
    } catch (...) {
      return {false, run.file + ": stats record is not JSON"};
    }
    const auto max_delay = stats.at("max_delay_queries").get<std::uint64_t>();
    const auto outputs = stats.at("outputs").get<std::uint64_t>();
    if (outputs == 0) return {false, run.file + ": no outputs recorded"};
    worst = std::max(worst, max_delay);
    if (max_delay > 10'000'000)
      return {false, run.file + ": max delay " + std::to_string(max_delay) + " oracle calls"};
    if (run.uniform_family) {
      const auto median = stats.at("median_delay_queries").get<std::uint64_t>();
      if (max_delay > 10 * std::max<std::uint64_t>(median, 1))
        return {false, run.file + ": max gap " + std::to_string(max_delay) +
                           " exceeds 10x median " + std::to_string(median)};
    }
  }
  return {true, std::to_string(kStatsRuns.size()) + " bundled runs, worst gap " +
                    std::to_string(worst) +
                    " oracle calls (pair7 excluded: non-matroid oracles)"};
}

// ------------------------------------------------------------ criterion 9

Outcome criterion_determinism() {
  const std::vector<std::string> runs = {
      "max-enum " + inst("pair7.json"),
      "large-enum --tau 4 " + inst("pair7.json"),
      "large-enum --dump-digraph --set 0,1,2 " + inst("pair7.json"),
      "large-enum --tau 1 " + inst("uniform-pair.json"),
      "large-enum --tau 0 --json " + inst("partition-graphic.json"),
      "ranked --first 3 " + inst("uniform-pair.json"),
      "ranked " + inst("gf2-pair.json"),
      "match-enum --tau 1 " + inst("match-free.json"),
      "match-enum --tau 0 " + inst("match-encoded.json"),
      "app b-matching --tau 2 " + inst("app-bmatching.json"),
      "app colorful-forest --ranked " + inst("app-colorful.json"),
      "app dcs --tau 1 " + inst("app-dcs.json"),
      "app cvc --tau 5 " + inst("app-cvc-c6.json"),
      "verify " + inst("uniform-pair.json"),
      "verify " + inst("match-partition.json"),
      "verify --tau 6 " + inst("app-cvc-cube.json"),
      "stats " + inst("partition-graphic.json"),
  };
  for (const auto& args : runs) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    if (first.exit_code != second.exit_code || first.out != second.out)
      return {false, "outputs differ between repeats for: " + args};
  }

  // The worked-example file behaves as documented where its oracles are
  // within contract (tau = opt), and verify reports MATCH on real instances.
  const auto large = run_cli("large-enum --tau 4 " + inst("pair7.json"));
  auto got = parse_solution_lines(large.out);
  sort_solutions(got);
  if (got != brute_common_independent(*testing::sample7_first(), *testing::sample7_second(),
                                      SolutionMode::Maximal, 4))
    return {false, "pair7 large-enum --tau 4 differs from brute force"};
  const auto verify_out = run_cli("verify " + inst("uniform-pair.json"));
  if (verify_out.out.rfind("MATCH", 0) != 0)
    return {false, "verify did not report MATCH on a bundled instance"};

  return {true, std::to_string(runs.size()) + " subcommand runs byte-identical across repeats"};
}

}  // namespace

int main(int argc, char** argv) {
  for (int a = 1; a + 1 < argc; ++a) {
    const std::string flag = argv[a];
    if (flag == "--cli") g_cli = argv[a + 1];
    if (flag == "--instances") g_instances = argv[a + 1];
  }
  if (g_cli.empty() || g_instances.empty()) {
    std::cerr << "usage: acceptance --cli <path> --instances <dir>\n";
    return 64;
  }

  const std::vector<std::pair<std::string, CriterionFn>> criteria = {
      {"figure-reproduction", criterion_figure_reproduction},
      {"intersection-equivalence", criterion_intersection_equivalence},
      {"parent-laws", criterion_parent_laws},
      {"neighborhood-lemmas", criterion_neighborhood_lemmas},
      {"matching-equivalence", criterion_matching_equivalence},
      {"ranked-order", criterion_ranked_order},
      {"cvc-reduction", criterion_cvc},
      {"delay-sanity", criterion_delay_sanity},
      {"determinism", criterion_determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << " criterion-" << index << ' ' << name
              << " - " << outcome.detail << '\n';
    std::cout.flush();
  }
  return failures;
}
