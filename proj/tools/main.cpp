// menum: enumeration of large maximal common independent sets of two
// matroids, maximal matroid matchings, ranked variants, and the bundled
// combinatorial reductions.
//
// Exit codes: 0 success, 1 verification mismatch, 2 malformed instance,
// 3 infeasible precondition or broken oracle contract.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "menum/applications.hpp"
#include "menum/brute.hpp"
#include "menum/errors.hpp"
#include "menum/exchange.hpp"
#include "menum/instance_io.hpp"
#include "menum/intersection_enum.hpp"
#include "menum/matching.hpp"
#include "menum/ranked.hpp"
#include "menum/stats.hpp"

namespace {

using menum::ElementSet;
using menum::SolutionSink;

struct OutputOptions {
  bool json = false;
  bool stats = false;
  std::optional<std::size_t> first;
};

void print_solution_line(const ElementSet& s) {
  bool first = true;
  s.for_each([&](int e) {
    if (!first) std::cout << ' ';
    std::cout << e;
    first = false;
  });
  std::cout << '\n';
  std::cout.flush();  // downstream consumers observe the delay per solution
}

/// Runs an enumerator under the output options: line or JSON output,
/// optional --first truncation, optional stats record on stderr.
void run_enumeration(const OutputOptions& opts,
                     const std::function<std::uint64_t()>& query_reader,
                     const std::function<bool(const SolutionSink&)>& enumerate) {
  menum::DelayRecorder recorder(query_reader);
  std::vector<ElementSet> collected;
  std::size_t emitted = 0;

  const SolutionSink sink = [&](const ElementSet& s) {
    recorder.output();
    ++emitted;
    if (opts.json)
      collected.push_back(s);
    else
      print_solution_line(s);
    return !(opts.first && emitted >= *opts.first);
  };
  enumerate(sink);
  recorder.finish();

  if (opts.json) {
    std::cout << menum::solutions_to_json(collected).dump() << '\n';
  }
  if (opts.stats) {
    std::cerr << menum::stats_to_json(recorder.stats()).dump() << '\n';
  }
}

std::uint64_t pair_queries(const menum::IntersectionInstance& inst) {
  return inst.m1->query_count() + inst.m2->query_count();
}

ElementSet parse_id_set(const std::string& csv) {
  ElementSet s;
  std::stringstream ss(csv);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    std::size_t pos = 0;
    const int value = std::stoi(token, &pos);
    if (pos != token.size() || value < 0) throw menum::InputError("--set wants non-negative ids");
    s.set(static_cast<std::size_t>(value));
  }
  return s;
}

struct CommonFlags {
  std::string file;
  std::size_t tau = 0;
  bool ranked = false;
  std::optional<std::size_t> first;
  OutputOptions out;
  bool dump_digraph = false;
  std::string digraph_set;
};

void add_instance_arg(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("instance", f.file, "instance JSON file (\"-\" for stdin)")->required();
  cmd->add_flag("--json", f.out.json, "emit one JSON array instead of lines");
  cmd->add_flag("--stats", f.out.stats, "append a delay-stats JSON record to stderr");
}

void add_ranked_flags(CLI::App* cmd, CommonFlags& f) {
  auto* ranked = cmd->add_flag("--ranked", f.ranked, "non-increasing cardinality order");
  cmd->add_option("--first", f.first, "stop after this many solutions")->needs(ranked);
}

int dispatch_dump_digraph(const menum::IntersectionInstance& inst, const CommonFlags& f) {
  const ElementSet base = parse_id_set(f.digraph_set);
  const auto digraph = menum::ExchangeDigraph::build(*inst.m1, *inst.m2, base);
  std::cout << digraph.to_dot();
  return 0;
}

void run_intersection(const CommonFlags& f, bool maximum_only) {
  const auto doc = menum::load_json(f.file);
  const auto inst = menum::parse_intersection_instance(doc);
  if (f.dump_digraph) {
    dispatch_dump_digraph(inst, f);
    return;
  }
  OutputOptions out = f.out;
  out.first = f.first;
  run_enumeration(out, [&] { return pair_queries(inst); }, [&](const SolutionSink& sink) {
    if (maximum_only) return menum::enumerate_maximum(*inst.m1, *inst.m2, sink);
    if (f.ranked) {
      menum::ranked_enumerate(menum::make_intersection_threshold(*inst.m1, *inst.m2, f.tau),
                              sink);
      return true;
    }
    return menum::enumerate_large(*inst.m1, *inst.m2, f.tau, sink);
  });
}

void run_matching(const CommonFlags& f) {
  const auto doc = menum::load_json(f.file);
  const auto pair = menum::parse_matching_instance(doc);
  OutputOptions out = f.out;
  out.first = f.first;
  run_enumeration(out, [&] { return pair.matroid->query_count(); },
                  [&](const SolutionSink& sink) {
                    if (f.ranked) {
                      menum::ranked_enumerate(menum::make_matching_threshold(pair, f.tau), sink);
                      return true;
                    }
                    return menum::enumerate_large_matchings(pair, f.tau, sink);
                  });
}

void run_pair_enumeration(const CommonFlags& f, const menum::IntersectionInstance& inst) {
  OutputOptions out = f.out;
  out.first = f.first;
  run_enumeration(out, [&] { return pair_queries(inst); }, [&](const SolutionSink& sink) {
    if (f.ranked) {
      menum::ranked_enumerate(menum::make_intersection_threshold(*inst.m1, *inst.m2, f.tau),
                              sink);
      return true;
    }
    return menum::enumerate_large(*inst.m1, *inst.m2, f.tau, sink);
  });
}

void run_ranked(const CommonFlags& f) {
  const auto doc = menum::load_json(f.file);
  OutputOptions out = f.out;
  out.first = f.first;
  switch (menum::detect_instance_kind(doc)) {
    case menum::InstanceKind::Intersection: {
      const auto inst = menum::parse_intersection_instance(doc);
      run_enumeration(out, [&] { return pair_queries(inst); }, [&](const SolutionSink& sink) {
        menum::ranked_enumerate(menum::make_intersection_threshold(*inst.m1, *inst.m2, f.tau),
                                sink);
        return true;
      });
      return;
    }
    case menum::InstanceKind::Matching: {
      const auto pair = menum::parse_matching_instance(doc);
      run_enumeration(out, [&] { return pair.matroid->query_count(); },
                      [&](const SolutionSink& sink) {
                        menum::ranked_enumerate(menum::make_matching_threshold(pair, f.tau), sink);
                        return true;
                      });
      return;
    }
    default:
      throw menum::InputError("ranked expects an intersection or matching instance");
  }
}

void run_verify(const CommonFlags& f, std::optional<std::size_t> tau_opt, int& exit_code) {
  const auto doc = menum::load_json(f.file);
  std::vector<ElementSet> streamed;
  const SolutionSink collect = [&](const ElementSet& s) {
    streamed.push_back(s);
    return true;
  };
  menum::BruteForceReport expected;

  switch (menum::detect_instance_kind(doc)) {
    case menum::InstanceKind::Intersection: {
      const auto inst = menum::parse_intersection_instance(doc);
      const std::size_t tau = tau_opt.value_or(0);
      menum::enumerate_large(*inst.m1, *inst.m2, tau, collect);
      expected = menum::make_report(
          "intersection", menum::brute_common_independent(*inst.m1, *inst.m2,
                                                          menum::SolutionMode::Maximal, tau));
      break;
    }
    case menum::InstanceKind::Matching: {
      const auto pair = menum::parse_matching_instance(doc);
      const std::size_t tau = tau_opt.value_or(0);
      menum::enumerate_large_matchings(pair, tau, collect);
      expected = menum::make_report(
          "matching",
          menum::brute_matchings(*pair.matroid, pair.graph, menum::SolutionMode::Maximal, tau));
      break;
    }
    case menum::InstanceKind::Graph: {
      const auto graph = menum::parse_graph_instance(doc);
      const std::size_t tau = tau_opt.value_or(static_cast<std::size_t>(graph.vertices));
      menum::enumerate_min_cvc(graph, tau, collect);
      expected = menum::make_report("cvc", menum::brute_min_cvc(graph, tau));
      break;
    }
    default:
      throw menum::InputError("verify: unrecognized instance layout");
  }

  const auto diff = menum::compare_with_stream(expected, streamed);
  if (diff.match) {
    std::cout << "MATCH (" << expected.solutions.size() << " solutions)\n";
    exit_code = 0;
    return;
  }
  std::cout << "MISMATCH\n";
  for (const ElementSet& s : diff.missing) std::cout << "missing: " << s.to_string() << '\n';
  for (const ElementSet& s : diff.unexpected) std::cout << "extra: " << s.to_string() << '\n';
  for (const ElementSet& s : diff.duplicated) std::cout << "duplicate: " << s.to_string() << '\n';
  exit_code = 1;
}

void run_stats_command(const CommonFlags& f) {
  const auto doc = menum::load_json(f.file);
  std::function<std::uint64_t()> reader;
  std::function<bool(const SolutionSink&)> enumerate;

  menum::IntersectionInstance inst;
  menum::TractablePair pair;
  switch (menum::detect_instance_kind(doc)) {
    case menum::InstanceKind::Intersection:
      inst = menum::parse_intersection_instance(doc);
      reader = [inst] { return pair_queries(inst); };
      enumerate = [inst, &f](const SolutionSink& sink) {
        return menum::enumerate_large(*inst.m1, *inst.m2, f.tau, sink);
      };
      break;
    case menum::InstanceKind::Matching:
      pair = menum::parse_matching_instance(doc);
      reader = [pair] { return pair.matroid->query_count(); };
      enumerate = [pair, &f](const SolutionSink& sink) {
        return menum::enumerate_large_matchings(pair, f.tau, sink);
      };
      break;
    default:
      throw menum::InputError("stats expects an intersection or matching instance");
  }

  menum::DelayRecorder recorder(reader);
  enumerate([&](const ElementSet&) {
    recorder.output();
    return true;
  });
  recorder.finish();

  // stdout keeps the machine-independent fields so repeated runs are
  // byte-identical; the full record (wall times included) goes to stderr.
  const auto& stats = recorder.stats();
  nlohmann::json deterministic;
  deterministic["outputs"] = stats.outputs;
  deterministic["max_delay_queries"] = stats.max_gap_queries();
  deterministic["mean_delay_queries"] = stats.mean_gap_queries();
  deterministic["median_delay_queries"] = stats.median_gap_queries();
  deterministic["preprocess_queries"] = stats.preprocess_queries;
  deterministic["total_queries"] = stats.total_queries;
  deterministic["gap_queries"] = stats.gap_queries;
  std::cout << deterministic.dump() << '\n';
  std::cerr << menum::stats_to_json(stats).dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polynomial-delay enumeration over matroid pairs and tractable matchings"};
  app.require_subcommand(1);

  CommonFlags max_f, large_f, ranked_f, match_f, verify_f, stats_f;
  CommonFlags bmatch_f, colorful_f, dcs_f, cvc_f;
  std::optional<std::size_t> verify_tau;
  std::optional<std::size_t> cvc_tau;

  auto* max_cmd = app.add_subcommand("max-enum", "all maximum common independent sets");
  add_instance_arg(max_cmd, max_f);
  max_cmd->add_flag("--dump-digraph", max_f.dump_digraph,
                    "print the exchange digraph for --set in DOT and exit");
  max_cmd->add_option("--set", max_f.digraph_set, "comma-separated ids for --dump-digraph");

  auto* large_cmd =
      app.add_subcommand("large-enum", "maximal common independent sets with |I| >= tau");
  add_instance_arg(large_cmd, large_f);
  large_cmd->add_option("--tau", large_f.tau, "cardinality threshold")->default_val(0);
  add_ranked_flags(large_cmd, large_f);
  large_cmd->add_flag("--dump-digraph", large_f.dump_digraph,
                      "print the exchange digraph for --set in DOT and exit");
  large_cmd->add_option("--set", large_f.digraph_set, "comma-separated ids for --dump-digraph");

  auto* ranked_cmd = app.add_subcommand("ranked", "ranked enumeration (largest first)");
  add_instance_arg(ranked_cmd, ranked_f);
  ranked_cmd->add_option("--tau", ranked_f.tau, "cardinality floor")->default_val(0);
  ranked_cmd->add_option("--first", ranked_f.first, "stop after this many solutions");

  auto* match_cmd = app.add_subcommand("match-enum", "maximal matroid matchings with |M| >= tau");
  add_instance_arg(match_cmd, match_f);
  match_cmd->add_option("--tau", match_f.tau, "cardinality threshold")->default_val(0);
  add_ranked_flags(match_cmd, match_f);

  auto* app_cmd = app.add_subcommand("app", "combinatorial reductions");
  app_cmd->require_subcommand(1);

  auto* bmatch_cmd = app_cmd->add_subcommand("b-matching", "maximal bipartite b-matchings");
  add_instance_arg(bmatch_cmd, bmatch_f);
  bmatch_cmd->add_option("--tau", bmatch_f.tau, "cardinality threshold")->default_val(0);
  add_ranked_flags(bmatch_cmd, bmatch_f);

  auto* colorful_cmd = app_cmd->add_subcommand("colorful-forest", "maximal colorful forests");
  add_instance_arg(colorful_cmd, colorful_f);
  colorful_cmd->add_option("--tau", colorful_f.tau, "cardinality threshold")->default_val(0);
  add_ranked_flags(colorful_cmd, colorful_f);

  auto* dcs_cmd = app_cmd->add_subcommand("dcs", "maximal degree-constrained subdigraphs");
  add_instance_arg(dcs_cmd, dcs_f);
  dcs_cmd->add_option("--tau", dcs_f.tau, "cardinality threshold")->default_val(0);
  add_ranked_flags(dcs_cmd, dcs_f);

  auto* cvc_cmd = app_cmd->add_subcommand(
      "cvc", "minimal connected vertex covers of a subcubic graph with |C| <= tau");
  add_instance_arg(cvc_cmd, cvc_f);
  cvc_cmd->add_option("--tau", cvc_tau,
                      "cover size ceiling (default |V|); runs the matching "
                      "enumeration at threshold |V| - tau");
  add_ranked_flags(cvc_cmd, cvc_f);

  auto* verify_cmd =
      app.add_subcommand("verify", "diff an enumeration against the brute-force oracle");
  add_instance_arg(verify_cmd, verify_f);
  verify_cmd->add_option("--tau", verify_tau, "threshold (cvc: cover ceiling)");

  auto* stats_cmd = app.add_subcommand("stats", "run an enumeration, print only delay stats");
  add_instance_arg(stats_cmd, stats_f);
  stats_cmd->add_option("--tau", stats_f.tau, "cardinality threshold")->default_val(0);

  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;
  try {
    if (max_cmd->parsed()) {
      run_intersection(max_f, true);
    } else if (large_cmd->parsed()) {
      run_intersection(large_f, false);
    } else if (ranked_cmd->parsed()) {
      run_ranked(ranked_f);
    } else if (match_cmd->parsed()) {
      run_matching(match_f);
    } else if (bmatch_cmd->parsed()) {
      const auto doc = menum::load_json(bmatch_f.file);
      const auto inst = menum::parse_b_matching_instance(doc);
      const auto [m1, m2] = menum::encode_b_matching(inst);
      run_pair_enumeration(bmatch_f, {m1, m2});
    } else if (colorful_cmd->parsed()) {
      const auto doc = menum::load_json(colorful_f.file);
      const auto inst = menum::parse_colorful_instance(doc);
      const auto [m1, m2] = menum::encode_colorful_forest(inst);
      run_pair_enumeration(colorful_f, {m1, m2});
    } else if (dcs_cmd->parsed()) {
      const auto doc = menum::load_json(dcs_f.file);
      const auto inst = menum::parse_dcs_instance(doc);
      const auto [m1, m2] = menum::encode_degree_constrained(inst);
      run_pair_enumeration(dcs_f, {m1, m2});
    } else if (cvc_cmd->parsed()) {
      const auto doc = menum::load_json(cvc_f.file);
      const auto graph = menum::parse_graph_instance(doc);
      const std::size_t tau = cvc_tau.value_or(static_cast<std::size_t>(graph.vertices));
      OutputOptions out = cvc_f.out;
      out.first = cvc_f.first;
      if (graph.vertices > 2) {
        const auto inst = menum::build_cvc_instance(graph);
        const std::size_t nv = static_cast<std::size_t>(graph.vertices);
        const std::size_t floor = tau >= nv ? 0 : nv - tau;
        run_enumeration(out, [&] { return inst.pair.matroid->query_count(); },
                        [&](const SolutionSink& sink) {
                          const SolutionSink mapped = [&](const ElementSet& matching) {
                            return sink(ElementSet::full(nv) - inst.phi_vertices(matching));
                          };
                          if (cvc_f.ranked) {
                            // Rank by matching size: covers stream smallest first.
                            menum::ranked_enumerate(
                                menum::make_matching_threshold(inst.pair, floor), mapped);
                            return true;
                          }
                          return menum::enumerate_large_matchings(inst.pair, floor, mapped);
                        });
      } else {
        run_enumeration(out, [] { return std::uint64_t{0}; },
                        [&](const SolutionSink& sink) {
                          return menum::enumerate_min_cvc(graph, tau, sink);
                        });
      }
    } else if (verify_cmd->parsed()) {
      run_verify(verify_f, verify_tau, exit_code);
    } else if (stats_cmd->parsed()) {
      run_stats_command(stats_f);
    }
  } catch (const menum::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const menum::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return 3;
  }
  return exit_code;
}
