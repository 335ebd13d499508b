// Command line front end: loop-erasure queries, coproducts, antipodes,
// cactus projections, temporal trees, randomized identity suites, and
// seeded walk generation. JSON (or DOT) goes to standard output.
// Exit codes: 0 success, 2 input error, 3 when a check suite fails.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "walkalg/cactus.hpp"
#include "walkalg/coalgebra.hpp"
#include "walkalg/cuts.hpp"
#include "walkalg/generate.hpp"
#include "walkalg/json_io.hpp"
#include "walkalg/loop_erasure.hpp"
#include "walkalg/suites.hpp"
#include "walkalg/text_io.hpp"
#include "walkalg/walk.hpp"

namespace {

using nlohmann::json;
using namespace walkalg;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCounterexample = 3;

// Words are walks joined by '|': "1221|33".
Forest parse_forest(const std::string& text) {
  std::vector<Walk> members;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t bar = text.find('|', begin);
    std::size_t end = bar == std::string::npos ? text.size() : bar;
    members.push_back(parse_walk(text.substr(begin, end - begin)));
    if (bar == std::string::npos) break;
    begin = bar + 1;
  }
  return Forest(std::move(members));
}

json cuts_json(const std::vector<Cut>& cuts) {
  json out = json::array();
  for (const Cut& c : cuts) out.push_back(to_json(c));
  return out;
}

json ext_cuts_json(const std::vector<ExtCut>& ext) {
  json out = json::array();
  for (const ExtCut& e : ext) out.push_back(cuts_json(e));
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct GraphGate {
  std::optional<Digraph> graph;

  void load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
      throw std::invalid_argument("cannot open graph file '" + path + "'");
    json j;
    in >> j;
    graph = digraph_from_json(j);
  }

  void require(const Walk& w) const {
    if (graph && !validate_on_graph(w, *graph))
      throw std::invalid_argument("walk " + to_string(w) +
                                  " is not a walk on the given graph");
  }

  void require(const Forest& f) const {
    for (const Walk& m : f.members()) require(m);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact algebra of graph walks: loop erasures, cut coproducts, "
               "antipodes, cactus projections, and identity check suites"};
  app.require_subcommand(1);

  std::string graph_path;
  app.add_option("--graph", graph_path,
                 "JSON digraph file; inputs must be walks on it");

  std::string walk_text;
  std::string forest_text;

  auto* les_cmd = app.add_subcommand("les", "All loop-erased sections");
  les_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* lew_cmd =
      app.add_subcommand("lew", "Loop-erasure state after a number of steps");
  lew_cmd->add_option("walk", walk_text, "walk to analyze")->required();
  std::optional<std::size_t> lew_step;
  lew_cmd->add_option("--step", lew_step,
                      "steps consumed (default: the whole walk)");

  auto* adc_cmd =
      app.add_subcommand("adc", "Admissible cuts in erasure-time order");
  adc_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* eadc_cmd = app.add_subcommand(
      "eadc", "Extended cuts (non-overlapping admissible cut sets)");
  eadc_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* skeleton_cmd =
      app.add_subcommand("skeleton", "Walk left after full loop erasure");
  skeleton_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* classify_cmd = app.add_subcommand(
      "classify", "Self-avoiding walk / polygon / other");
  classify_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* coprod_cmd = app.add_subcommand("coprod", "Coproducts");
  coprod_cmd->add_option("input", forest_text, "walk, or walks joined by '|'")
      ->required();
  std::string kind = "hopf";
  coprod_cmd->add_option(
      "--kind", kind, "cp | hopf | brace:N | prec | succ (default hopf)");

  auto* antipode_cmd = app.add_subcommand("antipode", "Hopf antipode");
  antipode_cmd
      ->add_option("input", forest_text, "walk, or walks joined by '|'")
      ->required();
  std::string method = "closed";
  antipode_cmd->add_option("--method", method,
                           "closed | recursive (default closed)");
  std::string algebra = "tensor";
  antipode_cmd->add_option("--algebra", algebra,
                           "tensor | sym (default tensor)");

  auto* cactus_cmd = app.add_subcommand(
      "cactus", "Cactus test, cactus projection, canonical shape");
  cactus_cmd->add_option("walk", walk_text, "walk to analyze")->required();

  auto* tree_cmd =
      app.add_subcommand("tree", "Temporal tree of erased simple cycles");
  tree_cmd->add_option("walk", walk_text, "walk to analyze")->required();
  std::string tree_format = "json";
  tree_cmd->add_option("--format", tree_format, "dot | json (default json)");

  auto* check_cmd =
      app.add_subcommand("check", "Randomized identity suites");
  std::string suite;
  check_cmd
      ->add_option("--suite", suite,
                   "copreLie | coassoc | antipode | dendriform | brace | "
                   "morphism | cuts")
      ->required();
  GenConfig cfg;
  check_cmd->add_option("--count", cfg.count, "instances (default 500)");
  check_cmd->add_option("--vertices", cfg.vertex_count,
                        "vertex labels 1..V (default 5)");
  check_cmd->add_option("--max-len", cfg.max_length,
                        "maximum steps (default 12)");
  check_cmd->add_option("--min-len", cfg.min_length,
                        "minimum steps (default 1)");
  check_cmd->add_option("--seed", cfg.seed, "generator seed (default 0)");

  auto* gen_cmd = app.add_subcommand("gen", "Seeded random walks");
  GenConfig gen_cfg;
  gen_cmd->add_option("--count", gen_cfg.count, "walks (default 500)");
  gen_cmd->add_option("--vertices", gen_cfg.vertex_count,
                      "vertex labels 1..V (default 5)");
  gen_cmd->add_option("--max-len", gen_cfg.max_length,
                      "maximum steps (default 12)");
  gen_cmd->add_option("--min-len", gen_cfg.min_length,
                      "minimum steps (default 1)");
  gen_cmd->add_option("--seed", gen_cfg.seed, "generator seed (default 0)");
  bool no_self_loops = false;
  gen_cmd->add_flag("--no-self-loops", no_self_loops,
                    "forbid repeated consecutive vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    GraphGate gate;
    if (!graph_path.empty()) gate.load(graph_path);

    if (app.got_subcommand(les_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(cuts_json(les(w)));
    } else if (app.got_subcommand(lew_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(to_json(lew(w, lew_step.value_or(w.degree()))));
    } else if (app.got_subcommand(adc_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(cuts_json(adc(w)));
    } else if (app.got_subcommand(eadc_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(ext_cuts_json(eadc(w)));
    } else if (app.got_subcommand(skeleton_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(to_json(skeleton(w)));
    } else if (app.got_subcommand(classify_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(json(to_string(classify(w))));
    } else if (app.got_subcommand(coprod_cmd)) {
      Forest f = parse_forest(forest_text);
      gate.require(f);
      auto single_walk = [&]() -> const Walk& {
        if (f.size() != 1)
          throw std::invalid_argument("--kind " + kind +
                                      " expects a single walk");
        return f[0];
      };
      if (kind == "cp") {
        emit(to_json(delta_cp(single_walk())));
      } else if (kind == "hopf") {
        emit(to_json(delta_h(f)));
      } else if (kind == "prec") {
        emit(to_json(delta_prec(f)));
      } else if (kind == "succ") {
        emit(to_json(delta_succ(f)));
      } else if (kind.rfind("brace:", 0) == 0) {
        std::size_t n = std::stoull(kind.substr(6));
        emit(to_json(delta_n(single_walk(), n)));
      } else {
        throw std::invalid_argument("unknown coproduct kind '" + kind + "'");
      }
    } else if (app.got_subcommand(antipode_cmd)) {
      Forest f = parse_forest(forest_text);
      gate.require(f);
      if (algebra == "sym") {
        emit(to_json(antipode_sym(to_multiset(f))));
      } else if (algebra == "tensor") {
        if (method == "closed")
          emit(to_json(antipode_closed(f)));
        else if (method == "recursive")
          emit(to_json(antipode_recursive(f)));
        else
          throw std::invalid_argument("unknown antipode method '" + method +
                                      "'");
      } else {
        throw std::invalid_argument("unknown antipode algebra '" + algebra +
                                    "'");
      }
    } else if (app.got_subcommand(cactus_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      emit(json{{"input", to_json(w)},
                {"is_cactus", is_cactus(w)},
                {"cactus_map", to_json(cactus_map(w))},
                {"canonical", to_json(phi(w))}});
    } else if (app.got_subcommand(tree_cmd)) {
      Walk w = parse_walk(walk_text);
      gate.require(w);
      auto t = temporal_tree(w);
      if (tree_format == "dot")
        std::cout << to_dot(t);
      else if (tree_format == "json")
        emit(to_json(t));
      else
        throw std::invalid_argument("unknown tree format '" + tree_format +
                                    "'");
    } else if (app.got_subcommand(check_cmd)) {
      auto report = run_suite(suite, cfg);
      emit(to_json(report));
      return report.ok() ? kExitOk : kExitCounterexample;
    } else if (app.got_subcommand(gen_cmd)) {
      gen_cfg.allow_self_loops = !no_self_loops;
      json out = json::array();
      for (const Walk& w : gen_walks(gen_cfg)) out.push_back(to_json(w));
      emit(out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
