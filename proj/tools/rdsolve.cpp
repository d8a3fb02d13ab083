// Command-line front end: decide, optimize, fractional relaxation,
// preprocessing, verification, gadget generation and random instances.
// Exit codes: 0 = yes/feasible/accepted, 1 = no/violations, 2 = error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rd/rd.hpp"

namespace {

rd::Instance load_instance(const std::string& path) {
  if (path.empty()) return rd::parse_instance(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return rd::parse_instance(in);
}

rd::Algo parse_algo(const std::string& name) {
  if (name == "oracle") return rd::Algo::Oracle;
  if (name == "nonsink") return rd::Algo::Nonsink;
  if (name == "edges") return rd::Algo::Edges;
  if (name == "auto") return rd::Algo::Auto;
  throw std::runtime_error("unknown algorithm '" + name + "'");
}

void print_stats(const rd::SolverStats& stats) {
  std::cerr << "nodes_explored " << stats.nodes_explored << "\n";
  std::cerr << "leaf_enumerations " << stats.leaf_enumerations << "\n";
  for (const auto& [rule, count] : stats.rule_applications)
    std::cerr << "rule " << rule << " " << count << "\n";
}

void write_solution(const std::optional<rd::DelegationSolution>& sol,
                    const std::string& out_path) {
  rd::serialize_solution(sol, std::cout);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path);
    rd::serialize_solution(sol, out);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"delegation-cap solvers for liquid democracy"};
  app.require_subcommand(1);

  std::string in_path, out_path, solution_path, algo_name = "auto";
  long long lambda_override = -1;
  bool show_stats = false;

  auto add_common = [&](CLI::App* cmd, bool with_algo) {
    cmd->add_option("--in", in_path, "instance file (default: stdin)");
    if (with_algo)
      cmd->add_option("--algo", algo_name,
                      "oracle | nonsink | edges | auto (default auto)");
  };

  CLI::App* solve = app.add_subcommand("solve", "decide one instance");
  add_common(solve, true);
  solve->add_option("--lambda", lambda_override,
                    "override the cap from the instance file");
  solve->add_flag("--stats", show_stats, "print search statistics to stderr");
  solve->add_option("--out", out_path, "also write the solution to a file");

  CLI::App* optimize =
      app.add_subcommand("optimize", "minimize the cap for one instance");
  add_common(optimize, true);
  optimize->add_flag("--stats", show_stats);
  optimize->add_option("--out", out_path);

  CLI::App* fractional = app.add_subcommand(
      "fractional", "minimize the cap when votes may split");
  add_common(fractional, false);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "apply forced contractions and self-loop removal");
  add_common(reduce, false);

  CLI::App* verify = app.add_subcommand("verify", "check a solution file");
  add_common(verify, false);
  verify->add_option("--solution", solution_path, "solution file")
      ->required();
  verify->add_option("--lambda", lambda_override,
                     "override the cap from the instance file");

  std::string gadget_kind;
  CLI::App* gadget =
      app.add_subcommand("gadget", "build a delegation instance from a "
                                   "source problem");
  gadget->add_option("kind", gadget_kind, "sat | mmo | tvdp")->required();
  gadget->add_option("--in", in_path, "source problem file (default: stdin)");

  int gen_n = 0, gen_t = 1;
  double gen_prob = 0.2;
  std::uint64_t gen_seed = 1;
  bool gen_dag = false;
  CLI::App* gen = app.add_subcommand("gen", "random instance");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--t", gen_t, "sink count (default 1)");
  gen->add_option("--edge-prob", gen_prob, "edge probability (default 0.2)");
  gen->add_option("--seed", gen_seed, "seed (default 1)");
  gen->add_flag("--dag", gen_dag, "restrict edges to a topological order");
  gen->add_option("--lambda", lambda_override,
                  "fixed cap (default: sampled from [1, n])");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage error
    return 2;
  }

  rd::SolverConfigs cfg;

  if (solve->parsed()) {
    rd::Instance inst = load_instance(in_path);
    if (lambda_override >= 1) inst.lambda = lambda_override;
    rd::DecideOutcome out = rd::decide_with(parse_algo(algo_name), inst, cfg);
    if (show_stats) print_stats(out.stats);
    write_solution(out.solution, out_path);
    return out.yes() ? 0 : 1;
  }

  if (optimize->parsed()) {
    rd::Instance inst = load_instance(in_path);
    auto out = rd::optimize_driver(inst.graph, parse_algo(algo_name), cfg);
    if (!out) {
      std::cout << "infeasible\n";
      return 1;
    }
    if (show_stats) print_stats(out->stats);
    std::cout << "lambda " << out->lambda_star << "\n";
    write_solution(out->solution, out_path);
    return 0;
  }

  if (fractional->parsed()) {
    rd::Instance inst = load_instance(in_path);
    auto out = rd::fractional_optimize(inst.graph);
    if (!out) {
      std::cout << "infeasible\n";
      return 1;
    }
    rd::serialize_fractional(out->solution, std::cout);
    return 0;
  }

  if (reduce->parsed()) {
    rd::Instance inst = load_instance(in_path);
    const int original_n = inst.graph.n();
    auto [reduced, trace] = rd::normalize(inst.graph);
    std::cout << "p rd " << original_n << " " << reduced.m() << " "
              << inst.lambda << "\n";
    std::cout << "# vertices remaining:";
    for (rd::VertexId v : reduced.vertex_ids()) std::cout << " " << v;
    std::cout << "\n";
    for (rd::VertexId v : reduced.vertex_ids())
      if (reduced.weight(v) != 1)
        std::cout << "w " << v << " " << reduced.weight(v) << "\n";
    for (const auto& [u, v] : reduced.edges())
      std::cout << "e " << u << " " << v << "\n";
    for (const auto& ev : trace.events) {
      if (const auto* c = std::get_if<rd::Contract>(&ev)) {
        std::cout << "# contract " << c->deleted << " into " << c->into
                  << "\n";
      } else if (const auto* s = std::get_if<rd::SelfLoopRemoved>(&ev)) {
        std::cout << "# strip-self-loop " << s->v << "\n";
      } else if (const auto* d = std::get_if<rd::Deferred>(&ev)) {
        std::cout << "# defer " << d->v << " weight " << d->weight;
        for (rd::VertexId t : d->sink_neighbors) std::cout << " " << t;
        std::cout << "\n";
      }
    }
    return 0;
  }

  if (verify->parsed()) {
    rd::Instance inst = load_instance(in_path);
    if (lambda_override >= 1) inst.lambda = lambda_override;
    std::ifstream sin(solution_path);
    if (!sin) throw std::runtime_error("cannot open " + solution_path);
    auto sol = rd::parse_solution(sin);
    if (!sol) throw std::runtime_error("solution file answers 'no'; "
                                       "nothing to verify");
    rd::ValidationReport report = rd::validate(inst, *sol);
    if (report.ok()) {
      std::cout << "ok\n";
      return 0;
    }
    for (const auto& v : report.violations)
      std::cout << "violation " << v.message << "\n";
    return 1;
  }

  if (gadget->parsed()) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!in_path.empty()) {
      file.open(in_path);
      if (!file) throw std::runtime_error("cannot open " + in_path);
      in = &file;
    }
    rd::Instance inst;
    if (gadget_kind == "sat") {
      inst = rd::gadget_from_3b2sat(rd::parse_dimacs(*in)).first;
    } else if (gadget_kind == "mmo") {
      inst = rd::gadget_from_mmo(rd::parse_mmo(*in)).first;
    } else if (gadget_kind == "tvdp") {
      inst = rd::gadget_from_tvdp(rd::parse_tvdp(*in)).first;
    } else {
      throw std::runtime_error("unknown gadget kind '" + gadget_kind + "'");
    }
    rd::serialize_instance(inst, std::cout);
    return 0;
  }

  if (gen->parsed()) {
    rd::LambdaMode mode = lambda_override >= 1
                              ? rd::LambdaMode::value(lambda_override)
                              : rd::LambdaMode::sampled();
    rd::Instance inst = rd::random_instance(gen_n, gen_t, gen_prob, !gen_dag,
                                            mode, gen_seed);
    rd::serialize_instance(inst, std::cout);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError&) {
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
