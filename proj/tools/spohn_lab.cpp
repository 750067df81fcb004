// Command-line front door: load games and dependency graphs, build the
// polynomial systems, compute invariants, run the solvers, and reproduce the
// worked 4-player example end to end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "spohn/builtins.hpp"
#include "spohn/chow.hpp"
#include "spohn/cimodel.hpp"
#include "spohn/game.hpp"
#include "spohn/graph.hpp"
#include "spohn/io.hpp"
#include "spohn/numeric.hpp"
#include "spohn/report.hpp"
#include "spohn/spohnci.hpp"
#include "spohn/universality.hpp"

using nlohmann::json;
using namespace spohn;

namespace {

struct CommonOpts {
  std::string out;
  bool pretty = false;
  bool require_solutions = false;
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw std::invalid_argument("cannot open output file: " + opts.out);
  f << text;
}

std::string dump(const json& j, bool pretty) { return (pretty ? j.dump(2) : j.dump()) + "\n"; }

Partition parse_partition(const std::string& text) {
  std::vector<int> sizes;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
  if (sizes.empty()) throw std::invalid_argument("empty partition");
  for (size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] < sizes[i - 1])
      throw std::invalid_argument("partition sizes must be non-decreasing");
  return Partition::from_sizes(sizes);
}

SolveConfig make_config(uint64_t seed, double tol, int starts, int max_iter) {
  SolveConfig cfg(seed);
  cfg.tol = tol;
  cfg.starts = starts;
  cfg.max_iter = max_iter;
  return cfg;
}

int run_reproduce(const CommonOpts& opts, uint64_t seed) {
  std::ostringstream out;
  bool all_pass = true;
  auto item = [&](const std::string& name, bool pass, const std::string& detail = "") {
    all_pass = all_pass && pass;
    out << (pass ? "PASS  " : "FAIL  ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
  };

  Game game = example_4player();
  auto part = Partition::from_sizes({2, 2});
  auto sys = nash_ci_system(part, game);

  // The four products: a quadric in the player's own block times a linear
  // form in the other block, in the index convention of the equilibrium set.
  {
    auto v = [&](const std::string& name) {
      return Polynomial::variable(sys.pm.torus, sys.pm.torus->index_of(name));
    };
    auto quad = [&](const std::string& b) {
      return v("s" + b + "_11") * v("s" + b + "_21") * rat(2) +
             v("s" + b + "_21") * v("s" + b + "_12") +
             v("s" + b + "_11") * v("s" + b + "_22") * rat(3) +
             v("s" + b + "_12") * v("s" + b + "_22") * rat(2);
    };
    auto quad_mirror = [&](const std::string& b) {
      return v("s" + b + "_11") * v("s" + b + "_12") * rat(2) +
             v("s" + b + "_21") * v("s" + b + "_12") +
             v("s" + b + "_11") * v("s" + b + "_22") * rat(3) +
             v("s" + b + "_21") * v("s" + b + "_22") * rat(2);
    };
    std::vector<Polynomial> products{
        (v("s34_11") - v("s34_22") * rat(2)) * quad("12"),
        (v("s34_12") - v("s34_21") * rat(2)) * quad_mirror("12"),
        (v("s12_11") - v("s12_22") * rat(2)) * quad("34"),
        (v("s12_12") - v("s12_21") * rat(2)) * quad_mirror("34")};
    bool ok = true;
    for (int i = 0; i < 4; ++i) ok = ok && sys.F[i].proportional_to(products[i]);
    item("equations factor as the four line-times-quadric products", ok);
  }

  SolveConfig cfg = make_config(seed, 1e-10, 200, 100);
  cfg.start_lo = 0.05;
  cfg.start_hi = 3.0;
  auto nash = solve_totally_mixed_nash(game, cfg);
  {
    bool ok = nash.points.size() == 1;
    if (ok) {
      const auto& pt = nash.points[0];
      for (long w : {15L, 14L, 11L, 10L})
        ok = ok && std::abs(pt.probability[w] - 1.0 / 36.0) < 1e-8;
      ok = ok && std::abs(pt.payoffs[0] - 4.0 / 3.0) < 1e-8 &&
           std::abs(pt.payoffs[2] - 4.0 / 3.0) < 1e-8;
    }
    item("unique totally mixed Nash point with z = (1/36,...) and payoffs (4/3, 4/3)", ok);
  }

  auto points = sample_ci_equilibria(g4_example(), game, 60, cfg);
  {
    bool enough = points.size() >= 50;
    bool on_surface = true, in_square = true;
    for (const auto& pt : points) {
      double z0 = pt.probability[15], z1 = pt.probability[14];
      double z2 = pt.probability[11], z3 = pt.probability[10];
      on_surface = on_surface && std::abs(z0 * z3 - z1 * z2) < 1e-9;
      in_square = in_square && pt.payoffs[0] > 0 && pt.payoffs[0] < 8.0 / 3.0 &&
                  pt.payoffs[2] > 0 && pt.payoffs[2] < 8.0 / 3.0;
    }
    item("sampled CI equilibria lie on the ruled surface", enough && on_surface,
         std::to_string(points.size()) + " points");
    item("payoff images inside the open square (0, 8/3)^2", in_square);
    bool dominated = false;
    for (const auto& pt : points)
      if (pareto_dominates({pt.payoffs[0], pt.payoffs[2]}, {4.0 / 3.0, 4.0 / 3.0}))
        dominated = true;
    item("a sampled CI equilibrium Pareto-dominates the Nash payoffs", dominated);
    bool identities = true;
    for (const auto& pt : points)
      identities = identities && std::abs(pt.payoffs[0] - pt.payoffs[1] - 8.0 / 3.0) < 1e-8 &&
                   std::abs(pt.payoffs[2] - pt.payoffs[3] - 8.0 / 3.0) < 1e-8;
    item("payoff identities PX1 - PX2 = PX3 - PX4 = 8/3", identities);
  }

  emit(opts, out.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spohn-lab: polynomial systems and equilibria of graphical games"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --out/--pretty appear after the subcommand

  CommonOpts opts;
  app.add_option("--out", opts.out, "write the report to a file instead of stdout");
  app.add_flag("--pretty", opts.pretty, "indent JSON output");

  std::string graph_name, game_name, partition_text;
  uint64_t seed = 0;
  double tol = 1e-10;
  int starts = 200, max_iter = 100, count = 50;
  bool show_class = false;
  int lift_l = 1, embed_m = -1, embed_n = -1;

  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed (required for reproducibility)")->required();
    cmd->add_option("--tol", tol, "residual tolerance");
    cmd->add_option("--starts", starts, "multistart count");
    cmd->add_option("--max-iter", max_iter, "Newton iteration cap");
    cmd->add_flag("--require-solutions", opts.require_solutions,
                  "exit 3 when the solver returns nothing");
  };

  auto* markov = app.add_subcommand("markov", "pairwise and global Markov statements");
  markov->add_option("--graph", graph_name)->required();

  auto* model = app.add_subcommand("model", "conditional independence quadrics of the graph");
  model->add_option("--graph", graph_name)->required();

  auto* spohn_cmd = app.add_subcommand("spohn", "torus polynomial system of a graph and game");
  spohn_cmd->add_option("--graph", graph_name)->required();
  spohn_cmd->add_option("--game", game_name)->required();

  auto* nashci = app.add_subcommand("nashci", "partition system on the Segre torus");
  nashci->add_option("--partition", partition_text)->required();
  nashci->add_option("--game", game_name)->required();

  auto* dim = app.add_subcommand("dim", "model dimension and expected equilibrium dimension");
  dim->add_option("--graph", graph_name)->required();

  auto* degree = app.add_subcommand("degree", "degree of the Nash CI variety of a partition");
  degree->add_option("--partition", partition_text)->required();
  degree->add_flag("--show-class", show_class, "print the truncated expansion");

  auto* solve = app.add_subcommand("solve-nash", "totally mixed Nash points of a binary game");
  solve->add_option("--game", game_name)->required();
  add_seed(solve);

  auto* sample = app.add_subcommand("sample-ci", "sample totally mixed CI equilibria");
  sample->add_option("--graph", graph_name)->required();
  sample->add_option("--game", game_name)->required();
  sample->add_option("--count", count, "points requested");
  add_seed(sample);

  auto* probe = app.add_subcommand("probe-dim", "Jacobian-rank dimension probe");
  probe->add_option("--graph", graph_name)->required();
  probe->add_option("--game", game_name)->required();
  add_seed(probe);

  auto* region = app.add_subcommand("payoff-region", "payoff images of sampled CI equilibria");
  region->add_option("--graph", graph_name)->required();
  region->add_option("--game", game_name)->required();
  region->add_option("--count", count, "points requested");
  add_seed(region);

  auto* lift = app.add_subcommand("lift", "extend a game by payoff-designed player pairs");
  lift->add_option("--game", game_name)->required();
  lift->add_option("--l", lift_l, "number of appended cliques")->required();
  lift->add_option("--embed-m", embed_m, "defining polynomial count (embed mode)");
  lift->add_option("--embed-n", embed_n, "coordinate count (embed mode)");

  auto* reproduce = app.add_subcommand("reproduce", "re-derive the worked 4-player example");
  std::string reproduce_target;
  reproduce->add_option("target", reproduce_target, "example name")->required();
  reproduce->add_option("--seed", seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*markov) {
      Graph g = load_graph(graph_name);
      std::string text;
      for (const auto& s : g.pairwise_markov())
        text += dump(json{{"type", "pairwise"}, {"statement", s.to_string()}}, opts.pretty);
      for (const auto& s : g.global_markov())
        text += dump(json{{"type", "global"}, {"statement", s.to_string()}}, opts.pretty);
      emit(opts, text);
    } else if (*model) {
      Graph g = load_graph(graph_name);
      std::vector<int> choices(g.vertex_count(), 2);
      Game shape(choices, std::vector<std::vector<Rational>>(
                              g.vertex_count(),
                              std::vector<Rational>(1L << g.vertex_count(), Rational(0))));
      auto ptab = probability_table(shape);
      emit(opts, export_ideal(ptab, model_quadrics(g, choices, ptab)));
    } else if (*spohn_cmd) {
      Graph g = load_graph(graph_name);
      Game game = load_game(game_name);
      emit(opts, export_system(build_system(g, game)));
    } else if (*nashci) {
      Game game = load_game(game_name);
      emit(opts, export_system(nash_ci_system(parse_partition(partition_text), game)));
    } else if (*dim) {
      Graph g = load_graph(graph_name);
      json j{{"type", "dimensions"},
             {"model_dimension", model_dimension(g)},
             {"spohn_ci_dimension", expected_spohn_ci_dimension(g)}};
      emit(opts, dump(j, opts.pretty));
    } else if (*degree) {
      Partition part = parse_partition(partition_text);
      json j{{"type", "degree"},
             {"partition", part.sizes()},
             {"degree", nash_ci_degree(part).get_str()},
             {"expected_dimension", expected_nash_ci_dimension(part)},
             {"canonical_multidegree", canonical_multidegree(part)}};
      if (show_class) {
        // Full truncated expansion of the degree polynomial.
        std::vector<int> sizes = part.sizes();
        ChowClass h = ChowClass::zero(sizes);
        for (size_t i = 0; i < sizes.size(); ++i) h = h + ChowClass::variable(sizes, i);
        long sum_pow = 0;
        for (int s : sizes) sum_pow += 1L << s;
        ChowClass acc = h.pow(sum_pow - part.player_count() - static_cast<long>(sizes.size()));
        for (size_t b = 0; b < sizes.size(); ++b) {
          ChowClass factor = h;
          if (sizes[b] == 1) {
            std::vector<long> e(sizes.size(), 0);
            e[b] = 1;
            ChowClass neg = ChowClass::zero(sizes);
            neg.set_coefficient(e, Integer(-1));
            factor = factor + neg;
          } else {
            factor = factor + ChowClass::variable(sizes, b);
          }
          acc = acc * factor.pow(sizes[b]);
        }
        json terms = json::array();
        std::vector<long> bounds = acc.bounds();
        std::vector<long> e(sizes.size(), 0);
        bool done = false;
        while (!done) {
          Integer c = acc.coefficient(e);
          if (c != 0) terms.push_back(json{{"exponents", e}, {"coefficient", c.get_str()}});
          size_t i = sizes.size();
          done = true;
          while (i > 0) {
            --i;
            if (++e[i] < bounds[i]) {
              done = false;
              break;
            }
            e[i] = 0;
          }
        }
        j["class"] = std::move(terms);
      }
      emit(opts, dump(j, opts.pretty));
    } else if (*solve) {
      Game game = load_game(game_name);
      auto result = solve_totally_mixed_nash(game, make_config(seed, tol, starts, max_iter));
      emit(opts, equilibrium_points_jsonl("solve-nash", result.points, seed,
                                          result.degenerate_warning, opts.pretty));
      if (opts.require_solutions && result.points.empty()) return 3;
    } else if (*sample) {
      Graph g = load_graph(graph_name);
      Game game = load_game(game_name);
      auto points = sample_ci_equilibria(g, game, count, make_config(seed, tol, starts, max_iter));
      emit(opts, equilibrium_points_jsonl("sample-ci", points, seed, false, opts.pretty));
      if (opts.require_solutions && points.empty()) return 3;
    } else if (*probe) {
      Graph g = load_graph(graph_name);
      Game game = load_game(game_name);
      auto result = dimension_probe(g, game, make_config(seed, tol, starts, max_iter));
      emit(opts, probe_jsonl(result, seed, opts.pretty));
    } else if (*region) {
      Graph g = load_graph(graph_name);
      Game game = load_game(game_name);
      std::vector<EquilibriumPoint> pts;
      auto images =
          payoff_region_sample(g, game, count, make_config(seed, tol, starts, max_iter), &pts);
      std::string text;
      for (const auto& img : images)
        text += dump(json{{"type", "payoff"}, {"value", img}}, opts.pretty);
      emit(opts, text);
      if (opts.require_solutions && images.empty()) return 3;
    } else if (*lift) {
      Game base = load_game(game_name);
      LiftResult result = (embed_m >= 0 || embed_n >= 0)
                              ? embed_variety(base, lift_l, embed_m, embed_n)
                              : lift_game(base, lift_l);
      json j{{"type", "lift"},
             {"players", result.lifted.player_count()},
             {"partition", result.partition.sizes()},
             {"verified", result.report.ok()},
             {"appended_forms_match", result.report.appended_forms_match},
             {"base_forms_match", result.report.base_forms_match},
             {"appended_vars_absent", result.report.appended_vars_absent},
             {"notes", result.report.notes},
             {"game", json::parse(game_to_json(result.lifted))}};
      emit(opts, dump(j, opts.pretty));
      if (!result.report.ok()) return 1;
    } else if (*reproduce) {
      if (reproduce_target != "example-4player")
        throw std::invalid_argument("unknown reproduce target: " + reproduce_target);
      return run_reproduce(opts, seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
