// Acceptance suite: one pass/fail line per criterion, exact tolerances baked
// in. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "spohn/builtins.hpp"
#include "spohn/chow.hpp"
#include "spohn/cimodel.hpp"
#include "spohn/game.hpp"
#include "spohn/graph.hpp"
#include "spohn/numeric.hpp"
#include "spohn/report.hpp"
#include "spohn/spohnci.hpp"
#include "spohn/universality.hpp"

using namespace spohn;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail = "") {
  if (!pass) ++failures;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
       << std::fixed;
  line.precision(1);
  line << seconds << "s]";
  if (!detail.empty()) line << "  " << detail;
  std::cout << line.str() << std::endl;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

Graph random_graph(int n, uint64_t seed, int density_percent = 50) {
  Graph g(n);
  uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      if (static_cast<int>((state >> 33) % 100) < density_percent) g.add_edge(a, b);
    }
  return g;
}

CIStatement stmt(std::vector<int> A, std::vector<int> B, std::vector<int> C, int n) {
  return CIStatement::make(vertices_to_mask(A, n), vertices_to_mask(B, n),
                           vertices_to_mask(C, n));
}

VarTablePtr binary_ptab(int n) {
  Game g(std::vector<int>(n, 2),
         std::vector<std::vector<Rational>>(n, std::vector<Rational>(1L << n, Rational(0))));
  return probability_table(g);
}

void criterion_1() {
  Timer t;
  Graph g = line4();
  auto pw = g.pairwise_markov();
  std::set<CIStatement> pw_set(pw.begin(), pw.end());
  std::set<CIStatement> want{stmt({1}, {4}, {2, 3}, 4), stmt({1}, {3}, {2, 4}, 4),
                             stmt({2}, {4}, {1, 3}, 4)};
  bool pass = pw_set == want;
  auto gm = g.global_markov();
  std::set<CIStatement> gm_set(gm.begin(), gm.end());
  pass = pass && gm_set.count(stmt({1}, {3, 4}, {2}, 4)) == 1 &&
         gm_set.count(stmt({1, 2}, {4}, {3}, 4)) == 1;
  report(1, "Markov properties of the line graph", pass, t.seconds());
}

void criterion_2() {
  Timer t;
  bool pass = model_dimension(line4()) == 7 && model_dimension(cycle4()) == 8 &&
              model_dimension(figure2()) == 31 && model_dimension(Graph(3)) == 3 &&
              model_dimension(Graph(3, {{1, 2}})) == 4 &&
              model_dimension(Graph(3, {{1, 2}, {2, 3}})) == 5 &&
              model_dimension(Graph(3, {{1, 2}, {2, 3}, {1, 3}})) == 7;
  report(2, "model dimensions", pass, t.seconds());
}

void criterion_3() {
  Timer t;
  bool pass = expected_spohn_ci_dimension(Graph(3)) == 0 &&
              expected_spohn_ci_dimension(Graph(3, {{1, 2}})) == 1 &&
              expected_spohn_ci_dimension(Graph(3, {{1, 2}, {2, 3}})) == 2 &&
              expected_spohn_ci_dimension(Graph(3, {{1, 2}, {2, 3}, {1, 3}})) == 4 &&
              expected_spohn_ci_dimension(figure2()) == 24 &&
              expected_spohn_ci_dimension(line4()) == 3;
  report(3, "equilibrium dimensions from the clique count", pass, t.seconds());
}

bool param_kills_ideal(const Graph& g) {
  auto ptab = binary_ptab(g.vertex_count());
  auto quadrics = model_quadrics(g, std::vector<int>(g.vertex_count(), 2), ptab);
  ParamMap pm = param_map(g);
  std::vector<Polynomial> images;
  for (long w = 0; w < static_cast<long>(pm.image.size()); ++w)
    images.push_back(pm.image_monomial(w));
  for (const auto& q : quadrics)
    if (!q.substitute(images).is_zero()) return false;
  return true;
}

void criterion_4() {
  Timer t;
  bool pass = param_kills_ideal(line4()) && param_kills_ideal(cycle4()) &&
              param_kills_ideal(figure2()) && param_kills_ideal(g4_example());
  for (uint64_t seed = 1; seed <= 20 && pass; ++seed) {
    int n = 3 + static_cast<int>(seed % 4);
    pass = param_kills_ideal(random_graph(n, seed, 30 + static_cast<int>(seed * 7 % 50)));
  }
  report(4, "clique parametrization kills every global Markov quadric", pass, t.seconds());
}

void criterion_5() {
  Timer t;
  auto sys = nash_ci_system(Partition::from_sizes({2, 2}), example_4player());
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
  std::vector<Polynomial> products{(v("s34_11") - v("s34_22") * rat(2)) * quad("12"),
                                   (v("s34_12") - v("s34_21") * rat(2)) * quad_mirror("12"),
                                   (v("s12_11") - v("s12_22") * rat(2)) * quad("34"),
                                   (v("s12_12") - v("s12_21") * rat(2)) * quad_mirror("34")};
  bool pass = sys.F.size() == 4;
  for (int i = 0; i < 4 && pass; ++i) pass = sys.F[i].proportional_to(products[i]);
  report(5, "worked-example equations factor as the four products", pass, t.seconds());
}

void criterion_6() {
  Timer t;
  Game game = example_4player();
  SolveConfig cfg(20240617);
  cfg.start_lo = 0.05;
  cfg.start_hi = 3.0;
  auto nash = solve_totally_mixed_nash(game, cfg);
  bool pass = nash.points.size() == 1;
  std::string detail;
  if (pass) {
    const auto& pt = nash.points[0];
    for (long w : {15L, 14L, 11L, 10L})
      pass = pass && std::abs(pt.probability[w] - 1.0 / 36.0) < 1e-8;
    pass = pass && std::abs(pt.payoffs[0] - 4.0 / 3.0) < 1e-8 &&
           std::abs(pt.payoffs[2] - 4.0 / 3.0) < 1e-8;
  }
  auto points = sample_ci_equilibria(g4_example(), game, 60, cfg);
  pass = pass && points.size() >= 50;
  bool dominated = false;
  for (const auto& pt : points) {
    double z0 = pt.probability[15], z1 = pt.probability[14];
    double z2 = pt.probability[11], z3 = pt.probability[10];
    pass = pass && std::abs(z0 * z3 - z1 * z2) < 1e-9;
    pass = pass && pt.payoffs[0] > 0 && pt.payoffs[0] < 8.0 / 3.0 && pt.payoffs[2] > 0 &&
           pt.payoffs[2] < 8.0 / 3.0;
    if (pareto_dominates({pt.payoffs[0], pt.payoffs[2]}, {4.0 / 3.0, 4.0 / 3.0}))
      dominated = true;
  }
  pass = pass && dominated;
  detail = std::to_string(points.size()) + " CI points";
  report(6, "worked-example equilibria, payoff square, Pareto point", pass, t.seconds(), detail);
}

// Naive untruncated expansion oracle for the degree formula.
using DenseMap = std::map<std::vector<long>, Integer>;

DenseMap mul_maps(const DenseMap& a, const DenseMap& b) {
  DenseMap out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<long> e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

Integer oracle_degree(const std::vector<int>& sizes) {
  size_t k = sizes.size();
  int n = 0;
  long sum_pow = 0;
  for (int s : sizes) {
    n += s;
    sum_pow += 1L << s;
  }
  DenseMap acc{{std::vector<long>(k, 0), Integer(1)}};
  DenseMap h;
  for (size_t i = 0; i < k; ++i) {
    std::vector<long> e(k, 0);
    e[i] = 1;
    h[e] = 1;
  }
  for (long i = 0; i < sum_pow - n - static_cast<long>(k); ++i) acc = mul_maps(acc, h);
  for (size_t b = 0; b < k; ++b) {
    DenseMap factor = h;
    std::vector<long> e(k, 0);
    e[b] = 1;
    factor[e] += sizes[b] == 1 ? Integer(-1) : Integer(1);
    if (factor[e] == 0) factor.erase(e);
    for (int i = 0; i < sizes[b]; ++i) acc = mul_maps(acc, factor);
  }
  std::vector<long> top(k);
  for (size_t i = 0; i < k; ++i) top[i] = (1L << sizes[i]) - 1;
  auto it = acc.find(top);
  return it == acc.end() ? Integer(0) : it->second;
}

void partitions_rec(int n, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    std::vector<int> sizes = cur;
    std::sort(sizes.begin(), sizes.end());
    out.push_back(sizes);
    return;
  }
  for (int next = 1; next <= std::min(n, max_part); ++next) {
    cur.push_back(next);
    partitions_rec(n - next, next, cur, out);
    cur.pop_back();
  }
}

void criterion_7() {
  Timer t;
  bool pass = true;
  for (int n = 2; n <= 5 && pass; ++n) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(n, n, cur, parts);
    for (const auto& sizes : parts) {
      long sum_pow = 0;
      for (int s : sizes) sum_pow += 1L << s;
      if (sum_pow - static_cast<long>(sizes.size()) - n < 0) continue;
      if (nash_ci_degree(Partition::from_sizes(sizes)) != oracle_degree(sizes)) pass = false;
    }
  }
  for (int n = 2; n <= 4; ++n)
    pass = pass && nash_ci_degree(Partition::from_sizes({n})) == Integer(1L << n);
  pass = pass && nash_ci_degree(Partition::from_sizes({1, 1})) == 1 &&
         nash_ci_degree(Partition::from_sizes({1, 1, 1})) == 2;
  report(7, "degree formula against the naive expansion oracle", pass, t.seconds());
}

void criterion_8() {
  Timer t;
  // All isomorphism classes of graphs on 2, 3 and 4 vertices.
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.emplace_back("empty2", Graph(2));
  graphs.emplace_back("K2", Graph(2, {{1, 2}}));
  graphs.emplace_back("empty3", Graph(3));
  graphs.emplace_back("edge3", Graph(3, {{1, 2}}));
  graphs.emplace_back("path3", Graph(3, {{1, 2}, {2, 3}}));
  graphs.emplace_back("K3", Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  graphs.emplace_back("empty4", Graph(4));
  graphs.emplace_back("edge4", Graph(4, {{1, 2}}));
  graphs.emplace_back("matching", Graph(4, {{1, 2}, {3, 4}}));
  graphs.emplace_back("path3+iso", Graph(4, {{1, 2}, {2, 3}}));
  graphs.emplace_back("triangle+iso", Graph(4, {{1, 2}, {2, 3}, {1, 3}}));
  graphs.emplace_back("path4", line4());
  graphs.emplace_back("star", Graph(4, {{1, 2}, {1, 3}, {1, 4}}));
  graphs.emplace_back("cycle4", cycle4());
  graphs.emplace_back("paw", Graph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}}));
  graphs.emplace_back("diamond", Graph(4, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 4}}));
  graphs.emplace_back("K4", Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));

  bool pass = true;
  std::ostringstream detail;
  for (const auto& [name, g] : graphs) {
    long expected = expected_spohn_ci_dimension(g);
    int hits = 0, trials = 10;
    for (int trial = 0; trial < trials; ++trial) {
      Game game = random_binary_game(g.vertex_count(), 8000 + trial * 131 + g.edge_count() * 7);
      SolveConfig cfg(4000 + trial);
      cfg.starts = 48;
      cfg.probe_points = 2;
      cfg.start_lo = -2.0;
      cfg.start_hi = 2.0;
      try {
        if (dimension_probe(g, game, cfg).dimension == expected) ++hits;
      } catch (const std::exception&) {
        // counts as a miss
      }
    }
    if (hits < 9) {
      pass = false;
      detail << " " << name << ":" << hits << "/10";
    }
  }
  report(8, "codimension theorem probed on all graphs with up to 4 vertices", pass, t.seconds(),
         detail.str());
}

void criterion_9() {
  Timer t;
  bool pass = true;
  int checked = 0;
  for (uint64_t seed = 1; checked < 50; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    Graph g = random_graph(n, seed * 13 + 5, 20 + static_cast<int>(seed * 11 % 60));
    Game game = random_binary_game(n, seed + 500);
    auto sys = build_system(g, game);
    auto comps = g.components();
    for (int i = 1; i <= n; ++i) {
      if (sys.F[i - 1].is_zero()) continue;  // degenerate draw, no multidegree
      std::vector<int> comp_i;
      for (auto& c : comps)
        if (std::find(c.begin(), c.end(), i) != c.end()) comp_i = c;
      std::vector<int> want(sys.pm.cliques.size(), 0);
      for (size_t c = 0; c < sys.pm.cliques.size(); ++c) {
        bool inside =
            std::find(comp_i.begin(), comp_i.end(), sys.pm.cliques[c][0]) != comp_i.end();
        want[c] = comp_i.size() == 1 ? (inside ? 0 : 1) : (inside ? 2 : 1);
      }
      if (sys.F[i - 1].multidegree() != want) pass = false;
    }
    ++checked;
  }
  report(9, "multidegree law on 50 random graph-game pairs", pass, t.seconds());
}

void criterion_10() {
  Timer t;
  Game base = random_binary_game(3, 2025);
  SolveConfig base_cfg(61);
  base_cfg.starts = 100;
  base_cfg.start_lo = -3.0;
  base_cfg.start_hi = 3.0;
  int base_dim = dimension_probe(Graph(3), base, base_cfg).dimension;
  bool pass = base_dim == 0;
  for (int l = 1; l <= 2 && pass; ++l) {
    auto result = lift_game(base, l);
    pass = result.report.ok();
    if (!pass) break;
    Graph g(3 + 2 * l);
    for (int c = 0; c < l; ++c) g.add_edge(3 + 2 * c + 1, 3 + 2 * c + 2);
    SolveConfig cfg(62 + l);
    cfg.starts = 60;
    cfg.probe_points = 2;
    int lifted_dim = dimension_probe(g, result.lifted, cfg).dimension;
    pass = pass && (lifted_dim - base_dim == l);
  }
  report(10, "universality lift: exact recomputation and dimension growth", pass, t.seconds());
}

void criterion_11() {
  Timer t;
  SolveConfig cfg(98765);
  cfg.starts = 60;
  auto run_sample = [&] {
    auto points = sample_ci_equilibria(g4_example(), example_4player(), 20, cfg);
    return equilibrium_points_jsonl("sample-ci", points, cfg.seed);
  };
  auto run_nash = [&] {
    auto result = solve_totally_mixed_nash(random_binary_game(3, 4), cfg);
    return equilibrium_points_jsonl("solve-nash", result.points, cfg.seed,
                                    result.degenerate_warning);
  };
  auto run_probe = [&] {
    SolveConfig pc(13579);
    pc.starts = 40;
    pc.probe_points = 2;
    return probe_jsonl(dimension_probe(line4(), random_binary_game(4, 9), pc), pc.seed);
  };
  bool pass = run_sample() == run_sample() && run_nash() == run_nash() &&
              run_probe() == run_probe();
  report(11, "determinism: identical seeds give byte-identical reports", pass, t.seconds());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
