#include <doctest.h>

#include <map>
#include <set>

#include "spohn/builtins.hpp"
#include "spohn/spohnci.hpp"

using namespace spohn;

namespace {

Graph random_graph(int n, uint64_t seed) {
  Graph g(n);
  uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      if ((state >> 41) & 1) g.add_edge(a, b);
    }
  return g;
}

// The four line-times-quadric products of the example game in the block
// coordinates s12_* (first clique) and s34_* (second clique). The linear
// forms are written in the index convention consistent with the example's
// equilibrium set.
std::vector<Polynomial> example_products(const VarTablePtr& torus) {
  auto v = [&](const std::string& name) {
    return Polynomial::variable(torus, torus->index_of(name));
  };
  auto q1 = v("s12_11") * v("s12_21") * rat(2) + v("s12_21") * v("s12_12") +
            v("s12_11") * v("s12_22") * rat(3) + v("s12_12") * v("s12_22") * rat(2);
  auto q2 = v("s12_11") * v("s12_12") * rat(2) + v("s12_21") * v("s12_12") +
            v("s12_11") * v("s12_22") * rat(3) + v("s12_21") * v("s12_22") * rat(2);
  auto q3 = v("s34_11") * v("s34_21") * rat(2) + v("s34_21") * v("s34_12") +
            v("s34_11") * v("s34_22") * rat(3) + v("s34_12") * v("s34_22") * rat(2);
  auto q4 = v("s34_11") * v("s34_12") * rat(2) + v("s34_21") * v("s34_12") +
            v("s34_11") * v("s34_22") * rat(3) + v("s34_21") * v("s34_22") * rat(2);
  auto l1 = v("s34_11") - v("s34_22") * rat(2);
  auto l2 = v("s34_12") - v("s34_21") * rat(2);
  auto l3 = v("s12_11") - v("s12_22") * rat(2);
  auto l4 = v("s12_12") - v("s12_21") * rat(2);
  return {l1 * q1, l2 * q2, l3 * q3, l4 * q4};
}

std::vector<int> expected_multidegree(const Graph& g, const ParamMap& pm, int player) {
  auto comps = g.components();
  std::vector<int> comp_i;
  for (auto& c : comps)
    if (std::find(c.begin(), c.end(), player) != c.end()) comp_i = c;
  std::vector<int> deg(pm.cliques.size(), 0);
  for (size_t c = 0; c < pm.cliques.size(); ++c) {
    bool inside = std::find(comp_i.begin(), comp_i.end(), pm.cliques[c][0]) != comp_i.end();
    if (comp_i.size() == 1)
      deg[c] = inside ? 0 : 1;
    else
      deg[c] = inside ? 2 : 1;
  }
  return deg;
}

}  // namespace

TEST_CASE("empty graph gives the multilinear payoff-difference forms") {
  Game g = random_binary_game(3, 11);
  Graph empty(3);
  auto sys = build_system(empty, g);
  REQUIRE(sys.F.size() == 3);
  for (int i = 1; i <= 3; ++i) {
    // F_i = sum over other players' profiles of (X_{..2..} - X_{..1..})
    // times the product of the other blocks' variables.
    std::vector<Term> terms;
    for (long w = 0; w < 8; ++w) {
      if (((w >> (3 - i)) & 1) != 1) continue;  // own strategy 2
      long w1 = w & ~(1L << (3 - i));
      Rational diff = g.payoff_tensor(i)[w] - g.payoff_tensor(i)[w1];
      if (diff == 0) continue;
      ExpVec e(sys.pm.torus->size(), 0);
      for (int m = 1; m <= 3; ++m) {
        if (m == i) continue;
        int jm = static_cast<int>((w >> (3 - m)) & 1) + 1;
        e[sys.pm.torus_var(m - 1, {jm})] += 1;
      }
      terms.push_back({e, diff});
    }
    auto expected = Polynomial::from_terms(sys.pm.torus, terms);
    CHECK(sys.F[i - 1].proportional_to(expected));
  }
}

TEST_CASE("example game yields the four products") {
  auto part = Partition::from_sizes({2, 2});
  auto sys = nash_ci_system(part, example_4player());
  auto products = example_products(sys.pm.torus);
  REQUIRE(sys.F.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(sys.F[i].proportional_to(products[i]));
}

TEST_CASE("nash_ci_system agrees with build_system on the clique graph") {
  auto part = Partition::from_sizes({2, 2});
  Game g = example_4player();
  auto direct = nash_ci_system(part, g);
  auto general = build_system(g4_example(), g);
  REQUIRE(direct.F.size() == general.F.size());
  for (size_t i = 0; i < direct.F.size(); ++i) CHECK(direct.F[i] == general.F[i]);

  auto part2 = Partition::from_sizes({1, 1, 2});
  Game h = random_binary_game(4, 5);
  auto direct2 = nash_ci_system(part2, h);
  auto general2 = build_system(Graph(4, {{3, 4}}), h);
  for (size_t i = 0; i < direct2.F.size(); ++i) CHECK(direct2.F[i] == general2.F[i]);
}

TEST_CASE("connected graph strips no component factor") {
  Game g = random_binary_game(4, 21);
  auto sys = build_system(line4(), g);
  for (const auto& sf : sys.stripped) {
    CHECK(!sf.isolated);
    CHECK(sf.component_factor == Polynomial::constant(sys.pm.torus, 1));
  }
}

TEST_CASE("multidegree law over random graph-game pairs") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    Graph graph = random_graph(n, seed);
    Game game = random_binary_game(n, seed + 1000);
    auto sys = build_system(graph, game);
    for (int i = 1; i <= n; ++i) {
      if (sys.F[i - 1].is_zero()) continue;
      CHECK(sys.F[i - 1].multidegree() == expected_multidegree(graph, sys.pm, i));
    }
  }
}

TEST_CASE("reconstruction identity: stripped factors times F equals the raw minor") {
  for (uint64_t seed = 2; seed <= 7; ++seed) {
    int n = 4;
    Graph graph = random_graph(n, seed * 3);
    Game game = random_binary_game(n, seed);
    auto sys = build_system(graph, game);
    auto ptab = probability_table(game);
    auto minors = spohn_minors(game, ptab);
    std::vector<Polynomial> images;
    for (long w = 0; w < game.profile_count(); ++w)
      images.push_back(sys.pm.image_monomial(w));
    for (int i = 0; i < n; ++i) {
      Polynomial raw = minors[i].substitute(images);
      Polynomial rebuilt = sys.stripped[i].component_factor * sys.stripped[i].isolated_factor *
                           sys.F[i] * sys.stripped[i].scale;
      CHECK(raw == rebuilt);
      // Cross-check by exact division where the factor is non-trivial.
      if (!raw.is_zero() && sys.stripped[i].component_factor.degree() > 0) {
        auto quotient = raw.divide_exact(sys.stripped[i].component_factor);
        REQUIRE(quotient.has_value());
      }
    }
  }
}

TEST_CASE("expected dimensions") {
  CHECK(expected_spohn_ci_dimension(Graph(3)) == 0);
  CHECK(expected_spohn_ci_dimension(Graph(3, {{1, 2}})) == 1);
  CHECK(expected_spohn_ci_dimension(Graph(3, {{1, 2}, {2, 3}})) == 2);
  CHECK(expected_spohn_ci_dimension(Graph(3, {{1, 2}, {2, 3}, {1, 3}})) == 4);
  CHECK(expected_spohn_ci_dimension(figure2()) == 24);
  CHECK(expected_spohn_ci_dimension(line4()) == 3);

  CHECK(expected_nash_ci_dimension(Partition::from_sizes({1, 1, 1})) == 0);
  CHECK(expected_nash_ci_dimension(Partition::from_sizes({1, 1, 2})) == 1);
  CHECK(expected_nash_ci_dimension(Partition::from_sizes({2, 2})) == 2);
}

TEST_CASE("complete intersection count") {
  auto part = Partition::from_sizes({1, 2, 2});
  Game g = random_binary_game(5, 77);
  auto sys = nash_ci_system(part, g);
  CHECK(sys.F.size() == 5);
}

TEST_CASE("W system generators") {
  auto part = Partition::from_sizes({1, 2});
  Graph g(3, {{2, 3}});
  ParamMap pm = param_map(g);
  auto gens = w_system_generators(part, pm, 1, 1);
  CHECK(gens.size() == 5);  // 2 + 2 + 1 for a two-vertex clique
  for (const auto& w : gens) {
    auto deg = w.multidegree();
    CHECK(deg == std::vector<int>{0, 2});
  }
  CHECK_THROWS(static_cast<void>(w_system_generators(part, pm, 0, 1)));

  // The span of W tensored with the other blocks' linear forms has dimension
  // (2^{n_i}-1) prod_{j != i} 2^{n_j} = 3 * 2 = 6: collect monomial
  // coefficient vectors of w * linear and row reduce exactly.
  std::vector<Polynomial> lambda_basis;
  for (const auto& w : gens)
    for (int var : pm.torus->block_vars(0))
      lambda_basis.push_back(w * Polynomial::variable(pm.torus, var));
  std::map<ExpVec, int> col_of;
  for (const auto& p : lambda_basis)
    for (const auto& t : p.terms())
      col_of.emplace(t.exps, static_cast<int>(col_of.size()));
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : lambda_basis) {
    std::vector<Rational> row(col_of.size(), Rational(0));
    for (const auto& t : p.terms()) row[col_of[t.exps]] = t.coef;
    rows.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t c = 0; c < col_of.size() && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (size_t cc = 0; cc < col_of.size(); ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  CHECK(rank == 6);
}

TEST_CASE("W system of a three-vertex clique") {
  auto part = Partition::from_sizes({1, 3});
  Graph g(4, {{2, 3}, {2, 4}, {3, 4}});
  ParamMap pm = param_map(g);
  for (int l = 1; l <= 3; ++l) {
    auto gens = w_system_generators(part, pm, 1, l);
    CHECK(gens.size() == 2 * 4 + 1);  // 2 * 2^{n_i - 1} + 1
    for (const auto& w : gens) CHECK(w.multidegree() == std::vector<int>{0, 2});
  }
  // Tensored with the singleton block's linear forms the span has dimension
  // (2^3 - 1) * 2 = 14.
  auto gens = w_system_generators(part, pm, 1, 1);
  std::vector<Polynomial> basis;
  for (const auto& w : gens)
    for (int var : pm.torus->block_vars(0)) basis.push_back(w * Polynomial::variable(pm.torus, var));
  std::map<ExpVec, int> col_of;
  for (const auto& p : basis)
    for (const auto& t : p.terms()) col_of.emplace(t.exps, static_cast<int>(col_of.size()));
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : basis) {
    std::vector<Rational> row(col_of.size(), Rational(0));
    for (const auto& t : p.terms()) row[col_of[t.exps]] = t.coef;
    rows.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t c = 0; c < col_of.size() && rank < rows.size(); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (size_t cc = 0; cc < col_of.size(); ++cc) rows[r][cc] -= f * rows[rank][cc];
    }
    ++rank;
  }
  CHECK(rank == 14);
}

TEST_CASE("singleton-block preimages: the linear system is complete") {
  // For a one-vertex clique every multilinear form of the right multidegree
  // has a preimage.
  auto part = Partition::from_sizes({1, 1});
  Game shape(std::vector<int>(2, 2),
             std::vector<std::vector<Rational>>(2, std::vector<Rational>(4, Rational(0))));
  Graph g(2);
  ParamMap pm = param_map(g);
  uint64_t state = 17;
  auto next = [&state] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 19) - 9;
  };
  for (int round = 0; round < 10; ++round) {
    Polynomial target =
        Polynomial::variable(pm.torus, pm.torus_var(1, {1})) * rat(next()) +
        Polynomial::variable(pm.torus, pm.torus_var(1, {2})) * rat(next());
    auto pre = solve_payoff_preimage(part, shape, 0, 1, target);
    REQUIRE(pre.tensor.has_value());
    Rational scale;
    Polynomial rebuilt = player_polynomial(pm, shape.choices(), 1, *pre.tensor, &scale);
    CHECK(rebuilt * scale == target);
  }
}

TEST_CASE("payoff preimage round trips") {
  auto part = Partition::from_sizes({1, 2});
  Game shape(std::vector<int>(3, 2),
             std::vector<std::vector<Rational>>(3, std::vector<Rational>(8, Rational(0))));
  Graph g(3, {{2, 3}});
  ParamMap pm = param_map(g);

  // Zero target: the zero tensor is admissible.
  auto zero = solve_payoff_preimage(part, shape, 1, 1, Polynomial::zero(pm.torus));
  REQUIRE(zero.tensor.has_value());
  Polynomial f0 = player_polynomial(pm, shape.choices(), 2, *zero.tensor);
  CHECK(f0.is_zero());

  // F of a random game: recover some preimage, recomputed F matches exactly.
  Game random = random_binary_game(3, 31);
  Rational scale;
  Polynomial target =
      player_polynomial(pm, random.choices(), 2, random.payoff_tensor(2), &scale);
  target = target * scale;  // raw, unnormalized form
  auto pre = solve_payoff_preimage(part, shape, 1, 1, target);
  REQUIRE(pre.tensor.has_value());
  Rational scale2;
  Polynomial rebuilt = player_polynomial(pm, random.choices(), 2, *pre.tensor, &scale2);
  CHECK(rebuilt * scale2 == target);

  // The universality target forms lie in the image.
  ExpVec t1(pm.torus->size(), 0), t2(pm.torus->size(), 0);
  t1[pm.torus_var(1, {1, 1})] = 1;
  t1[pm.torus_var(1, {2, 2})] = 1;
  t1[pm.all_two_var(0)] = 1;
  t2[pm.torus_var(1, {1, 2})] = 1;
  t2[pm.torus_var(1, {2, 2})] = 1;
  t2[pm.all_two_var(0)] = 1;
  Polynomial lin_target =
      Polynomial::monomial(pm.torus, t1, 1) + Polynomial::monomial(pm.torus, t2, 1);
  auto pre2 = solve_payoff_preimage(part, shape, 1, 1, lin_target);
  REQUIRE(pre2.tensor.has_value());

  // A target with a monomial outside the image fails with that support.
  ExpVec bad(pm.torus->size(), 0);
  bad[pm.torus_var(1, {1, 1})] = 2;  // two strategy-1 factors cannot occur
  bad[pm.all_two_var(0)] = 1;
  auto fail = solve_payoff_preimage(part, shape, 1, 1, Polynomial::monomial(pm.torus, bad, 1));
  CHECK(!fail.tensor.has_value());
  CHECK(!fail.residual_support.empty());
}

TEST_CASE("seven-player decomposable graph: exact reconstruction at scale") {
  Game g = random_binary_game(7, 99);
  auto sys = build_system(figure2(), g);
  // Connected graph: nothing stripped, raw minor equals scale times F.
  auto ptab = probability_table(g);
  auto minors = spohn_minors(g, ptab);
  std::vector<Polynomial> images;
  for (long w = 0; w < 128; ++w) images.push_back(sys.pm.image_monomial(w));
  Polynomial raw = minors[0].substitute(images);
  CHECK(sys.stripped[0].component_factor == Polynomial::constant(sys.pm.torus, 1));
  CHECK(raw == sys.F[0] * sys.stripped[0].scale);
  CHECK(sys.F[0].multidegree() == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("export system lists the torus and one polynomial per player") {
  auto sys = nash_ci_system(Partition::from_sizes({2, 2}), example_4player());
  std::string text = export_system(sys);
  CHECK(text.find("vars s12_11") == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
