#include <doctest.h>

#include <cmath>

#include "spohn/builtins.hpp"
#include "spohn/numeric.hpp"
#include "spohn/universality.hpp"

using namespace spohn;

TEST_CASE("l = 0 returns the base game unchanged") {
  Game base = random_binary_game(3, 17);
  auto lifted = lift_game(base, 0);
  CHECK(lifted.lifted.player_count() == 3);
  for (int i = 1; i <= 3; ++i) CHECK(lifted.lifted.payoff_tensor(i) == base.payoff_tensor(i));
  CHECK(lifted.report.ok());
}

TEST_CASE("lift by one clique verifies the recomputation identity") {
  Game base = random_binary_game(3, 23);
  auto result = lift_game(base, 1);
  CHECK(result.lifted.player_count() == 5);
  CHECK(result.partition.sizes() == std::vector<int>{1, 1, 1, 2});
  CHECK(result.report.appended_forms_match);
  CHECK(result.report.base_forms_match);
  CHECK(result.report.appended_vars_absent);
  REQUIRE(result.targets.size() == 2);
  // The targets pin the appended block to a line.
  auto deg0 = result.targets[0].multidegree();
  CHECK(deg0 == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("lift by two cliques") {
  Game base = random_binary_game(3, 29);
  auto result = lift_game(base, 2);
  CHECK(result.lifted.player_count() == 7);
  CHECK(result.report.ok());
  CHECK(result.targets.size() == 4);
}

TEST_CASE("appended payoff tables are the all-2 indicator") {
  // The preimage solver should find the minimal-support table: value 1 at
  // the all-strategy-2 profile.
  Game base = random_binary_game(2, 5);
  auto result = lift_game(base, 1);
  const auto& tensor = result.lifted.payoff_tensor(3);
  long all_two = (1L << 4) - 1;
  for (long w = 0; w < static_cast<long>(tensor.size()); ++w) {
    if (w == all_two)
      CHECK(tensor[w] == 1);
    else
      CHECK(tensor[w] == 0);
  }
}

TEST_CASE("probe dimension grows by l") {
  Game base = random_binary_game(3, 101);
  SolveConfig base_cfg(7);
  base_cfg.starts = 80;
  base_cfg.start_lo = -3.0;
  base_cfg.start_hi = 3.0;
  auto base_probe = dimension_probe(Graph(3), base, base_cfg);
  CHECK(base_probe.dimension == 0);

  auto l1 = lift_game(base, 1);
  Graph g5(5, {{4, 5}});
  SolveConfig cfg1(8);
  cfg1.starts = 60;
  cfg1.probe_points = 3;
  auto probe1 = dimension_probe(g5, l1.lifted, cfg1);
  CHECK(probe1.dimension == base_probe.dimension + 1);
}

TEST_CASE("embed_variety checks its hypotheses") {
  Game base = random_binary_game(3, 41);
  CHECK_THROWS(static_cast<void>(embed_variety(base, 1, 3, 3)));  // m > n - l
  // Trailing tables must vanish.
  CHECK_THROWS(static_cast<void>(embed_variety(base, 1, 2, 3)));
}

TEST_CASE("embed_variety drops trailing zero tables and appends cliques") {
  // Base game crafted so the two surviving chart equations become
  // x2 - 2 = 0 and x1 - 3 = 0: the embedded solution set is a single
  // off-hyperplane point times the appended line.
  std::vector<std::vector<Rational>> tensors(3, std::vector<Rational>(8, Rational(0)));
  auto idx = [](int j1, int j2, int j3) { return (j1 - 1) * 4 + (j2 - 1) * 2 + (j3 - 1); };
  tensors[0][idx(2, 1, 2)] = 1;
  tensors[0][idx(2, 2, 2)] = -2;
  tensors[1][idx(1, 2, 2)] = 1;
  tensors[1][idx(2, 2, 2)] = -3;
  Game base(std::vector<int>(3, 2), std::move(tensors));

  auto result = embed_variety(base, 1, 2, 3);
  CHECK(result.lifted.player_count() == 4);  // 3 - 1 singles + one 2-clique
  CHECK(result.partition.sizes() == std::vector<int>{1, 1, 2});
  CHECK(result.report.ok());

  // m = n - l boundary is accepted.
  auto boundary = embed_variety(base, 1, 2, 3);
  CHECK(boundary.report.ok());

  // l = 0 is the identity.
  auto identity = embed_variety(base, 0, 2, 3);
  CHECK(identity.lifted.player_count() == 3);

  // The embedded system keeps the base solutions: probe the lifted graph.
  Graph g4(4, {{3, 4}});
  SolveConfig cfg(11);
  cfg.starts = 60;
  cfg.probe_points = 3;
  auto probe = dimension_probe(g4, result.lifted, cfg);
  // Base part: 2 equations in 2 chart coordinates (players 1, 2) leaves
  // dimension 0; the appended clique contributes the line.
  CHECK(probe.dimension == 1);
}
