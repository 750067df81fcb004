#ifndef SPOHN_SPOHNCI_HPP
#define SPOHN_SPOHNCI_HPP

#include <optional>
#include <vector>

#include "spohn/cimodel.hpp"
#include "spohn/game.hpp"
#include "spohn/graph.hpp"
#include "spohn/polyring.hpp"

namespace spohn {

// What was removed from the raw evaluated minor of player i before arriving
// at F_i. raw = scale * component_factor * isolated_factor * F_i, exactly.
struct StrippedFactors {
  bool isolated = false;
  Polynomial component_factor;  // constant 1 when the player's component is the whole graph
  Polynomial isolated_factor;   // s^(i)_1 * s^(i)_2 for isolated vertices, else 1
  Rational scale = 1;
};

// The torus polynomial system F_1, ..., F_n of a binary game on a graph.
// Each F_i is multihomogeneous with degree 2 in the blocks of the cliques of
// player i's component and degree 1 elsewhere (0 in the own block for an
// isolated vertex), stored in primitive integer form.
struct SpohnCISystem {
  Graph graph;
  Game game;
  ParamMap pm;
  std::vector<Polynomial> F;               // one per player
  std::vector<StrippedFactors> stripped;   // one per player
};

SpohnCISystem build_system(const Graph& g, const Game& game);

// Number of cliques of g with at least two vertices.
long expected_spohn_ci_dimension(const Graph& g);

// Direct Segre-parametrization construction for disjoint-clique graphs;
// agrees with build_system on the corresponding graph.
SpohnCISystem nash_ci_system(const Partition& part, const Game& game);

long expected_nash_ci_dimension(const Partition& part);

// Generators of the linear system W_{(i,l)} as quadrics in the block-i torus
// variables (degree 0 elsewhere). Requires n_i >= 2; l is 1-based within the
// block.
std::vector<Polynomial> w_system_generators(const Partition& part, const ParamMap& pm,
                                            int block, int l);

struct PreimageResult {
  std::optional<std::vector<Rational>> tensor;  // flat payoff tensor on success
  std::vector<std::string> residual_support;    // monomials blocking an exact solve
};

// Inverts the linear map sending a payoff table of player (block, l) to its
// F polynomial. Free variables are set to zero; the round trip is verified
// exactly.
PreimageResult solve_payoff_preimage(const Partition& part, const Game& shape, int block, int l,
                                     const Polynomial& target);

// F polynomial of a single player from an explicit payoff tensor; used by the
// preimage solver and the universality lifts.
Polynomial player_polynomial(const ParamMap& pm, const std::vector<int>& choices, int player,
                             const std::vector<Rational>& tensor, Rational* scale = nullptr,
                             StrippedFactors* factors = nullptr);

std::string export_system(const SpohnCISystem& sys);

}  // namespace spohn

#endif
