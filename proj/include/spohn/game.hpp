#ifndef SPOHN_GAME_HPP
#define SPOHN_GAME_HPP

#include <array>
#include <string>
#include <vector>

#include "spohn/polyring.hpp"

namespace spohn {

// Normal-form game: n players, per-player strategy counts d_i >= 2, one dense
// rational payoff tensor per player. Tensors are flattened with player 1 as
// the slowest-varying index, strategies 1-based.
class Game {
 public:
  Game(std::vector<int> choices, std::vector<std::vector<Rational>> payoffs);

  int player_count() const { return static_cast<int>(choices_.size()); }
  const std::vector<int>& choices() const { return choices_; }
  bool is_binary() const;
  long profile_count() const { return profile_count_; }

  const std::vector<Rational>& payoff_tensor(int player) const;  // 1-based
  const Rational& payoff(int player, const std::vector<int>& profile) const;

  long flat_index(const std::vector<int>& profile) const;
  std::vector<int> unflatten(long index) const;

 private:
  std::vector<int> choices_;
  std::vector<std::vector<Rational>> payoffs_;
  long profile_count_;
};

// Probability table over strategy profiles, same flattening as Game.
template <typename Scalar>
struct BasicDistribution {
  std::vector<Scalar> p;
};
using Distribution = BasicDistribution<double>;
using ExactDistribution = BasicDistribution<Rational>;

template <typename Scalar>
Scalar expected_payoff(const Game& g, const BasicDistribution<Scalar>& dist, int player);

// Expected payoff of `player` conditioned on them playing `strategy`.
// Refuses boundary distributions (zero marginal).
template <typename Scalar>
Scalar conditional_expected_payoff(const Game& g, const BasicDistribution<Scalar>& dist,
                                   int player, int strategy);

template <typename Scalar>
std::vector<Scalar> payoff_map(const Game& g, const BasicDistribution<Scalar>& dist);

// Variable table of the ambient p-coordinates p_{j_1...j_n}.
VarTablePtr probability_table(const Game& g);
std::string p_var_name(const std::vector<int>& profile);

// Spohn matrix M_i: d_i x 2 matrix of linear forms in the p-variables;
// column 1 holds the marginals p_{+...+k+...+}, column 2 the payoff-weighted
// forms, rows indexed by the strategy k of `player`.
std::vector<std::array<Polynomial, 2>> spohn_matrix(const Game& g, int player,
                                                    const VarTablePtr& ptab);

// All 2x2 minors of M_1, ..., M_n; for a binary game, one quadric per player.
std::vector<Polynomial> spohn_minors(const Game& g, const VarTablePtr& ptab);

}  // namespace spohn

#endif
