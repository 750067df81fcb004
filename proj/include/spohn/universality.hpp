#ifndef SPOHN_UNIVERSALITY_HPP
#define SPOHN_UNIVERSALITY_HPP

#include <string>
#include <vector>

#include "spohn/game.hpp"
#include "spohn/graph.hpp"
#include "spohn/spohnci.hpp"

namespace spohn {

struct LiftVerification {
  bool appended_forms_match = false;  // recomputed appended F's equal the targets
  bool base_forms_match = false;      // first F's equal the base system under renaming
  bool appended_vars_absent = false;  // base F's lose all appended variables on the chart
  std::vector<std::string> notes;
  bool ok() const { return appended_forms_match && base_forms_match && appended_vars_absent; }
};

struct LiftResult {
  Game lifted;
  Partition partition;
  std::vector<Polynomial> targets;  // homogeneous appended forms, one per appended player
  LiftVerification report;
};

// Extends an n-player binary game by l cliques of two players whose
// polynomials pin the appended blocks to lines: the solution chart becomes
// the base solution set times affine l-space. The appended payoff tables are
// recovered by inverting the payoff-to-divisor map.
LiftResult lift_game(const Game& base, int l);

// Drops the last l players of a base game whose trailing payoff tables
// vanish and appends l two-player cliques, keeping the solution set: the
// chart of the lifted system is isomorphic to the base variety. `n` and `m`
// describe the realized variety (m defining polynomials in n coordinates);
// the construction requires m <= n - l and the last n-m tables of the base
// to vanish.
LiftResult embed_variety(const Game& base, int l, int m, int n);

}  // namespace spohn

#endif
