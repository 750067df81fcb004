#include "spohn/universality.hpp"

#include <algorithm>
#include <stdexcept>

namespace spohn {

namespace {

// Partition (1,...,1, 2,...,2) with `singles` singletons then `pairs` cliques.
Partition singles_then_pairs(int singles, int pairs) {
  std::vector<int> sizes(singles, 1);
  sizes.insert(sizes.end(), pairs, 2);
  return Partition::from_sizes(sizes);
}

// Homogeneous appended targets for clique block c of the partition torus:
// position 1 carries (s11 + s12) s22, position 2 carries (s11 + s21) s22,
// both times the all-2 variable of every other block. These are the unique
// homogeneous forms in the image of phi whose chart restrictions are the
// desired linear forms.
Polynomial appended_target(const ParamMap& pm, int clique_block, int position) {
  ExpVec base(pm.torus->size(), 0);
  for (size_t c = 0; c < pm.cliques.size(); ++c)
    if (static_cast<int>(c) != clique_block) base[pm.all_two_var(static_cast<int>(c))] = 1;
  base[pm.torus_var(clique_block, {2, 2})] += 1;

  ExpVec t1 = base, t2 = base;
  t1[pm.torus_var(clique_block, {1, 1})] += 1;
  if (position == 1)
    t2[pm.torus_var(clique_block, {1, 2})] += 1;
  else
    t2[pm.torus_var(clique_block, {2, 1})] += 1;
  return Polynomial::monomial(pm.torus, t1, 1) + Polynomial::monomial(pm.torus, t2, 1);
}

// Extends a base tensor to `extra` appended players: the entry survives only
// when every appended player plays strategy 2. Base players past
// `kept_players` are pinned to strategy 2 and dropped from the index.
std::vector<Rational> extend_tensor(const std::vector<Rational>& base_tensor, int base_players,
                                    int kept_players, int extra) {
  long out_size = 1L << (kept_players + extra);
  std::vector<Rational> out(out_size, Rational(0));
  long extra_mask = (1L << extra) - 1;
  for (long w = 0; w < out_size; ++w) {
    if ((w & extra_mask) != extra_mask) continue;  // appended players not all on strategy 2
    long kept_bits = w >> extra;
    // Frozen players contribute strategy 2, i.e. low bits set.
    long base_index = kept_bits << (base_players - kept_players);
    base_index |= (1L << (base_players - kept_players)) - 1;
    out[w] = base_tensor[base_index];
  }
  return out;
}

LiftVerification verify_lift(const SpohnCISystem& base_sys, int kept_players,
                             const SpohnCISystem& lifted_sys,
                             const std::vector<Polynomial>& targets) {
  LiftVerification rep;
  const ParamMap& lpm = lifted_sys.pm;
  int n_lift = lifted_sys.game.player_count();
  int appended = n_lift - kept_players;

  rep.appended_forms_match = true;
  for (int j = 0; j < appended; ++j) {
    const Polynomial& f = lifted_sys.F[kept_players + j];
    if (!f.proportional_to(targets[j])) {
      rep.appended_forms_match = false;
      rep.notes.push_back("appended player " + std::to_string(kept_players + j + 1) +
                          " polynomial differs from its target form");
    }
  }

  // Expected first-block polynomials: base raw F (with dropped base players'
  // chart variables pinned) times the all-2 variables of the appended blocks.
  int base_players = base_sys.game.player_count();
  const ParamMap& bpm = base_sys.pm;
  std::vector<Polynomial> images(bpm.torus->size(), Polynomial::zero(lpm.torus));
  for (int i = 0; i < base_players; ++i) {
    int v1 = bpm.torus_var(i, {1}), v2 = bpm.torus_var(i, {2});
    if (i < kept_players) {
      images[v1] = Polynomial::variable(lpm.torus, lpm.torus_var(i, {1}));
      images[v2] = Polynomial::variable(lpm.torus, lpm.torus_var(i, {2}));
    } else {
      images[v1] = Polynomial::zero(lpm.torus);
      images[v2] = Polynomial::constant(lpm.torus, 1);
    }
  }
  ExpVec pair_monom(lpm.torus->size(), 0);
  int pair_blocks = static_cast<int>(lpm.cliques.size()) - kept_players;
  for (int c = 0; c < pair_blocks; ++c)
    pair_monom[lpm.all_two_var(kept_players + c)] = 1;
  Polynomial pair_factor = Polynomial::monomial(lpm.torus, pair_monom, 1);

  rep.base_forms_match = true;
  rep.appended_vars_absent = true;
  for (int i = 0; i < kept_players; ++i) {
    Polynomial base_raw = base_sys.F[i] * base_sys.stripped[i].scale;
    Polynomial expected = base_raw.substitute(images) * pair_factor;
    Polynomial lifted_raw = lifted_sys.F[i] * lifted_sys.stripped[i].scale;
    if (!(lifted_raw == expected)) {
      rep.base_forms_match = false;
      rep.notes.push_back("player " + std::to_string(i + 1) +
                          " polynomial does not reduce to the base system");
    }
    // On the chart the appended blocks' variables must disappear entirely.
    std::vector<Polynomial> chart(lpm.torus->size(), Polynomial::zero(lpm.torus));
    for (int v = 0; v < lpm.torus->size(); ++v) chart[v] = Polynomial::variable(lpm.torus, v);
    for (size_t c = 0; c < lpm.cliques.size(); ++c)
      chart[lpm.all_two_var(static_cast<int>(c))] = Polynomial::constant(lpm.torus, 1);
    Polynomial on_chart = lifted_sys.F[i].substitute(chart);
    for (const auto& t : on_chart.terms())
      for (int v = 0; v < lpm.torus->size(); ++v)
        if (t.exps[v] > 0 && lpm.torus->block_of(v) >= kept_players) {
          rep.appended_vars_absent = false;
          rep.notes.push_back("player " + std::to_string(i + 1) +
                              " keeps appended-block variables on the chart");
        }
  }
  return rep;
}

LiftResult build_lift(const Game& base, int kept_players, int l) {
  int base_players = base.player_count();
  int lifted_players = kept_players + 2 * l;
  Partition part = singles_then_pairs(kept_players, l);

  std::vector<std::vector<Rational>> tensors;
  for (int i = 1; i <= kept_players; ++i)
    tensors.push_back(extend_tensor(base.payoff_tensor(i), base_players, kept_players, 2 * l));

  Graph g(lifted_players);
  for (int c = 0; c < l; ++c) g.add_edge(kept_players + 2 * c + 1, kept_players + 2 * c + 2);
  ParamMap pm = param_map(g);

  std::vector<Polynomial> targets;
  Game shape(std::vector<int>(lifted_players, 2),
             std::vector<std::vector<Rational>>(
                 lifted_players, std::vector<Rational>(1L << lifted_players, Rational(0))));
  for (int c = 0; c < l; ++c) {
    for (int pos = 1; pos <= 2; ++pos) {
      Polynomial target = appended_target(pm, kept_players + c, pos);
      targets.push_back(target);
      auto pre = solve_payoff_preimage(part, shape, kept_players + c, pos, target);
      if (!pre.tensor)
        throw std::logic_error("appended payoff preimage failed; the target must lie in the image");
      tensors.push_back(std::move(*pre.tensor));
    }
  }

  Game lifted(std::vector<int>(lifted_players, 2), std::move(tensors));
  SpohnCISystem lifted_sys = nash_ci_system(part, lifted);

  Graph base_graph(base_players);
  SpohnCISystem base_sys = build_system(base_graph, base);

  LiftResult result{std::move(lifted), std::move(part), std::move(targets), {}};
  result.report = verify_lift(base_sys, kept_players, lifted_sys, result.targets);
  return result;
}

}  // namespace

LiftResult lift_game(const Game& base, int l) {
  if (!base.is_binary()) throw std::invalid_argument("binary base game required");
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  if (l == 0) {
    LiftResult r{base, singles_then_pairs(base.player_count(), 0), {}, {}};
    r.report.appended_forms_match = true;
    r.report.base_forms_match = true;
    r.report.appended_vars_absent = true;
    return r;
  }
  return build_lift(base, base.player_count(), l);
}

LiftResult embed_variety(const Game& base, int l, int m, int n) {
  if (!base.is_binary()) throw std::invalid_argument("binary base game required");
  if (l < 0) throw std::invalid_argument("l must be non-negative");
  int base_players = base.player_count();
  if (n < 1 || n > base_players)
    throw std::invalid_argument("n must name the coordinate players of the base game");
  if (m > n - l)
    throw std::invalid_argument("hypothesis m <= n - l violated: n - m < l");
  for (int i = base_players - (n - m) + 1; i <= base_players; ++i)
    for (const auto& c : base.payoff_tensor(i))
      if (c != 0)
        throw std::invalid_argument("the last n - m payoff tables of the base game must vanish");
  if (l == 0) {
    LiftResult r{base, singles_then_pairs(base_players, 0), {}, {}};
    r.report.appended_forms_match = true;
    r.report.base_forms_match = true;
    r.report.appended_vars_absent = true;
    return r;
  }
  return build_lift(base, base_players - l, l);
}

}  // namespace spohn
