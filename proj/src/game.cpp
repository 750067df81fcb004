#include "spohn/game.hpp"

#include <array>
#include <stdexcept>

namespace spohn {

Game::Game(std::vector<int> choices, std::vector<std::vector<Rational>> payoffs)
    : choices_(std::move(choices)), payoffs_(std::move(payoffs)) {
  if (choices_.size() < 2) throw std::invalid_argument("a game needs at least 2 players");
  profile_count_ = 1;
  for (int d : choices_) {
    if (d < 2) throw std::invalid_argument("each player needs at least 2 strategies");
    profile_count_ *= d;
  }
  if (payoffs_.size() != choices_.size())
    throw std::invalid_argument("one payoff tensor per player required");
  for (auto& t : payoffs_)
    if (static_cast<long>(t.size()) != profile_count_)
      throw std::invalid_argument("payoff tensor has wrong number of entries");
}

bool Game::is_binary() const {
  for (int d : choices_)
    if (d != 2) return false;
  return true;
}

const std::vector<Rational>& Game::payoff_tensor(int player) const {
  if (player < 1 || player > player_count()) throw std::invalid_argument("player out of range");
  return payoffs_[player - 1];
}

long Game::flat_index(const std::vector<int>& profile) const {
  if (profile.size() != choices_.size()) throw std::invalid_argument("profile length mismatch");
  long idx = 0;
  for (size_t i = 0; i < profile.size(); ++i) {
    if (profile[i] < 1 || profile[i] > choices_[i])
      throw std::invalid_argument("strategy out of range in profile");
    idx = idx * choices_[i] + (profile[i] - 1);
  }
  return idx;
}

std::vector<int> Game::unflatten(long index) const {
  std::vector<int> profile(choices_.size());
  for (int i = player_count() - 1; i >= 0; --i) {
    profile[i] = static_cast<int>(index % choices_[i]) + 1;
    index /= choices_[i];
  }
  return profile;
}

const Rational& Game::payoff(int player, const std::vector<int>& profile) const {
  return payoff_tensor(player)[flat_index(profile)];
}

template <typename Scalar>
static void check_shape(const Game& g, const BasicDistribution<Scalar>& dist) {
  if (static_cast<long>(dist.p.size()) != g.profile_count())
    throw std::invalid_argument("distribution shape does not match the game");
}

template <typename Scalar>
Scalar expected_payoff(const Game& g, const BasicDistribution<Scalar>& dist, int player) {
  check_shape(g, dist);
  const auto& tensor = g.payoff_tensor(player);
  Scalar sum{};
  for (long w = 0; w < g.profile_count(); ++w) {
    if constexpr (std::is_same_v<Scalar, double>)
      sum += to_double(tensor[w]) * dist.p[w];
    else
      sum += tensor[w] * dist.p[w];
  }
  return sum;
}

template <typename Scalar>
Scalar conditional_expected_payoff(const Game& g, const BasicDistribution<Scalar>& dist,
                                   int player, int strategy) {
  check_shape(g, dist);
  if (player < 1 || player > g.player_count()) throw std::invalid_argument("player out of range");
  if (strategy < 1 || strategy > g.choices()[player - 1])
    throw std::invalid_argument("strategy out of range");
  const auto& tensor = g.payoff_tensor(player);
  Scalar num{}, marginal{};
  for (long w = 0; w < g.profile_count(); ++w) {
    auto profile = g.unflatten(w);
    if (profile[player - 1] != strategy) continue;
    marginal += dist.p[w];
    if constexpr (std::is_same_v<Scalar, double>)
      num += to_double(tensor[w]) * dist.p[w];
    else
      num += tensor[w] * dist.p[w];
  }
  bool zero_marginal;
  if constexpr (std::is_same_v<Scalar, double>)
    zero_marginal = marginal == 0.0;
  else
    zero_marginal = marginal == 0;
  if (zero_marginal)
    throw std::domain_error("boundary distribution: zero marginal for the conditioning strategy");
  return num / marginal;
}

template <typename Scalar>
std::vector<Scalar> payoff_map(const Game& g, const BasicDistribution<Scalar>& dist) {
  std::vector<Scalar> out;
  out.reserve(g.player_count());
  for (int i = 1; i <= g.player_count(); ++i) out.push_back(expected_payoff(g, dist, i));
  return out;
}

template double expected_payoff(const Game&, const Distribution&, int);
template Rational expected_payoff(const Game&, const ExactDistribution&, int);
template double conditional_expected_payoff(const Game&, const Distribution&, int, int);
template Rational conditional_expected_payoff(const Game&, const ExactDistribution&, int, int);
template std::vector<double> payoff_map(const Game&, const Distribution&);
template std::vector<Rational> payoff_map(const Game&, const ExactDistribution&);

std::string p_var_name(const std::vector<int>& profile) {
  std::string name = "p";
  for (int j : profile) {
    if (j < 1 || j > 9) throw std::invalid_argument("p-variable naming supports strategies 1..9");
    name += static_cast<char>('0' + j);
  }
  return name;
}

VarTablePtr probability_table(const Game& g) {
  std::vector<std::string> names;
  names.reserve(g.profile_count());
  for (long w = 0; w < g.profile_count(); ++w) names.push_back(p_var_name(g.unflatten(w)));
  return std::make_shared<VarTable>(std::move(names));
}

std::vector<std::array<Polynomial, 2>> spohn_matrix(const Game& g, int player,
                                                    const VarTablePtr& ptab) {
  if (player < 1 || player > g.player_count()) throw std::invalid_argument("player out of range");
  int d = g.choices()[player - 1];
  std::vector<std::array<Polynomial, 2>> rows(
      d, {Polynomial::zero(ptab), Polynomial::zero(ptab)});
  const auto& tensor = g.payoff_tensor(player);
  for (long w = 0; w < g.profile_count(); ++w) {
    auto profile = g.unflatten(w);
    int k = profile[player - 1];
    Polynomial pv = Polynomial::variable(ptab, static_cast<int>(w));
    rows[k - 1][0] = rows[k - 1][0] + pv;
    if (tensor[w] != 0) rows[k - 1][1] = rows[k - 1][1] + pv * tensor[w];
  }
  return rows;
}

std::vector<Polynomial> spohn_minors(const Game& g, const VarTablePtr& ptab) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= g.player_count(); ++i) {
    auto rows = spohn_matrix(g, i, ptab);
    for (size_t r = 0; r < rows.size(); ++r)
      for (size_t s = r + 1; s < rows.size(); ++s)
        out.push_back(det2({rows[r][0], rows[r][1], rows[s][0], rows[s][1]}));
  }
  return out;
}

}  // namespace spohn
