#include "spohn/spohnci.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spohn {

namespace {

void require_binary(const Game& game) {
  if (!game.is_binary())
    throw std::invalid_argument("torus polynomial systems are defined for binary games only");
}

// Exponent vector of prod_{c in cliques} s^(c)_{assignment|c} for a strategy
// assignment given per vertex (1-based, 0 = unassigned).
ExpVec clique_monomial(const ParamMap& pm, const std::vector<int>& clique_ids,
                       const std::vector<int>& strategy_of_vertex) {
  ExpVec e(pm.torus->size(), 0);
  for (int c : clique_ids) {
    std::vector<int> jc;
    jc.reserve(pm.cliques[c].size());
    for (int v : pm.cliques[c]) {
      int s = strategy_of_vertex[v - 1];
      if (s < 1) throw std::logic_error("unassigned vertex in clique monomial");
      jc.push_back(s);
    }
    e[pm.torus_var(c, jc)] += 1;
  }
  return e;
}

// All strategy assignments of the given vertices, in lexicographic order.
void for_each_assignment(const std::vector<int>& vertices,
                         const std::function<void(const std::vector<int>&)>& visit,
                         std::vector<int>& strategy_of_vertex, size_t depth = 0) {
  if (depth == vertices.size()) {
    visit(strategy_of_vertex);
    return;
  }
  for (int s = 1; s <= 2; ++s) {
    strategy_of_vertex[vertices[depth] - 1] = s;
    for_each_assignment(vertices, visit, strategy_of_vertex, depth + 1);
  }
  strategy_of_vertex[vertices[depth] - 1] = 0;
}

ExpVec image_without_block(const ParamMap& pm, long w, int block) {
  ExpVec e = pm.image[w];
  for (int var : pm.torus->block_vars(block)) e[var] = 0;
  return e;
}

// Raw (unnormalized) F_i after structural factor stripping; linear in the
// payoff tensor.
Polynomial raw_player_polynomial(const ParamMap& pm, int player,
                                 const std::vector<Rational>& tensor,
                                 StrippedFactors* factors) {
  const Graph& g = pm.graph;
  int n = g.vertex_count();
  long profiles = 1L << n;
  if (static_cast<long>(tensor.size()) != profiles)
    throw std::invalid_argument("payoff tensor size mismatch");

  auto comps = g.components();
  std::vector<int> comp_i;
  for (auto& c : comps)
    if (std::find(c.begin(), c.end(), player) != c.end()) comp_i = c;
  bool isolated = comp_i.size() == 1;

  std::vector<int> own_cliques, other_cliques;
  for (size_t c = 0; c < pm.cliques.size(); ++c) {
    bool inside = std::find(comp_i.begin(), comp_i.end(), pm.cliques[c][0]) != comp_i.end();
    (inside ? own_cliques : other_cliques).push_back(static_cast<int>(c));
  }
  int own_block = -1;
  if (isolated) {
    for (int c : own_cliques)
      if (pm.cliques[c].size() == 1 && pm.cliques[c][0] == player) own_block = c;
  }

  std::vector<int> outside_vertices;
  for (int v = 1; v <= n; ++v)
    if (std::find(comp_i.begin(), comp_i.end(), v) == comp_i.end()) outside_vertices.push_back(v);

  if (factors) {
    factors->isolated = isolated;
    // Factor pulled out of the first column: the sum over the strategies of
    // the other components of the product over their cliques.
    if (outside_vertices.empty()) {
      factors->component_factor = Polynomial::constant(pm.torus, 1);
    } else {
      std::vector<Term> terms;
      std::vector<int> assign(n, 0);
      for_each_assignment(outside_vertices, [&](const std::vector<int>& a) {
        terms.push_back({clique_monomial(pm, other_cliques, a), Rational(1)});
      }, assign);
      factors->component_factor = Polynomial::from_terms(pm.torus, std::move(terms));
    }
    if (isolated) {
      ExpVec e(pm.torus->size(), 0);
      e[pm.torus_var(own_block, {1})] = 1;
      e[pm.torus_var(own_block, {2})] = 1;
      factors->isolated_factor = Polynomial::monomial(pm.torus, e, 1);
    } else {
      factors->isolated_factor = Polynomial::constant(pm.torus, 1);
    }
  }

  if (isolated) {
    std::vector<Term> terms;
    for (long w = 0; w < profiles; ++w) {
      if (tensor[w] == 0) continue;
      int a = static_cast<int>((w >> (n - player)) & 1) + 1;
      terms.push_back({image_without_block(pm, w, own_block),
                       a == 2 ? tensor[w] : -tensor[w]});
    }
    return Polynomial::from_terms(pm.torus, std::move(terms));
  }

  std::vector<int> comp_minus_i;
  for (int v : comp_i)
    if (v != player) comp_minus_i.push_back(v);

  std::array<Polynomial, 2> col1 = {Polynomial::zero(pm.torus), Polynomial::zero(pm.torus)};
  for (int a = 1; a <= 2; ++a) {
    std::vector<Term> terms;
    std::vector<int> assign(n, 0);
    assign[player - 1] = a;
    for_each_assignment(comp_minus_i, [&](const std::vector<int>& full) {
      terms.push_back({clique_monomial(pm, own_cliques, full), Rational(1)});
    }, assign);
    assign[player - 1] = 0;
    col1[a - 1] = Polynomial::from_terms(pm.torus, std::move(terms));
  }

  std::array<std::vector<Term>, 2> col2_terms;
  for (long w = 0; w < profiles; ++w) {
    if (tensor[w] == 0) continue;
    int a = static_cast<int>((w >> (n - player)) & 1) + 1;
    col2_terms[a - 1].push_back({pm.image[w], tensor[w]});
  }
  Polynomial col2_1 = Polynomial::from_terms(pm.torus, std::move(col2_terms[0]));
  Polynomial col2_2 = Polynomial::from_terms(pm.torus, std::move(col2_terms[1]));

  return col1[0] * col2_2 - col2_1 * col1[1];
}

}  // namespace

namespace {

// The prescribed multidegree: 2 in the blocks of the player's component, 1
// elsewhere; 0 in the own block for an isolated vertex.
void check_multidegree(const ParamMap& pm, int player, const Polynomial& f) {
  if (f.is_zero()) return;  // degenerate payoff table
  auto comps = pm.graph.components();
  std::vector<int> comp_i;
  for (auto& c : comps)
    if (std::find(c.begin(), c.end(), player) != c.end()) comp_i = c;
  std::vector<int> want(pm.cliques.size(), 0);
  for (size_t c = 0; c < pm.cliques.size(); ++c) {
    bool inside = std::find(comp_i.begin(), comp_i.end(), pm.cliques[c][0]) != comp_i.end();
    want[c] = comp_i.size() == 1 ? (inside ? 0 : 1) : (inside ? 2 : 1);
  }
  if (f.multidegree() != want)
    throw std::logic_error("internal inconsistency: player polynomial has the wrong multidegree");
}

}  // namespace

Polynomial player_polynomial(const ParamMap& pm, const std::vector<int>& choices, int player,
                             const std::vector<Rational>& tensor, Rational* scale,
                             StrippedFactors* factors) {
  for (int d : choices)
    if (d != 2) throw std::invalid_argument("binary game required");
  Polynomial raw = raw_player_polynomial(pm, player, tensor, factors);
  Rational s;
  Polynomial f = raw.primitive(&s);
  check_multidegree(pm, player, f);
  if (scale) *scale = s;
  if (factors) factors->scale = s;
  return f;
}

SpohnCISystem build_system(const Graph& g, const Game& game) {
  require_binary(game);
  if (game.player_count() != g.vertex_count())
    throw std::invalid_argument("graph and game disagree on the number of players");
  SpohnCISystem sys{g, game, param_map(g), {}, {}};
  for (int i = 1; i <= g.vertex_count(); ++i) {
    StrippedFactors sf;
    Rational scale;
    sys.F.push_back(player_polynomial(sys.pm, game.choices(), i, game.payoff_tensor(i), &scale, &sf));
    sys.stripped.push_back(std::move(sf));
  }
  return sys;
}

long expected_spohn_ci_dimension(const Graph& g) {
  return g.clique_complex_face_counts().second;
}

namespace {

Graph partition_graph(const Partition& part) {
  Graph g(part.player_count());
  for (auto& block : part.blocks)
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b) g.add_edge(block[a], block[b]);
  return g;
}

// Locates (block, position) of the player within the clique order of pm.
std::pair<int, int> locate_player(const ParamMap& pm, int player) {
  for (size_t c = 0; c < pm.cliques.size(); ++c) {
    auto& clique = pm.cliques[c];
    auto it = std::find(clique.begin(), clique.end(), player);
    if (it != clique.end())
      return {static_cast<int>(c), static_cast<int>(it - clique.begin()) + 1};
  }
  throw std::logic_error("player not found in any clique");
}

// Direct Segre-parametrization form of the determinant for a partition
// system; independent of the component machinery in raw_player_polynomial.
Polynomial raw_partition_polynomial(const ParamMap& pm, int player,
                                    const std::vector<Rational>& tensor) {
  int n = pm.graph.vertex_count();
  long profiles = 1L << n;
  auto [block, pos] = locate_player(pm, player);
  const auto& clique = pm.cliques[block];
  int ni = static_cast<int>(clique.size());

  if (ni == 1) {
    std::vector<Term> terms;
    for (long w = 0; w < profiles; ++w) {
      if (tensor[w] == 0) continue;
      int a = static_cast<int>((w >> (n - player)) & 1) + 1;
      terms.push_back({image_without_block(pm, w, block), a == 2 ? tensor[w] : -tensor[w]});
    }
    return Polynomial::from_terms(pm.torus, std::move(terms));
  }

  std::array<Polynomial, 2> col1 = {Polynomial::zero(pm.torus), Polynomial::zero(pm.torus)};
  for (int a = 1; a <= 2; ++a) {
    std::vector<Term> terms;
    for (long rest = 0; rest < (1L << (ni - 1)); ++rest) {
      std::vector<int> jc(ni);
      long r = rest;
      for (int t = ni - 1; t >= 0; --t) {
        if (t + 1 == pos) continue;
        jc[t] = static_cast<int>(r & 1) + 1;
        r >>= 1;
      }
      jc[pos - 1] = a;
      ExpVec e(pm.torus->size(), 0);
      e[pm.torus_var(block, jc)] = 1;
      terms.push_back({std::move(e), Rational(1)});
    }
    col1[a - 1] = Polynomial::from_terms(pm.torus, std::move(terms));
  }

  std::array<std::vector<Term>, 2> col2_terms;
  for (long w = 0; w < profiles; ++w) {
    if (tensor[w] == 0) continue;
    int a = static_cast<int>((w >> (n - player)) & 1) + 1;
    col2_terms[a - 1].push_back({pm.image[w], tensor[w]});
  }
  Polynomial col2_1 = Polynomial::from_terms(pm.torus, std::move(col2_terms[0]));
  Polynomial col2_2 = Polynomial::from_terms(pm.torus, std::move(col2_terms[1]));
  return col1[0] * col2_2 - col2_1 * col1[1];
}

}  // namespace

SpohnCISystem nash_ci_system(const Partition& part, const Game& game) {
  require_binary(game);
  if (game.player_count() != part.player_count())
    throw std::invalid_argument("partition and game disagree on the number of players");
  Graph g = partition_graph(part);
  SpohnCISystem sys{g, game, param_map(g), {}, {}};
  for (int i = 1; i <= game.player_count(); ++i) {
    Polynomial raw = raw_partition_polynomial(sys.pm, i, game.payoff_tensor(i));
    StrippedFactors sf;
    auto [block, pos] = locate_player(sys.pm, i);
    sf.isolated = sys.pm.cliques[block].size() == 1;
    // For a partition the cliques of the other components are disjoint, so
    // the pulled-out factor is the product of the block sums.
    Polynomial cf = Polynomial::constant(sys.pm.torus, 1);
    for (size_t c = 0; c < sys.pm.cliques.size(); ++c) {
      if (static_cast<int>(c) == block) continue;
      Polynomial block_sum = Polynomial::zero(sys.pm.torus);
      for (int var : sys.pm.torus->block_vars(static_cast<int>(c)))
        block_sum = block_sum + Polynomial::variable(sys.pm.torus, var);
      cf = cf * block_sum;
    }
    sf.component_factor = sys.pm.cliques.size() > 1 ? cf : Polynomial::constant(sys.pm.torus, 1);
    if (sf.isolated) {
      ExpVec e(sys.pm.torus->size(), 0);
      e[sys.pm.torus_var(block, {1})] = 1;
      e[sys.pm.torus_var(block, {2})] = 1;
      sf.isolated_factor = Polynomial::monomial(sys.pm.torus, e, 1);
    } else {
      sf.isolated_factor = Polynomial::constant(sys.pm.torus, 1);
    }
    sys.F.push_back(raw.primitive(&sf.scale));
    check_multidegree(sys.pm, i, sys.F.back());
    sys.stripped.push_back(std::move(sf));
  }
  return sys;
}

long expected_nash_ci_dimension(const Partition& part) {
  long sum = 0;
  int k = static_cast<int>(part.blocks.size());
  for (auto& b : part.blocks) sum += 1L << b.size();
  return sum - k - part.player_count();
}

std::vector<Polynomial> w_system_generators(const Partition& part, const ParamMap& pm,
                                            int block, int l) {
  const auto& clique = pm.cliques.at(block);
  int ni = static_cast<int>(clique.size());
  if (part.blocks.at(block).size() != clique.size())
    throw std::invalid_argument("partition and parametrization disagree on the block");
  if (l < 1 || l > ni) throw std::invalid_argument("player position out of range");
  if (ni < 2)
    throw std::invalid_argument("W system undefined for singleton blocks: the system is complete");

  auto block_var = [&](long rest, int a) {
    std::vector<int> jc(ni);
    long r = rest;
    for (int t = ni - 1; t >= 0; --t) {
      if (t + 1 == l) continue;
      jc[t] = static_cast<int>(r & 1) + 1;
      r >>= 1;
    }
    jc[l - 1] = a;
    return pm.torus_var(block, jc);
  };
  long half = 1L << (ni - 1);

  auto var_poly = [&](int v) { return Polynomial::variable(pm.torus, v); };
  Polynomial sum1 = Polynomial::zero(pm.torus), sum2 = Polynomial::zero(pm.torus);
  for (long rest = 0; rest < half; ++rest) {
    sum1 = sum1 + var_poly(block_var(rest, 1));
    sum2 = sum2 + var_poly(block_var(rest, 2));
  }

  std::vector<Polynomial> gens;
  for (long rest = 0; rest < half; ++rest) gens.push_back(var_poly(block_var(rest, 1)) * sum2);
  for (long rest = 0; rest < half; ++rest) gens.push_back(var_poly(block_var(rest, 2)) * sum1);
  Polynomial third = var_poly(block_var(0, 1)) * var_poly(block_var(0, 2));
  for (long j = 1; j < half; ++j)
    for (long m = 1; m < half; ++m)
      third = third - var_poly(block_var(j, 1)) * var_poly(block_var(m, 2));
  gens.push_back(third);
  return gens;
}

PreimageResult solve_payoff_preimage(const Partition& part, const Game& shape, int block, int l,
                                     const Polynomial& target) {
  require_binary(shape);
  Graph g = partition_graph(part);
  ParamMap pm = param_map(g);
  if (!target.table()->same_as(*pm.torus))
    throw std::invalid_argument("target polynomial is not over the partition torus");
  int player = part.blocks.at(block).at(l - 1);
  int n = part.player_count();
  long profiles = 1L << n;

  // phi(e_w) for each tensor basis element.
  std::vector<Polynomial> columns;
  columns.reserve(profiles);
  std::vector<Rational> unit(profiles, Rational(0));
  for (long w = 0; w < profiles; ++w) {
    unit[w] = 1;
    columns.push_back(raw_partition_polynomial(pm, player, unit));
    unit[w] = 0;
  }

  // Row space: all monomials seen across the columns and the target.
  std::map<ExpVec, int> row_of;
  auto note_rows = [&](const Polynomial& p) {
    for (const auto& t : p.terms())
      if (!row_of.count(t.exps)) {
        int id = static_cast<int>(row_of.size());
        row_of[t.exps] = id;
      }
  };
  for (auto& c : columns) note_rows(c);
  size_t phi_rows = row_of.size();
  note_rows(target);

  size_t rows = row_of.size(), cols = profiles;
  std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, Rational(0)));
  std::vector<Rational> b(rows, Rational(0));
  for (long w = 0; w < profiles; ++w)
    for (const auto& t : columns[w].terms()) A[row_of[t.exps]][w] = t.coef;
  for (const auto& t : target.terms()) b[row_of[t.exps]] = t.coef;

  // Target monomials outside the image support cannot be matched.
  if (phi_rows < rows) {
    PreimageResult fail;
    for (auto& [e, r] : row_of)
      if (static_cast<size_t>(r) >= phi_rows)
        fail.residual_support.push_back(Polynomial::monomial(pm.torus, e, 1).to_string());
    return fail;
  }

  // Exact Gaussian elimination with free variables pinned to zero. Columns
  // are scanned from the all-2 profile downward so the canonical preimages
  // (indicator tables at high-index profiles) come out when they exist.
  std::vector<int> pivot_col_of_row(rows, -1);
  size_t rank = 0;
  for (size_t ci = 0; ci < cols && rank < rows; ++ci) {
    size_t c = cols - 1 - ci;
    size_t piv = rank;
    while (piv < rows && A[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[rank], A[piv]);
    std::swap(b[rank], b[piv]);
    Rational inv = A[rank][c];
    for (size_t cc = 0; cc < cols; ++cc) A[rank][cc] /= inv;
    b[rank] /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      Rational f = A[r][c];
      for (size_t cc = 0; cc < cols; ++cc) A[r][cc] -= f * A[rank][cc];
      b[r] -= f * b[rank];
    }
    pivot_col_of_row[rank] = static_cast<int>(c);
    ++rank;
  }
  std::vector<Rational> tensor(profiles, Rational(0));
  for (size_t r = 0; r < rank; ++r) tensor[pivot_col_of_row[r]] = b[r];

  // Round trip, exact; a nonzero residual means the target is outside the
  // image of phi.
  Polynomial check = raw_partition_polynomial(pm, player, tensor);
  if (!(check == target)) {
    PreimageResult fail;
    for (const auto& t : (check - target).terms())
      fail.residual_support.push_back(Polynomial::monomial(pm.torus, t.exps, 1).to_string());
    return fail;
  }
  PreimageResult ok;
  ok.tensor = std::move(tensor);
  return ok;
}

std::string export_system(const SpohnCISystem& sys) {
  std::ostringstream os;
  os << "vars";
  for (const auto& name : sys.pm.torus->names()) os << " " << name;
  os << "\n";
  for (const auto& f : sys.F) os << f.to_string() << "\n";
  return os.str();
}

}  // namespace spohn
