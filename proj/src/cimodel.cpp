#include "spohn/cimodel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "spohn/game.hpp"

namespace spohn {

namespace {

char vertex_char(int v) {
  if (v <= 9) return static_cast<char>('0' + v);
  return static_cast<char>('a' + (v - 10));
}

std::string sigma_name(const std::vector<int>& clique, const std::vector<int>& j) {
  std::string name = "s";
  for (int v : clique) name += vertex_char(v);
  name += "_";
  for (int b : j) name += static_cast<char>('0' + b);
  return name;
}

// Enumerates assignments in [2]^k (or general radices) as vectors, slowest
// first, matching the game's flattening.
std::vector<std::vector<int>> assignments(const std::vector<int>& radices) {
  long total = 1;
  for (int r : radices) total *= r;
  std::vector<std::vector<int>> out;
  out.reserve(total);
  for (long idx = 0; idx < total; ++idx) {
    std::vector<int> a(radices.size());
    long rest = idx;
    for (int i = static_cast<int>(radices.size()) - 1; i >= 0; --i) {
      a[i] = static_cast<int>(rest % radices[i]) + 1;
      rest /= radices[i];
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

int ParamMap::torus_var(int block, const std::vector<int>& j_restricted) const {
  const auto& clique = cliques[block];
  if (j_restricted.size() != clique.size())
    throw std::invalid_argument("restricted index length mismatch");
  int offset = 0;
  for (int b : j_restricted) {
    if (b < 1 || b > 2) throw std::invalid_argument("binary index expected");
    offset = offset * 2 + (b - 1);
  }
  return block_offset[block] + offset;
}

int ParamMap::all_two_var(int block) const {
  return block_offset[block] + (1 << cliques[block].size()) - 1;
}

Polynomial ParamMap::image_monomial(long p_index) const {
  return Polynomial::monomial(torus, image.at(p_index), Rational(1));
}

std::vector<Polynomial> ci_quadrics(const CIStatement& stmt, const std::vector<int>& choices,
                                    const VarTablePtr& ptab) {
  int n = static_cast<int>(choices.size());
  auto A = mask_to_vertices(stmt.A);
  auto B = mask_to_vertices(stmt.B);
  auto C = mask_to_vertices(stmt.C);
  for (int v : A)
    if (v > n) throw std::invalid_argument("CI statement vertex exceeds player count");
  for (int v : B)
    if (v > n) throw std::invalid_argument("CI statement vertex exceeds player count");
  for (int v : C)
    if (v > n) throw std::invalid_argument("CI statement vertex exceeds player count");

  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!((stmt.A | stmt.B | stmt.C) & (VertexSet(1) << (v - 1)))) rest.push_back(v);

  auto radices_of = [&](const std::vector<int>& vs) {
    std::vector<int> r;
    for (int v : vs) r.push_back(choices[v - 1]);
    return r;
  };
  auto A_idx = assignments(radices_of(A));
  auto B_idx = assignments(radices_of(B));
  auto C_idx = assignments(radices_of(C));
  auto rest_idx = assignments(radices_of(rest));

  // Marginal p_{i_A i_B i_C +} as a sum of p-variables.
  auto marginal = [&](const std::vector<int>& iA, const std::vector<int>& iB,
                      const std::vector<int>& iC) {
    std::vector<Term> terms;
    std::vector<int> profile(n);
    for (const auto& iR : rest_idx) {
      for (size_t t = 0; t < A.size(); ++t) profile[A[t] - 1] = iA[t];
      for (size_t t = 0; t < B.size(); ++t) profile[B[t] - 1] = iB[t];
      for (size_t t = 0; t < C.size(); ++t) profile[C[t] - 1] = iC[t];
      for (size_t t = 0; t < rest.size(); ++t) profile[rest[t] - 1] = iR[t];
      long flat = 0;
      for (int v = 0; v < n; ++v) flat = flat * choices[v] + (profile[v] - 1);
      ExpVec e(ptab->size(), 0);
      e[flat] = 1;
      terms.push_back({std::move(e), Rational(1)});
    }
    return Polynomial::from_terms(ptab, std::move(terms));
  };

  std::vector<Polynomial> out;
  for (const auto& iC : C_idx)
    for (size_t a1 = 0; a1 < A_idx.size(); ++a1)
      for (size_t a2 = a1 + 1; a2 < A_idx.size(); ++a2)
        for (size_t b1 = 0; b1 < B_idx.size(); ++b1)
          for (size_t b2 = b1 + 1; b2 < B_idx.size(); ++b2) {
            Polynomial q = marginal(A_idx[a1], B_idx[b1], iC) * marginal(A_idx[a2], B_idx[b2], iC) -
                           marginal(A_idx[a1], B_idx[b2], iC) * marginal(A_idx[a2], B_idx[b1], iC);
            if (!q.is_zero()) out.push_back(q.primitive());
          }
  return out;
}

std::vector<Polynomial> model_quadrics(const Graph& g, const std::vector<int>& choices,
                                       const VarTablePtr& ptab) {
  std::vector<Polynomial> out;
  std::unordered_set<std::string> seen;
  for (const auto& stmt : g.global_markov()) {
    for (auto& q : ci_quadrics(stmt, choices, ptab)) {
      auto key = q.to_string();
      if (seen.insert(std::move(key)).second) out.push_back(std::move(q));
    }
  }
  return out;
}

ParamMap param_map(const Graph& g) {
  int n = g.vertex_count();
  ParamMap pm{g, g.maximal_cliques(), nullptr, {}, {}};

  std::vector<std::string> names;
  std::vector<int> block_of;
  for (size_t c = 0; c < pm.cliques.size(); ++c) {
    pm.block_offset.push_back(static_cast<int>(names.size()));
    const auto& clique = pm.cliques[c];
    std::vector<int> radices(clique.size(), 2);
    for (const auto& j : assignments(radices)) {
      names.push_back(sigma_name(clique, j));
      block_of.push_back(static_cast<int>(c));
    }
  }
  pm.torus = std::make_shared<VarTable>(std::move(names), std::move(block_of),
                                        static_cast<int>(pm.cliques.size()));

  long total = 1L << n;
  pm.image.reserve(total);
  for (long w = 0; w < total; ++w) {
    ExpVec e(pm.torus->size(), 0);
    for (size_t c = 0; c < pm.cliques.size(); ++c) {
      std::vector<int> jc;
      for (int v : pm.cliques[c]) jc.push_back(static_cast<int>((w >> (n - v)) & 1) + 1);
      e[pm.torus_var(static_cast<int>(c), jc)] += 1;
    }
    pm.image.push_back(std::move(e));
  }
  return pm;
}

long model_dimension(const Graph& g) {
  auto [f0, f_ge2] = g.clique_complex_face_counts();
  return f0 + f_ge2;
}

std::string export_ideal(const VarTablePtr& tab, const std::vector<Polynomial>& polys) {
  std::ostringstream os;
  os << "vars";
  for (const auto& name : tab->names()) os << " " << name;
  os << "\n";
  for (const auto& p : polys) os << p.to_string() << "\n";
  return os.str();
}

}  // namespace spohn
