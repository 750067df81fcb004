#ifndef SPOHN_CIMODEL_HPP
#define SPOHN_CIMODEL_HPP

#include <string>
#include <vector>

#include "spohn/graph.hpp"
#include "spohn/polyring.hpp"

namespace spohn {

// Clique-monomial parametrization of the (binary) graphical model: one torus
// block per maximal clique C with variables s<C>_<j_C>; p_{j_1...j_n} maps to
// the product over maximal cliques of the block variable picked out by the
// restriction of the index to C.
struct ParamMap {
  Graph graph;
  std::vector<std::vector<int>> cliques;  // sorted maximal cliques, block order
  VarTablePtr torus;                      // blocked by clique
  std::vector<int> block_offset;          // first torus var of each block
  std::vector<ExpVec> image;              // per p-flat-index, exponent of the image monomial

  int torus_var(int block, const std::vector<int>& j_restricted) const;
  // Index of s^{(C)}_{2...2} in each block (the dehomogenization variable).
  int all_two_var(int block) const;
  Polynomial image_monomial(long p_index) const;
};

// Quadrics expressing A _||_ B | C in (possibly marginalized) p-coordinates:
// one generator per conditioning assignment i_C and unordered index pairs on
// A and B; marginalization over [n] \ (A u B u C) expands the p_{...+}
// symbols into sums of p-variables.
std::vector<Polynomial> ci_quadrics(const CIStatement& stmt, const std::vector<int>& choices,
                                    const VarTablePtr& ptab);

// Union of ci_quadrics over global_markov(g), deduplicated by canonical form.
std::vector<Polynomial> model_quadrics(const Graph& g, const std::vector<int>& choices,
                                       const VarTablePtr& ptab);

ParamMap param_map(const Graph& g);  // binary only

// Dimension of the positive part of the binary model: n + f_ge2.
long model_dimension(const Graph& g);

// export-ideal text format: variable declaration line, then one polynomial
// per line.
std::string export_ideal(const VarTablePtr& tab, const std::vector<Polynomial>& polys);

}  // namespace spohn

#endif
