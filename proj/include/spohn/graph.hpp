#ifndef SPOHN_GRAPH_HPP
#define SPOHN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spohn {

// Vertices are 1-based in the public API, matching the player labels; bitmask
// positions are 0-based internally.
using VertexSet = uint32_t;

// A is conditionally independent of B given C. Normalized so min(A) < min(B).
struct CIStatement {
  VertexSet A = 0, B = 0, C = 0;

  static CIStatement make(VertexSet a, VertexSet b, VertexSet c);
  bool operator==(const CIStatement& o) const { return A == o.A && B == o.B && C == o.C; }
  bool operator<(const CIStatement& o) const;
  std::string to_string() const;
};

// Disjoint-clique decomposition: blocks partition [n], sizes ascending.
struct Partition {
  std::vector<std::vector<int>> blocks;  // 1-based vertices, each block sorted

  int player_count() const;
  std::vector<int> sizes() const;
  // Blocks of consecutive vertices 1..n1, n1+1..n1+n2, ...
  static Partition from_sizes(const std::vector<int>& sizes);
};

class Graph {
 public:
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  // True iff every a in A, b in B is separated by C (paths in g minus C).
  // The mask variant is named separately: braced vertex lists would convert
  // to masks silently otherwise.
  bool separates_masks(VertexSet A, VertexSet B, VertexSet C) const;
  bool separates(const std::vector<int>& A, const std::vector<int>& B,
                 const std::vector<int>& C) const;

  // All normalized statements (A,B,C) with C separating A and B. Guarded at
  // n <= 12; beyond that the enumeration is hopeless, use pairwise_markov.
  std::vector<CIStatement> global_markov() const;
  // One statement a _||_ b | [n]\{a,b} per non-edge (a,b).
  std::vector<CIStatement> pairwise_markov() const;

  // Bron-Kerbosch with pivoting; isolated vertices appear as singletons;
  // output sorted by vertex lists.
  std::vector<std::vector<int>> maximal_cliques() const;

  // f0 = n, f_ge2 = number of complete subgraphs with >= 2 vertices (all
  // faces of the clique complex, not only the maximal ones).
  std::pair<long, long> clique_complex_face_counts() const;

  std::vector<std::vector<int>> components() const;
  std::optional<Partition> is_disjoint_cliques() const;

  bool is_subgraph_of(const Graph& h) const;

  VertexSet full_mask() const { return n_ == 32 ? ~VertexSet(0) : ((VertexSet(1) << n_) - 1); }

 private:
  int n_;
  std::vector<VertexSet> adj_;

  void check_vertex(int v) const;
};

std::vector<int> mask_to_vertices(VertexSet m);
VertexSet vertices_to_mask(const std::vector<int>& vs, int n);

}  // namespace spohn

#endif
