#include "spohn/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace spohn {

std::vector<int> mask_to_vertices(VertexSet m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v + 1);
  return out;
}

VertexSet vertices_to_mask(const std::vector<int>& vs, int n) {
  VertexSet m = 0;
  for (int v : vs) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    m |= VertexSet(1) << (v - 1);
  }
  return m;
}

CIStatement CIStatement::make(VertexSet a, VertexSet b, VertexSet c) {
  if ((a & b) || (a & c) || (b & c)) throw std::invalid_argument("CI statement sets overlap");
  if (a == 0 || b == 0) throw std::invalid_argument("CI statement needs non-empty A and B");
  if (std::countr_zero(a) > std::countr_zero(b)) std::swap(a, b);
  return CIStatement{a, b, c};
}

bool CIStatement::operator<(const CIStatement& o) const {
  if (A != o.A) return A < o.A;
  if (B != o.B) return B < o.B;
  return C < o.C;
}

std::string CIStatement::to_string() const {
  auto join = [](VertexSet m) {
    std::ostringstream os;
    auto vs = mask_to_vertices(m);
    os << "{";
    for (size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
    os << "}";
    return os.str();
  };
  return join(A) + " _||_ " + join(B) + " | " + join(C);
}

int Partition::player_count() const {
  int n = 0;
  for (auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::vector<int> Partition::sizes() const {
  std::vector<int> s;
  for (auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  return s;
}

Partition Partition::from_sizes(const std::vector<int>& sizes) {
  Partition p;
  int v = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("partition block size must be positive");
    std::vector<int> block;
    for (int i = 0; i < s; ++i) block.push_back(v++);
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
  if (n < 1 || n > 32) throw std::invalid_argument("vertex count out of range");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto& [a, b] : edges) add_edge(a, b);
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("loops are not allowed");
  adj_[a - 1] |= VertexSet(1) << (b - 1);
  adj_[b - 1] |= VertexSet(1) << (a - 1);
}

bool Graph::has_edge(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return (adj_[a - 1] >> (b - 1)) & 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (has_edge(a, b)) out.emplace_back(a, b);
  return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

bool Graph::separates_masks(VertexSet A, VertexSet B, VertexSet C) const {
  if ((A & B) || (A & C) || (B & C)) throw std::invalid_argument("subsets must be disjoint");
  // BFS from A in the graph with C deleted; separated iff B is unreachable.
  VertexSet allowed = full_mask() & ~C;
  VertexSet reached = A & allowed;
  VertexSet frontier = reached;
  while (frontier) {
    VertexSet next = 0;
    VertexSet f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj_[v] & allowed & ~reached;
    }
    reached |= next;
    frontier = next;
  }
  return (reached & B) == 0;
}

bool Graph::separates(const std::vector<int>& A, const std::vector<int>& B,
                      const std::vector<int>& C) const {
  return separates_masks(vertices_to_mask(A, n_), vertices_to_mask(B, n_), vertices_to_mask(C, n_));
}

std::vector<CIStatement> Graph::global_markov() const {
  if (n_ > 12)
    throw std::domain_error(
        "global Markov enumeration is guarded at n <= 12; use pairwise_markov for larger graphs");
  std::vector<CIStatement> out;
  VertexSet full = full_mask();
  // For each separator C, vertices of distinct components of G - C may be
  // split between A and B arbitrarily.
  for (VertexSet C = 0; C <= full; ++C) {
    if (C == full) break;
    VertexSet rest = full & ~C;
    // Component label per vertex of rest.
    std::vector<int> comp(n_, -1);
    std::vector<VertexSet> comps;
    VertexSet todo = rest;
    while (todo) {
      int v = std::countr_zero(todo);
      VertexSet cm = VertexSet(1) << v;
      VertexSet frontier = cm;
      while (frontier) {
        VertexSet next = 0;
        VertexSet f = frontier;
        while (f) {
          int u = std::countr_zero(f);
          f &= f - 1;
          next |= adj_[u] & rest & ~cm;
        }
        cm |= next;
        frontier = next;
      }
      comps.push_back(cm);
      todo &= ~cm;
    }
    // Assign each component to side A, side B, or neither; then choose a
    // non-empty subset of the component's vertices on that side.
    std::vector<std::pair<VertexSet, VertexSet>> partial = {{0, 0}};
    for (VertexSet cm : comps) {
      std::vector<std::pair<VertexSet, VertexSet>> grown;
      auto vs = mask_to_vertices(cm);
      int s = static_cast<int>(vs.size());
      std::vector<VertexSet> subsets;
      for (VertexSet sub = 1; sub < (VertexSet(1) << s); ++sub) {
        VertexSet m = 0;
        for (int i = 0; i < s; ++i)
          if ((sub >> i) & 1) m |= VertexSet(1) << (vs[i] - 1);
        subsets.push_back(m);
      }
      for (auto& [a, b] : partial) {
        grown.emplace_back(a, b);  // component untouched
        for (VertexSet m : subsets) {
          grown.emplace_back(a | m, b);
          grown.emplace_back(a, b | m);
        }
      }
      partial = std::move(grown);
    }
    for (auto& [a, b] : partial)
      if (a && b && std::countr_zero(a) < std::countr_zero(b))
        out.push_back(CIStatement{a, b, C});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CIStatement> Graph::pairwise_markov() const {
  std::vector<CIStatement> out;
  VertexSet full = full_mask();
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      if (!has_edge(a, b)) {
        VertexSet A = VertexSet(1) << (a - 1), B = VertexSet(1) << (b - 1);
        out.push_back(CIStatement{A, B, full & ~(A | B)});
      }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet R, VertexSet P, VertexSet X,
                   std::vector<VertexSet>& out) {
  if (!P && !X) {
    out.push_back(R);
    return;
  }
  VertexSet PX = P | X;
  int pivot = std::countr_zero(PX);
  int best = -1;
  VertexSet scan = PX;
  while (scan) {
    int u = std::countr_zero(scan);
    scan &= scan - 1;
    int deg = std::popcount(P & adj[u]);
    if (deg > best) {
      best = deg;
      pivot = u;
    }
  }
  VertexSet candidates = P & ~adj[pivot];
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    VertexSet vm = VertexSet(1) << v;
    bron_kerbosch(adj, R | vm, P & adj[v], X & adj[v], out);
    P &= ~vm;
    X |= vm;
  }
}
}  // namespace

std::vector<std::vector<int>> Graph::maximal_cliques() const {
  std::vector<VertexSet> masks;
  bron_kerbosch(adj_, 0, full_mask(), 0, masks);
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (VertexSet m : masks) out.push_back(mask_to_vertices(m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
// Counts complete subgraphs reachable by extending the current one with
// vertices from `candidates`, restricted to common neighborhoods. Each clique
// is enumerated once because extensions only use vertices above the last one.
long count_extensions(const std::vector<VertexSet>& adj, int size_so_far, VertexSet candidates) {
  long count = 0;
  while (candidates) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    if (size_so_far + 1 >= 2) count += 1;
    count += count_extensions(adj, size_so_far + 1, candidates & adj[v]);
  }
  return count;
}
}  // namespace

std::pair<long, long> Graph::clique_complex_face_counts() const {
  return {n_, count_extensions(adj_, 0, full_mask())};
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<std::vector<int>> out;
  VertexSet todo = full_mask();
  while (todo) {
    int v = std::countr_zero(todo);
    VertexSet cm = VertexSet(1) << v;
    VertexSet frontier = cm;
    while (frontier) {
      VertexSet next = 0;
      VertexSet f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[u] & ~cm;
      }
      cm |= next;
      frontier = next;
    }
    out.push_back(mask_to_vertices(cm));
    todo &= ~cm;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Partition> Graph::is_disjoint_cliques() const {
  auto comps = components();
  for (auto& comp : comps)
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j)
        if (!has_edge(comp[i], comp[j])) return std::nullopt;
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  Partition p;
  p.blocks = std::move(comps);
  return p;
}

bool Graph::is_subgraph_of(const Graph& h) const {
  if (n_ != h.n_) throw std::invalid_argument("vertex count mismatch");
  for (int v = 0; v < n_; ++v)
    if (adj_[v] & ~h.adj_[v]) return false;
  return true;
}

}  // namespace spohn
