#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace minorlab {

inline constexpr int kMaxVertices = 64;

// Bits of m at positions strictly above v.
constexpr uint64_t bits_above(uint64_t m, int v) {
  return v + 1 >= 64 ? 0 : (m >> (v + 1)) << (v + 1);
}

// Set of vertex indices packed into one machine word.
struct VertexSet {
  uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(uint64_t b) : bits(b) {}

  static constexpr VertexSet single(int v) { return VertexSet(uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr bool empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr int lowest() const { return std::countr_zero(bits); }
  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  constexpr VertexSet with(int v) const { return VertexSet(bits | (uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits & ~(uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (uint64_t m = bits; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }
};

// Simple undirected graph on at most 64 vertices.  Row i of the adjacency
// table holds the neighborhood of vertex i as a bit mask.  Values are
// immutable once built; every edit returns a fresh graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph complete(int n);

  int order() const { return n_; }
  uint64_t row(int v) const { return adj_[v]; }
  uint64_t vertex_mask() const { return VertexSet::first_n(n_).bits; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  int edge_count() const;
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degree_sequence() const;  // descending

  int common_neighbor_count(int u, int v) const;
  uint64_t common_neighbors(int u, int v) const;
  // Vertices outside S with at least one neighbor in S.
  uint64_t neighborhood_of_set(uint64_t s) const;
  // Number of edges with one end in S and one end in T (S, T disjoint).
  int edges_between(uint64_t s, uint64_t t) const;

  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::pair<int, int>> missing_edges() const;

  Graph add_edge(int u, int v) const;
  Graph remove_edge(int u, int v) const;
  Graph delete_vertex(int v) const;  // higher indices shift down by one
  Graph contract_edge(int u, int v) const;
  Graph induced(uint64_t keep) const;  // kept vertices relabeled in increasing order
  Graph complemented() const;
  Graph disjoint_union(const Graph& h) const;
  Graph join(const Graph& h) const;

  bool connected() const;
  // Connectivity of the subgraph induced by `within` (true when empty).
  bool connected_within(uint64_t within) const;
  uint64_t reachable_from(uint64_t seed, uint64_t within) const;
  std::vector<uint64_t> components(uint64_t within) const;

  bool is_valid() const;
  void check_valid() const;  // throws std::logic_error on a broken invariant

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void toggle(int u, int v) {
    adj_[u] ^= uint64_t{1} << v;
    adj_[v] ^= uint64_t{1} << u;
  }
  void require_vertex(int v) const;

  int n_ = 0;
  std::array<uint64_t, kMaxVertices> adj_{};
};

}  // namespace minorlab
