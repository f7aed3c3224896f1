#include "minorlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minorlab {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g = g.add_edge(u, v);
  return g;
}

Graph Graph::complete(int n) {
  Graph g(n);
  uint64_t all = g.vertex_mask();
  for (int v = 0; v < n; ++v) g.adj_[v] = all & ~(uint64_t{1} << v);
  return g;
}

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(n_));
}

int Graph::edge_count() const {
  int s = 0;
  for (int v = 0; v < n_; ++v) s += std::popcount(adj_[v]);
  return s / 2;
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : kMaxVertices + 1;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return n_ == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

int Graph::common_neighbor_count(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  return std::popcount(adj_[u] & adj_[v]);
}

uint64_t Graph::common_neighbors(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  return adj_[u] & adj_[v];
}

uint64_t Graph::neighborhood_of_set(uint64_t s) const {
  uint64_t nbr = 0;
  for (uint64_t m = s & vertex_mask(); m; m &= m - 1) nbr |= adj_[std::countr_zero(m)];
  return nbr & ~s & vertex_mask();
}

int Graph::edges_between(uint64_t s, uint64_t t) const {
  int count = 0;
  for (uint64_t m = s & vertex_mask(); m; m &= m - 1)
    count += std::popcount(adj_[std::countr_zero(m)] & t);
  return count;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (uint64_t m = bits_above(adj_[u], u); m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  return out;
}

std::vector<std::pair<int, int>> Graph::missing_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::add_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw std::invalid_argument("loop edge rejected");
  if (has_edge(u, v)) throw std::invalid_argument("edge already present");
  Graph g = *this;
  g.toggle(u, v);
  return g;
}

Graph Graph::remove_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
  Graph g = *this;
  g.toggle(u, v);
  return g;
}

Graph Graph::delete_vertex(int v) const {
  require_vertex(v);
  Graph g(n_ - 1);
  uint64_t low = (uint64_t{1} << v) - 1;
  for (int u = 0; u < n_; ++u) {
    if (u == v) continue;
    uint64_t r = adj_[u];
    uint64_t high = v + 1 >= 64 ? 0 : (r >> (v + 1)) << v;
    g.adj_[u < v ? u : u - 1] = (r & low) | high;
  }
  return g;
}

Graph Graph::contract_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  if (!has_edge(u, v)) throw std::invalid_argument("contracting a non-edge");
  int keep = std::min(u, v), gone = std::max(u, v);
  Graph g = *this;
  uint64_t merged = (adj_[u] | adj_[v]) & ~(uint64_t{1} << u) & ~(uint64_t{1} << v);
  g.adj_[keep] = merged;
  g.adj_[gone] = 0;
  for (int w = 0; w < n_; ++w) {
    if (w == keep || w == gone) continue;
    if ((merged >> w) & 1)
      g.adj_[w] |= uint64_t{1} << keep;
    g.adj_[w] &= ~(uint64_t{1} << gone);
  }
  return g.delete_vertex(gone);
}

Graph Graph::induced(uint64_t keep) const {
  keep &= vertex_mask();
  std::array<int, kMaxVertices> relabel{};
  int k = 0;
  for (uint64_t m = keep; m; m &= m - 1) relabel[std::countr_zero(m)] = k++;
  Graph g(k);
  for (uint64_t m = keep; m; m &= m - 1) {
    int u = std::countr_zero(m);
    for (uint64_t r = adj_[u] & keep; r; r &= r - 1)
      g.adj_[relabel[u]] |= uint64_t{1} << relabel[std::countr_zero(r)];
  }
  return g;
}

Graph Graph::complemented() const {
  Graph g(n_);
  uint64_t all = vertex_mask();
  for (int v = 0; v < n_; ++v) g.adj_[v] = all & ~adj_[v] & ~(uint64_t{1} << v);
  return g;
}

Graph Graph::disjoint_union(const Graph& h) const {
  if (n_ + h.n_ > kMaxVertices) throw std::invalid_argument("combined order exceeds 64");
  Graph g(n_ + h.n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = adj_[v];
  for (int v = 0; v < h.n_; ++v) g.adj_[n_ + v] = h.adj_[v] << n_;
  return g;
}

Graph Graph::join(const Graph& h) const {
  Graph g = disjoint_union(h);
  uint64_t left = VertexSet::first_n(n_).bits;
  uint64_t right = g.vertex_mask() & ~left;
  for (int v = 0; v < n_; ++v) g.adj_[v] |= right;
  for (int v = n_; v < g.n_; ++v) g.adj_[v] |= left;
  return g;
}

uint64_t Graph::reachable_from(uint64_t seed, uint64_t within) const {
  within &= vertex_mask();
  uint64_t seen = seed & within;
  uint64_t frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool Graph::connected_within(uint64_t within) const {
  within &= vertex_mask();
  if (within == 0) return true;
  uint64_t seed = within & (~within + 1);
  return reachable_from(seed, within) == within;
}

bool Graph::connected() const { return connected_within(vertex_mask()); }

std::vector<uint64_t> Graph::components(uint64_t within) const {
  within &= vertex_mask();
  std::vector<uint64_t> out;
  while (within) {
    uint64_t seed = within & (~within + 1);
    uint64_t comp = reachable_from(seed, within);
    out.push_back(comp);
    within &= ~comp;
  }
  return out;
}

bool Graph::is_valid() const {
  if (n_ < 0 || n_ > kMaxVertices) return false;
  uint64_t all = vertex_mask();
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v >= n_ && adj_[v] != 0) return false;
    if (v < n_ && (adj_[v] & ~all) != 0) return false;
    if (v < n_ && ((adj_[v] >> v) & 1)) return false;
  }
  for (int u = 0; u < n_; ++u)
    for (uint64_t m = adj_[u]; m; m &= m - 1)
      if (!((adj_[std::countr_zero(m)] >> u) & 1)) return false;
  return true;
}

void Graph::check_valid() const {
  if (!is_valid()) throw std::logic_error("graph invariant violated");
}

}  // namespace minorlab
