#include "minorlab/connectivity.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

namespace minorlab {

namespace {

// Unit-capacity flow network with split vertices: node 2v is the in-copy,
// 2v+1 the out-copy.  Source is 2u+1, sink 2v.
struct SplitFlow {
  int n;
  std::vector<std::array<int8_t, 2 * kMaxVertices>> cap;

  explicit SplitFlow(const Graph& g) : n(g.order()), cap(2 * n) {
    for (int v = 0; v < n; ++v) {
      cap[2 * v][2 * v + 1] = 1;
      for (uint64_t m = g.row(v); m; m &= m - 1) {
        int u = std::countr_zero(m);
        cap[2 * v + 1][2 * u] = 1;
      }
    }
  }

  // One BFS augmentation from s to t; returns false when t is unreachable.
  bool augment(int s, int t) {
    std::vector<int> parent(2 * n, -1);
    std::vector<int> queue{s};
    parent[s] = s;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      if (x == t) break;
      for (int y = 0; y < 2 * n; ++y)
        if (cap[x][y] > 0 && parent[y] < 0) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (parent[t] < 0) return false;
    for (int y = t; y != s; y = parent[y]) {
      cap[parent[y]][y] -= 1;
      cap[y][parent[y]] += 1;
    }
    return true;
  }

  uint64_t residual_reachable(int s) const {
    std::vector<char> seen(2 * n, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int y = 0; y < 2 * n; ++y)
        if (cap[queue[qi]][y] > 0 && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
    uint64_t mask = 0;
    for (int i = 0; i < 2 * n; ++i)
      if (seen[i]) mask |= uint64_t{1} << i;
    return mask;
  }
};

struct PairCut {
  int value;
  VertexSet cut;
};

PairCut pair_cut(const Graph& g, int u, int v) {
  SplitFlow flow(g);
  int s = 2 * u + 1, t = 2 * v;
  flow.cap[2 * u][2 * u + 1] = 0;  // endpoints carry no vertex capacity
  flow.cap[2 * v][2 * v + 1] = 0;
  int value = 0;
  while (flow.augment(s, t)) ++value;
  uint64_t reach = flow.residual_reachable(s);
  VertexSet cut;
  for (int w = 0; w < g.order(); ++w)
    if (((reach >> (2 * w)) & 1) && !((reach >> (2 * w + 1)) & 1)) cut = cut.with(w);
  return {value, cut};
}

bool is_complete(const Graph& g) {
  return g.edge_count() == g.order() * (g.order() - 1) / 2;
}

}  // namespace

int max_disjoint_paths(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("distinct vertices required");
  if (g.has_edge(u, v)) {
    Graph trimmed = g.remove_edge(u, v);
    return 1 + pair_cut(trimmed, u, v).value;
  }
  return pair_cut(g, u, v).value;
}

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  if (is_complete(g)) return n - 1;
  int best = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) best = std::min(best, pair_cut(g, u, v).value);
  return best;
}

std::optional<VertexSet> min_separator(const Graph& g) {
  int n = g.order();
  if (n <= 1 || is_complete(g)) return std::nullopt;
  int best = n;
  VertexSet witness;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) {
        PairCut pc = pair_cut(g, u, v);
        if (pc.value < best) {
          best = pc.value;
          witness = pc.cut;
        }
      }
  return witness;
}

}  // namespace minorlab
