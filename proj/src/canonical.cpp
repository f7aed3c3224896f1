#include "minorlab/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "minorlab/graph6.hpp"

namespace minorlab {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split cells by per-cell neighbor counts until stable.
// Sub-cells replace their parent in place, ordered by signature, so the cell
// order is a labeling invariant.
void refine(const Graph& g, Cells& cells) {
  int n = g.order();
  for (;;) {
    std::vector<uint64_t> masks(cells.size());
    for (size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) masks[c] |= uint64_t{1} << v;

    std::vector<std::vector<int>> sig(n);
    for (const auto& cell : cells)
      for (int v : cell) {
        sig[v].reserve(cells.size());
        for (uint64_t m : masks) sig[v].push_back(std::popcount(g.row(v) & m));
      }

    Cells next;
    bool split = false;
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::stable_sort(cell.begin(), cell.end(),
                       [&](int a, int b) { return sig[a] < sig[b]; });
      size_t start = 0;
      for (size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || sig[cell[i]] != sig[cell[start]]) {
          next.emplace_back(cell.begin() + start, cell.begin() + i);
          if (i - start != cell.size()) split = true;
          start = i;
        }
      }
    }
    cells = std::move(next);
    if (!split) return;
  }
}

std::string encode_body(const Graph& g, const std::vector<int>& order) {
  int n = g.order();
  std::string out;
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(order[u], order[v]) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

struct Searcher {
  const Graph& g;
  std::string best;
  std::vector<int> best_order;
  bool have_best = false;
  bool found_automorphism = false;
  std::vector<std::vector<int>> gens;  // automorphisms as vertex maps
  std::vector<int> prefix;

  explicit Searcher(const Graph& graph) : g(graph) {}

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(g.order());
    for (const auto& cell : cells) order.push_back(cell[0]);
    std::string enc = encode_body(g, order);
    if (!have_best || enc < best) {
      best = std::move(enc);
      best_order = std::move(order);
      have_best = true;
      return;
    }
    if (enc == best) {
      std::vector<int> map(g.order());
      bool identity = true;
      for (int i = 0; i < g.order(); ++i) {
        map[best_order[i]] = order[i];
        if (best_order[i] != order[i]) identity = false;
      }
      if (!identity) {
        found_automorphism = true;
        gens.push_back(std::move(map));
      }
    }
  }

  // Orbit of `tried` under the subgroup of recorded automorphisms that fix
  // the current individualization prefix pointwise.
  uint64_t closure(uint64_t tried) const {
    uint64_t orbit = tried;
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& map : gens) {
        bool fixes = true;
        for (int p : prefix)
          if (map[p] != p) {
            fixes = false;
            break;
          }
        if (!fixes) continue;
        for (uint64_t m = orbit; m; m &= m - 1) {
          int v = std::countr_zero(m);
          if (!((orbit >> map[v]) & 1)) {
            orbit |= uint64_t{1} << map[v];
            grew = true;
          }
        }
      }
    }
    return orbit;
  }

  void dfs(Cells cells) {
    refine(g, cells);
    size_t target = cells.size();
    size_t target_size = static_cast<size_t>(g.order()) + 1;
    for (size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && cells[c].size() < target_size) {
        target = c;
        target_size = cells[c].size();
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }

    uint64_t tried = 0;
    for (int v : cells[target]) {
      if ((closure(tried) >> v) & 1) continue;
      tried |= uint64_t{1} << v;
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int u : cells[c])
          if (u != v) rest.push_back(u);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      dfs(std::move(child));
      prefix.pop_back();
    }
  }
};

CanonicalLabeling run_canon(const Graph& g, const std::vector<int>& colors) {
  int n = g.order();
  Cells cells;
  std::vector<int> class_sizes;
  if (colors.empty()) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    if (n > 0) cells.push_back(std::move(all));
  } else {
    if (static_cast<int>(colors.size()) != n)
      throw std::invalid_argument("color vector size mismatch");
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[colors[v]].push_back(v);
    for (auto& [c, cell] : by_color) {
      class_sizes.push_back(static_cast<int>(cell.size()));
      cells.push_back(std::move(cell));
    }
  }

  CanonicalLabeling out;
  if (n == 0) {
    out.form.bytes = graph6_encode(g);
    return out;
  }

  Searcher searcher(g);
  searcher.dfs(std::move(cells));

  out.order = searcher.best_order;
  out.found_automorphism = searcher.found_automorphism;
  std::string header = graph6_encode(Graph(n)).substr(0, n <= 62 ? 1 : 4);
  out.form.bytes = header + searcher.best;
  if (!colors.empty()) {
    out.form.bytes.push_back('|');
    for (size_t i = 0; i < class_sizes.size(); ++i) {
      if (i) out.form.bytes.push_back(',');
      out.form.bytes += std::to_string(class_sizes[i]);
    }
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
  return run_canon(g, colors);
}

CanonicalForm canonical_form(const Graph& g) { return run_canon(g, {}).form; }

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
  return run_canon(g, colors).form;
}

Graph canonical_relabel(const Graph& g) {
  auto lab = run_canon(g, {});
  if (g.order() == 0) return g;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[lab.order[i]] = i;
  for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph::from_edges(g.order(), edges);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace minorlab
