#include "minorlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "minorlab/connectivity.hpp"
#include "minorlab/parallel.hpp"

namespace minorlab {

namespace {

constexpr int kPracticalLimit = 16;

// Neighborhood choices for a new vertex: subsets of size <= max_deg whose
// members all have spare degree.
std::vector<uint64_t> candidate_masks(const Graph& g, int max_deg) {
  std::vector<int> eligible;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) < max_deg) eligible.push_back(v);
  std::vector<uint64_t> out;
  // enumerate subsets by extending with increasing vertex index
  struct Item {
    uint64_t mask;
    size_t next;
    int size;
  };
  std::vector<Item> work{{0, 0, 0}};
  while (!work.empty()) {
    Item it = work.back();
    work.pop_back();
    out.push_back(it.mask);
    if (it.size == max_deg) continue;
    for (size_t i = it.next; i < eligible.size(); ++i)
      work.push_back({it.mask | (uint64_t{1} << eligible[i]), i + 1, it.size + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex coloring from the equitable refinement of the uniform partition:
// invariant under automorphisms, used to pre-group augmentation masks.
std::vector<int> invariant_classes(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<int> nd;
    for (uint64_t m = g.row(v); m; m &= m - 1) nd.push_back(g.degree(std::countr_zero(m)));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  std::map<std::vector<int>, int> ids;
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = ids.emplace(sig[v], static_cast<int>(ids.size())).first->second;
  return out;
}

// One representative mask per orbit of Aut(g) acting on the candidate masks.
std::vector<uint64_t> orbit_representatives(const Graph& g, const std::vector<uint64_t>& masks) {
  std::vector<int> cls = invariant_classes(g);
  std::map<std::vector<int>, std::vector<uint64_t>> groups;
  for (uint64_t mask : masks) {
    std::vector<int> key;
    for (uint64_t m = mask; m; m &= m - 1) key.push_back(cls[std::countr_zero(m)]);
    std::sort(key.begin(), key.end());
    groups[key].push_back(mask);
  }
  std::vector<uint64_t> reps;
  for (auto& [key, group] : groups) {
    if (group.size() == 1) {
      reps.push_back(group[0]);
      continue;
    }
    std::unordered_set<std::string> seen;
    for (uint64_t mask : group) {
      std::vector<int> colors(g.order(), 0);
      for (uint64_t m = mask; m; m &= m - 1) colors[std::countr_zero(m)] = 1;
      if (seen.insert(canonical_form_colored(g, colors).bytes).second) reps.push_back(mask);
    }
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

Graph extend_with(const Graph& g, uint64_t mask) {
  Graph child = g.disjoint_union(Graph(1));
  int v = g.order();
  for (uint64_t m = mask; m; m &= m - 1) child = child.add_edge(std::countr_zero(m), v);
  return child;
}

// Canonical-deletion acceptance: the new last vertex must lie in the orbit of
// the vertex holding the final canonical position.
bool accepted(const Graph& child) {
  auto lab = canonical_labeling(child);
  int last = child.order() - 1;
  int w = lab.order.back();
  if (w == last) return true;
  if (!lab.found_automorphism) return false;  // trivial group: orbits are singletons
  std::vector<int> mark_last(child.order(), 0), mark_w(child.order(), 0);
  mark_last[last] = 1;
  mark_w[w] = 1;
  return canonical_form_colored(child, mark_last) == canonical_form_colored(child, mark_w);
}

void extend_recursive(const Graph& g, int n, int max_deg, const std::function<void(const Graph&)>& emit) {
  if (g.order() == n) {
    emit(g);
    return;
  }
  for (uint64_t mask : orbit_representatives(g, candidate_masks(g, max_deg))) {
    Graph child = extend_with(g, mask);
    if (accepted(child)) extend_recursive(child, n, max_deg, emit);
  }
}

int frontier_level(int n) { return std::clamp(n - 3, 1, 8); }

}  // namespace

EnumPlan plan_min_degree(const EnumFilter& filter) {
  if (filter.n < 1 || filter.n > kPracticalLimit)
    throw std::invalid_argument("enumeration supports 1 <= n <= 16");
  if (filter.min_degree < 0 || filter.min_degree >= filter.n)
    throw std::invalid_argument("infeasible minimum degree");
  EnumPlan plan;
  plan.n = filter.n;
  plan.max_complement_degree = filter.n - 1 - filter.min_degree;
  int level = std::min(frontier_level(filter.n), filter.n);
  std::vector<Graph> current{Graph(1)};
  for (int k = 2; k <= level; ++k) {
    std::vector<Graph> next;
    for (const Graph& g : current)
      for (uint64_t mask : orbit_representatives(g, candidate_masks(g, plan.max_complement_degree))) {
        Graph child = extend_with(g, mask);
        if (accepted(child)) next.push_back(child);
      }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  plan.frontier = std::move(current);
  return plan;
}

void run_chunk(const EnumPlan& plan, const EnumFilter& filter, int chunk,
               const std::function<void(const Graph&, const CanonicalForm&)>& emit) {
  std::vector<std::pair<CanonicalForm, Graph>> batch;
  extend_recursive(plan.frontier.at(chunk), plan.n, plan.max_complement_degree,
                   [&](const Graph& comp) {
                     Graph g = comp.complemented();
                     if (filter.max_edges && g.edge_count() > *filter.max_edges) return;
                     if (filter.min_connectivity &&
                         vertex_connectivity(g) < *filter.min_connectivity)
                       return;
                     batch.emplace_back(canonical_form(g), g);
                   });
  std::sort(batch.begin(), batch.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [form, g] : batch) emit(g, form);
}

void enumerate_min_degree(
    const EnumFilter& filter, int jobs,
    const std::function<void(int chunk, const Graph&, const CanonicalForm&)>& emit) {
  EnumPlan plan = plan_min_degree(filter);
  parallel_chunks(static_cast<int>(plan.frontier.size()), jobs, [&](int chunk) {
    run_chunk(plan, filter, chunk,
              [&](const Graph& g, const CanonicalForm& form) { emit(chunk, g, form); });
  });
}

std::vector<Graph> enumerate_min_degree_collect(const EnumFilter& filter) {
  EnumPlan plan = plan_min_degree(filter);
  std::vector<Graph> out;
  for (int chunk = 0; chunk < static_cast<int>(plan.frontier.size()); ++chunk)
    run_chunk(plan, filter, chunk, [&](const Graph& g, const CanonicalForm&) { out.push_back(g); });
  return out;
}

void enumerate_max_degree(int n, int max_deg, int jobs,
                          const std::function<void(int chunk, const Graph&)>& emit) {
  EnumFilter filter{n, n - 1 - max_deg, std::nullopt, std::nullopt};
  EnumPlan plan = plan_min_degree(filter);
  parallel_chunks(static_cast<int>(plan.frontier.size()), jobs, [&](int chunk) {
    extend_recursive(plan.frontier.at(chunk), plan.n, plan.max_complement_degree,
                     [&](const Graph& comp) { emit(chunk, comp); });
  });
}

std::vector<Graph> enumerate_all(int n) {
  if (n < 0 || n > 7) throw std::invalid_argument("enumerate_all supports n <= 7");
  if (n == 0) return {};
  int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) slots.emplace_back(u, v);
  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  for (uint64_t bits = 0; bits < (uint64_t{1} << pairs); ++bits) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < pairs; ++i)
      if ((bits >> i) & 1) edges.push_back(slots[i]);
    g = Graph::from_edges(n, edges);
    if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace minorlab
