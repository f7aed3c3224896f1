#include "minorlab/minor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "minorlab/named.hpp"

namespace minorlab {

bool is_valid_model(const Graph& g, const Graph& h, const MinorModel& m) {
  if (static_cast<int>(m.branch_sets.size()) != h.order()) return false;
  uint64_t used = 0;
  for (const VertexSet& b : m.branch_sets) {
    if (b.empty()) return false;
    if ((b.bits & ~g.vertex_mask()) != 0) return false;
    if ((b.bits & used) != 0) return false;
    used |= b.bits;
    if (!g.connected_within(b.bits)) return false;
  }
  for (auto [u, v] : h.edges())
    if (g.edges_between(m.branch_sets[u].bits, m.branch_sets[v].bits) == 0) return false;
  return true;
}

namespace {

// Branch-set growth search.  Pattern vertices are placed in descending degree
// order; candidate branch sets are enumerated smallest-seed-first with each
// connected set visited exactly once, so the first witness is a fixed
// function of the inputs.  The driver deepens on the number of host vertices
// spent beyond one per pattern vertex, which keeps subgraph-like witnesses
// cheap and bounds the exhaustive passes on minor-free hosts.
struct MinorSearch {
  const Graph& g;
  const Graph& h;
  int k;
  std::vector<int> order;        // position -> h-vertex
  std::vector<int> hdeg;         // by position
  std::vector<uint64_t> need;    // by position: mask of earlier positions adjacent in h
  std::vector<uint64_t> seed_mask;     // allowed starting vertices per position
  std::vector<uint64_t> allowed_mask;  // allowed vertices per position
  std::vector<uint64_t> sets;    // by position
  std::vector<int> gdeg;
  uint64_t used = 0;

  MinorSearch(const Graph& host, const Graph& pattern) : g(host), h(pattern), k(pattern.order()) {
    order.resize(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    hdeg.resize(k);
    need.assign(k, 0);
    for (int t = 0; t < k; ++t) {
      hdeg[t] = pattern.degree(order[t]);
      for (int s = 0; s < t; ++s)
        if (pattern.has_edge(order[s], order[t])) need[t] |= uint64_t{1} << s;
    }
    uint64_t all = host.vertex_mask();
    seed_mask.assign(k, all);
    allowed_mask.assign(k, all);
    sets.assign(k, 0);
    gdeg.resize(host.order());
    for (int v = 0; v < host.order(); ++v) gdeg[v] = host.degree(v);
  }

  bool degree_ok(uint64_t b, int t) const {
    int size = std::popcount(b);
    if (size == 1) return gdeg[std::countr_zero(b)] >= hdeg[t];
    int sum = 0;
    for (uint64_t m = b; m; m &= m - 1) sum += gdeg[std::countr_zero(m)];
    return sum >= hdeg[t] + 2 * (size - 1);
  }

  bool run() {
    int max_extra = g.order() - k;
    for (int extra = 0; extra <= max_extra; ++extra)
      if (place(0, extra)) return true;
    return false;
  }

  bool place(int t, int extra_left) {
    if (t == k) return extra_left == 0;  // deepening: exact spend per pass
    uint64_t avail = ~used & allowed_mask[t] & g.vertex_mask();
    if (std::popcount(~used & g.vertex_mask()) < k - t) return false;
    uint64_t banned = 0;
    for (uint64_t m = avail & seed_mask[t]; m; m &= m - 1) {
      int v = std::countr_zero(m);
      uint64_t b = uint64_t{1} << v;
      if (grow(t, b, g.row(v), banned, avail, extra_left)) return true;
      banned |= b;
    }
    return false;
  }

  bool grow(int t, uint64_t b, uint64_t nbr, uint64_t banned, uint64_t avail, int extra_left) {
    uint64_t unmet = 0;
    for (uint64_t m = need[t]; m; m &= m - 1) {
      int s = std::countr_zero(m);
      if ((nbr & sets[s]) == 0) unmet |= uint64_t{1} << s;
    }
    if (unmet == 0 && degree_ok(b, t)) {
      sets[t] = b;
      used |= b;
      if (place(t + 1, extra_left)) return true;
      used &= ~b;
      sets[t] = 0;
    }
    if (extra_left == 0) return false;
    uint64_t ext = nbr & avail & ~banned & ~b;
    for (uint64_t m = ext; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (grow(t, b | (uint64_t{1} << u), nbr | g.row(u), banned, avail, extra_left - 1))
        return true;
      banned |= uint64_t{1} << u;
    }
    return false;
  }
};

}  // namespace

std::optional<MinorModel> has_minor(const Graph& g, const Graph& h) {
  if (h.order() < 1) throw std::invalid_argument("pattern must have at least one vertex");
  if (g.order() < h.order()) return std::nullopt;
  if (g.edge_count() < h.edge_count()) return std::nullopt;
  MinorSearch search(g, h);
  if (!search.run()) return std::nullopt;
  MinorModel model;
  model.branch_sets.assign(h.order(), VertexSet{});
  for (int t = 0; t < h.order(); ++t) model.branch_sets[search.order[t]] = VertexSet(search.sets[t]);
  return model;
}

Graph family_member(int t, TwoMissing variant, bool plus_isolated) {
  if (t < 4) throw std::invalid_argument("family requires t >= 4");
  Graph g = build(NamedGraph::complete_minus_two_edges(t, variant == TwoMissing::SharedEnd));
  if (plus_isolated) g = g.disjoint_union(Graph(1));
  return g;
}

std::optional<FamilyWitness> has_family_minor(const Graph& g, int t, bool plus_isolated) {
  int k = t + (plus_isolated ? 1 : 0);
  if (g.order() < k) return std::nullopt;
  Graph members[2] = {family_member(t, TwoMissing::DisjointEnds, plus_isolated),
                      family_member(t, TwoMissing::SharedEnd, plus_isolated)};
  if (g.edge_count() < members[0].edge_count()) return std::nullopt;
  MinorSearch searches[2] = {MinorSearch(g, members[0]), MinorSearch(g, members[1])};
  // Interleave the two variants by budget so a cheap witness for either one
  // is found before the other is exhausted.
  for (int extra = 0; extra <= g.order() - k; ++extra)
    for (int i = 0; i < 2; ++i)
      if (searches[i].place(0, extra)) {
        MinorModel model;
        model.branch_sets.assign(k, VertexSet{});
        for (int p = 0; p < k; ++p)
          model.branch_sets[searches[i].order[p]] = VertexSet(searches[i].sets[p]);
        return FamilyWitness{i == 0 ? TwoMissing::DisjointEnds : TwoMissing::SharedEnd,
                             std::move(model)};
      }
  return std::nullopt;
}

bool is_valid_rooted_model(const Graph& g, VertexSet t, const RootedModel& m) {
  if (t.count() != 4) return false;
  MinorModel as_model;
  for (int i = 0; i < 4; ++i) {
    if (!t.contains(m.roots[i])) return false;
    if (!m.branch_sets[i].contains(m.roots[i])) return false;
    if ((m.branch_sets[i] & t).count() != 1) return false;
    as_model.branch_sets.push_back(m.branch_sets[i]);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (m.roots[i] == m.roots[j]) return false;
  return is_valid_model(g, Graph::complete(4), as_model);
}

std::optional<RootedModel> has_rooted_k4(const Graph& g, VertexSet t) {
  if (t.count() != 4) throw std::invalid_argument("rooted K4 needs exactly four roots");
  if ((t.bits & ~g.vertex_mask()) != 0) throw std::out_of_range("root outside the graph");
  std::vector<int> roots = t.to_vector();
  MinorSearch search(g, Graph::complete(4));
  for (int i = 0; i < 4; ++i) {
    search.seed_mask[i] = uint64_t{1} << roots[i];
    search.allowed_mask[i] = ~t.bits | (uint64_t{1} << roots[i]);
  }
  if (!search.run()) return std::nullopt;
  RootedModel model;
  for (int i = 0; i < 4; ++i) {
    model.branch_sets[i] = VertexSet(search.sets[i]);
    model.roots[i] = roots[i];
  }
  return model;
}

namespace {

bool clique_extend(const Graph& g, uint64_t current, uint64_t allowed, int remaining,
                   uint64_t* out) {
  if (remaining == 0) {
    *out = current;
    return true;
  }
  if (std::popcount(allowed) < remaining) return false;
  uint64_t iter = allowed;
  while (iter) {
    int v = std::countr_zero(iter);
    iter &= iter - 1;
    if (clique_extend(g, current | (uint64_t{1} << v), iter & g.row(v), remaining - 1, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be positive");
  uint64_t out = 0;
  if (clique_extend(g, 0, g.vertex_mask(), k, &out)) return VertexSet(out);
  return std::nullopt;
}

std::optional<VertexSet> find_k5_minus(const Graph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (uint64_t mb = bits_above(g.row(a), a); mb; mb &= mb - 1) {
      int b = std::countr_zero(mb);
      for (uint64_t mc = bits_above(g.row(a) & g.row(b), b); mc; mc &= mc - 1) {
        int c = std::countr_zero(mc);
        uint64_t common = g.row(a) & g.row(b) & g.row(c);
        common &= ~(uint64_t{1} << a) & ~(uint64_t{1} << b) & ~(uint64_t{1} << c);
        if (std::popcount(common) >= 2) {
          int d = std::countr_zero(common);
          common &= common - 1;
          int e = std::countr_zero(common);
          return VertexSet::single(a).with(b).with(c).with(d).with(e);
        }
      }
    }
  return std::nullopt;
}

}  // namespace minorlab
