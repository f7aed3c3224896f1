#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "minorlab/canonical.hpp"
#include "minorlab/graph.hpp"

namespace minorlab {

struct EnumFilter {
  int n = 0;
  int min_degree = 0;
  std::optional<int> min_connectivity;
  std::optional<int> max_edges;
};

// Isomorph-free generation of all graphs on filter.n vertices with minimum
// degree at least filter.min_degree, exactly one representative per class.
// Internally the complement is grown vertex by vertex under the induced
// maximum-degree bound, with canonical-deletion acceptance; the generation
// tree below a fixed frontier level is split into independent chunks.
struct EnumPlan {
  int n = 0;
  int max_complement_degree = 0;
  std::vector<Graph> frontier;  // complement-side subtree roots, canonically ordered
};

EnumPlan plan_min_degree(const EnumFilter& filter);

// Walks one frontier subtree; emits each surviving output graph with its
// canonical form, sorted by canonical form within the chunk.
void run_chunk(const EnumPlan& plan, const EnumFilter& filter, int chunk,
               const std::function<void(const Graph&, const CanonicalForm&)>& emit);

// Parallel driver over all chunks.  `emit` is called from worker threads;
// each chunk's calls happen in canonical order and carry the chunk id.
void enumerate_min_degree(
    const EnumFilter& filter, int jobs,
    const std::function<void(int chunk, const Graph&, const CanonicalForm&)>& emit);

std::vector<Graph> enumerate_min_degree_collect(const EnumFilter& filter);

// Complement-side engine exposed directly: all graphs on n vertices with
// maximum degree at most max_deg.
void enumerate_max_degree(int n, int max_deg, int jobs,
                          const std::function<void(int chunk, const Graph&)>& emit);

// Oracle generator: every isomorphism class on n <= 7 vertices, found by
// filtering all labeled graphs through their canonical forms.
std::vector<Graph> enumerate_all(int n);

}  // namespace minorlab
