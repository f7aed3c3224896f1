#pragma once

#include <optional>

#include "minorlab/graph.hpp"

namespace minorlab {

// Maximum number of internally vertex-disjoint u-v paths (u, v distinct).
int max_disjoint_paths(const Graph& g, int u, int v);

// Menger: minimum over non-adjacent pairs of the disjoint path count, with
// n-1 for complete graphs and 0 for disconnected or trivial graphs.
int vertex_connectivity(const Graph& g);

// A minimum vertex cut, or nullopt when none exists (complete graphs).
std::optional<VertexSet> min_separator(const Graph& g);

}  // namespace minorlab
