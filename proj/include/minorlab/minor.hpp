#pragma once

#include <array>
#include <optional>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Witness that h is a minor of g: one branch set per h-vertex, pairwise
// disjoint, each inducing a connected subgraph, with a cross edge of g for
// every edge of h.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
};

bool is_valid_model(const Graph& g, const Graph& h, const MinorModel& m);

std::optional<MinorModel> has_minor(const Graph& g, const Graph& h);

// The two ways of removing two edges from a complete graph.
enum class TwoMissing { DisjointEnds, SharedEnd };

struct FamilyWitness {
  TwoMissing variant;
  MinorModel model;
};

Graph family_member(int t, TwoMissing variant, bool plus_isolated = false);

// Tests both K_t-minus-two-edges variants (optionally each with an extra
// isolated vertex), short-circuiting on the first witness.
std::optional<FamilyWitness> has_family_minor(const Graph& g, int t, bool plus_isolated = false);

// K4 minor rooted at four vertices: branch set i holds root i and no other
// root, and all six cross edges are present.
struct RootedModel {
  std::array<VertexSet, 4> branch_sets;
  std::array<int, 4> roots;
};

bool is_valid_rooted_model(const Graph& g, VertexSet t, const RootedModel& m);
std::optional<RootedModel> has_rooted_k4(const Graph& g, VertexSet t);

// Subgraph detection for the small-graph arguments: a k-clique, or five
// vertices carrying all but at most one clique edge.
std::optional<VertexSet> find_clique(const Graph& g, int k);
std::optional<VertexSet> find_k5_minus(const Graph& g);

}  // namespace minorlab
