#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Construction tags with a fixed, deterministic vertex labeling.
struct NamedGraph {
  enum class Tag {
    Complete,                // params: {t}
    CompleteMinusEdge,       // params: {t}, edge v0v1 removed
    CompleteMinusTwoEdges,   // params: {t, shared}, removes {v0v1, v0v2} or {v0v1, v2v3}
    CompleteMultipartite,    // params: part sizes
    CycleComplement,         // params: {n}
    Petersen,
    PetersenComplement,
    C5barJoinC4bar,
    C6barJoinK3bar,
    K333,
  };

  Tag tag;
  std::vector<int> params;

  static NamedGraph complete(int t) { return {Tag::Complete, {t}}; }
  static NamedGraph complete_minus_edge(int t) { return {Tag::CompleteMinusEdge, {t}}; }
  static NamedGraph complete_minus_two_edges(int t, bool shared) {
    return {Tag::CompleteMinusTwoEdges, {t, shared ? 1 : 0}};
  }
  static NamedGraph multipartite(std::vector<int> parts) {
    return {Tag::CompleteMultipartite, std::move(parts)};
  }
  static NamedGraph cycle_complement(int n) { return {Tag::CycleComplement, {n}}; }
};

Graph build(const NamedGraph& spec);

// Convenience builders for the graphs used throughout the lab.
Graph petersen();
Graph petersen_complement();
Graph cycle(int n);
Graph complete_multipartite(const std::vector<int>& parts);

// Parses names accepted by the CLI: K7, K7-, K7=s, K7=d, K2,2,2,2,2, C9,
// C9bar, petersen, petersen-bar, c5bar-join-c4bar, c6bar-join-k3bar, k333.
std::optional<NamedGraph> parse_named(const std::string& name);

}  // namespace minorlab
