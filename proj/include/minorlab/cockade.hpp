#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

enum class PieceKind { K8, K22222 };

// Gluing instruction: identify a 5-clique of the new piece (local vertex ids)
// with a 5-clique of an existing piece (global vertex ids of the graph built
// so far), matched position by position.
struct GlueStep {
  int target_piece = 0;
  std::array<int, 5> target_clique{};
  std::array<int, 5> piece_clique{};
};

struct CockadeSpec {
  std::vector<PieceKind> pieces;
  std::vector<GlueStep> glue;  // one entry per piece after the first
};

struct BuiltCockade {
  Graph graph;
  std::vector<std::vector<int>> piece_vertices;  // global ids per piece
};

Graph build_cockade(const CockadeSpec& spec);
BuiltCockade build_cockade_tracked(const CockadeSpec& spec);

std::string cockade_spec_to_json(const CockadeSpec& spec);
CockadeSpec cockade_spec_from_json(const std::string& text);

// Reproducible pseudo-random cockade; all draws come from the seed.
std::pair<CockadeSpec, Graph> random_cockade(int pieces, uint64_t seed);

// Decomposition proof: pieces are peeled off one at a time across a clique
// separator, so the certificate lists (leaf, separator) pairs ending with the
// final leaf.
struct CockadeCertificate {
  struct Peel {
    VertexSet leaf;       // vertices of the peeled piece
    VertexSet separator;  // clique shared with the rest
  };
  std::vector<Peel> peels;
  VertexSet final_leaf;
};

// Recognition family: glue-clique size, the linear edge law e = a*n - b every
// member satisfies, and the admissible leaf pieces.
struct CockadeFamily {
  int clique_size = 5;
  int law_a = 6;
  int law_b = 20;
  std::function<bool(const Graph&)> is_piece;
};

CockadeFamily k8_k22222_family();
CockadeFamily complete_piece_family(int piece_order, int clique_size);

std::optional<CockadeCertificate> recognize_cockade(const Graph& g);  // (K8, K2,2,2,2,2, 5)
std::optional<CockadeCertificate> recognize_cockade_family(const Graph& g,
                                                           const CockadeFamily& family);

bool is_valid_certificate(const Graph& g, const CockadeFamily& family,
                          const CockadeCertificate& cert);

// All cockades of the (K8, K2,2,2,2,2, 5) family with at most max_order
// vertices, one per isomorphism class.
std::vector<Graph> all_cockades_up_to(int max_order);

}  // namespace minorlab
