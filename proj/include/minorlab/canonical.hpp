#pragma once

#include <compare>
#include <string>
#include <vector>

#include "minorlab/graph.hpp"

namespace minorlab {

// Isomorphism-invariant byte key: the graph6 string of the canonically
// relabeled graph.  Colored variants append the color-class sizes so keys of
// differently colored graphs never collide.
struct CanonicalForm {
  std::string bytes;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  std::vector<int> order;  // canonical position -> original vertex
  CanonicalForm form;
  bool found_automorphism = false;
};

CanonicalForm canonical_form(const Graph& g);
// colors[v] >= 0; vertices of distinct colors are never interchanged.
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors);
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors = {});
Graph canonical_relabel(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace minorlab
