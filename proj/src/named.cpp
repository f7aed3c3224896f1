#include "minorlab/named.hpp"

#include <cctype>
#include <stdexcept>

namespace minorlab {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("part sizes must be positive");
    n += p;
  }
  if (n > kMaxVertices) throw std::invalid_argument("multipartite graph exceeds 64 vertices");
  Graph g(n);
  int start = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> ranges;
  for (int p : parts) {
    ranges.emplace_back(start, start + p);
    start += p;
  }
  for (size_t a = 0; a < ranges.size(); ++a)
    for (size_t b = a + 1; b < ranges.size(); ++b)
      for (int u = ranges[a].first; u < ranges[a].second; ++u)
        for (int v = ranges[b].first; v < ranges[b].second; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

// Outer cycle v0..v4, spokes vi-v(i+5), inner cycle v5 v7 v9 v6 v8.
Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph petersen_complement() { return petersen().complemented(); }

Graph build(const NamedGraph& spec) {
  using Tag = NamedGraph::Tag;
  switch (spec.tag) {
    case Tag::Complete: {
      int t = spec.params.at(0);
      if (t < 2 || t > kMaxVertices) throw std::invalid_argument("complete graph order out of range");
      return Graph::complete(t);
    }
    case Tag::CompleteMinusEdge: {
      int t = spec.params.at(0);
      if (t < 2 || t > kMaxVertices) throw std::invalid_argument("order out of range");
      return Graph::complete(t).remove_edge(0, 1);
    }
    case Tag::CompleteMinusTwoEdges: {
      int t = spec.params.at(0);
      bool shared = spec.params.at(1) != 0;
      if (t < (shared ? 3 : 4) || t > kMaxVertices)
        throw std::invalid_argument("order too small for two removed edges");
      Graph g = Graph::complete(t).remove_edge(0, 1);
      return shared ? g.remove_edge(0, 2) : g.remove_edge(2, 3);
    }
    case Tag::CompleteMultipartite:
      return complete_multipartite(spec.params);
    case Tag::CycleComplement: {
      int n = spec.params.at(0);
      return cycle(n).complemented();
    }
    case Tag::Petersen:
      return petersen();
    case Tag::PetersenComplement:
      return petersen_complement();
    case Tag::C5barJoinC4bar:
      return cycle(5).complemented().join(cycle(4).complemented());
    case Tag::C6barJoinK3bar:
      return cycle(6).complemented().join(Graph(3));
    case Tag::K333:
      return complete_multipartite({3, 3, 3});
  }
  throw std::invalid_argument("unknown construction tag");
}

std::optional<NamedGraph> parse_named(const std::string& name) {
  std::string s;
  for (char c : name)
    if (c != '_' && c != ' ') s.push_back(static_cast<char>(std::tolower(c)));
  bool minus_edge = false;
  if (!s.empty() && s.back() == '-') {
    minus_edge = true;
    s.pop_back();
  }
  std::string dashless;
  for (char c : s)
    if (c != '-') dashless.push_back(c);
  s = dashless;

  auto is_num = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  if (s == "petersen" || s == "p") return NamedGraph{NamedGraph::Tag::Petersen, {}};
  if (s == "petersenbar" || s == "petersencomplement" || s == "pbar")
    return NamedGraph{NamedGraph::Tag::PetersenComplement, {}};
  if (s == "c5barjoinc4bar") return NamedGraph{NamedGraph::Tag::C5barJoinC4bar, {}};
  if (s == "c6barjoink3bar") return NamedGraph{NamedGraph::Tag::C6barJoinK3bar, {}};
  if (s == "k333" || s == "k3,3,3") return NamedGraph{NamedGraph::Tag::K333, {}};
  if (s == "k22222" || s == "k2,2,2,2,2")
    return NamedGraph::multipartite({2, 2, 2, 2, 2});

  if (s.size() >= 2 && s[0] == 'c') {
    bool bar = s.size() > 4 && s.substr(s.size() - 3) == "bar";
    std::string num = bar ? s.substr(1, s.size() - 4) : s.substr(1);
    if (is_num(num)) {
      int n = std::stoi(num);
      if (bar) return NamedGraph::cycle_complement(n);
      return std::nullopt;  // plain cycles are passed as graph6
    }
  }

  if (s.size() >= 2 && s[0] == 'k') {
    if (s.find(',') != std::string::npos) {
      std::vector<int> parts;
      std::string cur;
      for (size_t i = 1; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
          if (!is_num(cur)) return std::nullopt;
          parts.push_back(std::stoi(cur));
          cur.clear();
        } else {
          cur.push_back(s[i]);
        }
      }
      return NamedGraph::multipartite(parts);
    }
    std::string rest = s.substr(1);
    if (rest.size() >= 2 && rest.substr(rest.size() - 2) == "=s") {
      std::string num = rest.substr(0, rest.size() - 2);
      if (is_num(num)) return NamedGraph::complete_minus_two_edges(std::stoi(num), true);
    }
    if (rest.size() >= 2 && rest.substr(rest.size() - 2) == "=d") {
      std::string num = rest.substr(0, rest.size() - 2);
      if (is_num(num)) return NamedGraph::complete_minus_two_edges(std::stoi(num), false);
    }
    if (is_num(rest)) {
      int t = std::stoi(rest);
      return minus_edge ? NamedGraph::complete_minus_edge(t) : NamedGraph::complete(t);
    }
  }
  return std::nullopt;
}

}  // namespace minorlab
