#include "minorlab/cockade.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "minorlab/canonical.hpp"
#include "minorlab/named.hpp"

namespace minorlab {

namespace {

using json = nlohmann::ordered_json;

Graph piece_graph(PieceKind kind) {
  return kind == PieceKind::K8 ? Graph::complete(8) : complete_multipartite({2, 2, 2, 2, 2});
}

int piece_order(PieceKind kind) { return kind == PieceKind::K8 ? 8 : 10; }

bool induces_clique(const Graph& g, uint64_t mask) {
  for (uint64_t m = mask; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((g.row(v) & mask & ~(uint64_t{1} << v)) != (mask & ~(uint64_t{1} << v))) return false;
  }
  return true;
}

void collect_cliques(const Graph& g, uint64_t allowed, uint64_t cur, int remaining,
                     std::vector<uint64_t>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  uint64_t iter = allowed;
  while (iter) {
    int v = std::countr_zero(iter);
    iter &= iter - 1;
    if (std::popcount(iter) + 1 < remaining) return;
    collect_cliques(g, iter & g.row(v), cur | (uint64_t{1} << v), remaining - 1, out);
  }
}

std::vector<uint64_t> cliques_within(const Graph& g, uint64_t mask, int size) {
  std::vector<uint64_t> out;
  collect_cliques(g, mask, 0, size, out);
  return out;
}

}  // namespace

BuiltCockade build_cockade_tracked(const CockadeSpec& spec) {
  if (spec.pieces.empty()) throw std::invalid_argument("cockade needs at least one piece");
  if (spec.glue.size() + 1 != spec.pieces.size())
    throw std::invalid_argument("one glue step per piece after the first");

  BuiltCockade built;
  built.graph = piece_graph(spec.pieces[0]);
  built.piece_vertices.emplace_back();
  for (int v = 0; v < built.graph.order(); ++v) built.piece_vertices[0].push_back(v);

  for (size_t j = 0; j < spec.glue.size(); ++j) {
    const GlueStep& step = spec.glue[j];
    PieceKind kind = spec.pieces[j + 1];
    Graph piece = piece_graph(kind);

    if (step.target_piece < 0 || step.target_piece > static_cast<int>(j))
      throw std::invalid_argument("glue target out of range");
    const auto& target_ids = built.piece_vertices[step.target_piece];

    uint64_t target_mask = 0;
    for (int v : step.target_clique) {
      if (std::find(target_ids.begin(), target_ids.end(), v) == target_ids.end())
        throw std::invalid_argument("glue clique not inside the target piece");
      target_mask |= uint64_t{1} << v;
    }
    if (std::popcount(target_mask) != 5 || !induces_clique(built.graph, target_mask))
      throw std::invalid_argument("target selection is not a 5-clique");

    uint64_t local_mask = 0;
    for (int v : step.piece_clique) {
      if (v < 0 || v >= piece.order()) throw std::invalid_argument("piece clique vertex out of range");
      local_mask |= uint64_t{1} << v;
    }
    if (std::popcount(local_mask) != 5 || !induces_clique(piece, local_mask))
      throw std::invalid_argument("piece selection is not a 5-clique");

    int fresh = piece.order() - 5;
    if (built.graph.order() + fresh > kMaxVertices)
      throw std::invalid_argument("cockade exceeds 64 vertices");

    // local -> global map: clique locals onto the target clique, the rest
    // onto fresh ids in increasing local order
    std::vector<int> to_global(piece.order(), -1);
    for (int i = 0; i < 5; ++i) to_global[step.piece_clique[i]] = step.target_clique[i];
    Graph next(built.graph.order() + fresh);
    for (auto [u, v] : built.graph.edges()) next = next.add_edge(u, v);
    int cursor = built.graph.order();
    std::vector<int> piece_globals;
    for (int v = 0; v < piece.order(); ++v) {
      if (to_global[v] < 0) to_global[v] = cursor++;
      piece_globals.push_back(to_global[v]);
    }
    for (auto [u, v] : piece.edges())
      if (!next.has_edge(to_global[u], to_global[v])) next = next.add_edge(to_global[u], to_global[v]);

    built.graph = std::move(next);
    built.piece_vertices.push_back(std::move(piece_globals));
  }
  return built;
}

Graph build_cockade(const CockadeSpec& spec) { return build_cockade_tracked(spec).graph; }

std::string cockade_spec_to_json(const CockadeSpec& spec) {
  json j;
  j["pieces"] = json::array();
  for (PieceKind k : spec.pieces) j["pieces"].push_back(k == PieceKind::K8 ? "K8" : "K22222");
  j["glue"] = json::array();
  for (const GlueStep& s : spec.glue) {
    json g;
    g["target"] = s.target_piece;
    g["target_clique"] = s.target_clique;
    g["piece_clique"] = s.piece_clique;
    j["glue"].push_back(g);
  }
  return j.dump();
}

CockadeSpec cockade_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  CockadeSpec spec;
  for (const auto& p : j.at("pieces")) {
    std::string name = p.get<std::string>();
    if (name == "K8")
      spec.pieces.push_back(PieceKind::K8);
    else if (name == "K22222")
      spec.pieces.push_back(PieceKind::K22222);
    else
      throw std::invalid_argument("unknown piece kind: " + name);
  }
  for (const auto& g : j.at("glue")) {
    GlueStep s;
    s.target_piece = g.at("target").get<int>();
    auto tc = g.at("target_clique");
    auto pc = g.at("piece_clique");
    for (int i = 0; i < 5; ++i) {
      s.target_clique[i] = tc.at(i).get<int>();
      s.piece_clique[i] = pc.at(i).get<int>();
    }
    spec.glue.push_back(s);
  }
  return spec;
}

std::pair<CockadeSpec, Graph> random_cockade(int pieces, uint64_t seed) {
  if (pieces < 1) throw std::invalid_argument("at least one piece");
  std::mt19937_64 rng(seed);
  auto draw = [&](int k) { return static_cast<int>(rng() % static_cast<uint64_t>(k)); };

  CockadeSpec spec;
  spec.pieces.push_back(draw(2) == 0 ? PieceKind::K8 : PieceKind::K22222);
  BuiltCockade built = build_cockade_tracked(spec);

  // transversal cliques for K22222 pieces, arbitrary 5-subsets for K8 pieces
  auto random_piece_clique = [&](PieceKind kind) {
    std::array<int, 5> clique{};
    if (kind == PieceKind::K22222) {
      for (int part = 0; part < 5; ++part) clique[part] = 2 * part + draw(2);
    } else {
      std::array<int, 8> ids{0, 1, 2, 3, 4, 5, 6, 7};
      for (int i = 0; i < 5; ++i) std::swap(ids[i], ids[i + draw(8 - i)]);
      std::copy(ids.begin(), ids.begin() + 5, clique.begin());
      std::sort(clique.begin(), clique.end());
    }
    return clique;
  };

  for (int p = 1; p < pieces; ++p) {
    PieceKind kind = draw(2) == 0 ? PieceKind::K8 : PieceKind::K22222;
    if (built.graph.order() + piece_order(kind) - 5 > kMaxVertices) kind = PieceKind::K8;
    if (built.graph.order() + piece_order(kind) - 5 > kMaxVertices)
      throw std::invalid_argument("cockade exceeds 64 vertices");

    GlueStep step;
    step.target_piece = draw(p);
    PieceKind target_kind = spec.pieces[step.target_piece];
    std::array<int, 5> target_local = random_piece_clique(target_kind);
    for (int i = 0; i < 5; ++i)
      step.target_clique[i] = built.piece_vertices[step.target_piece][target_local[i]];
    // random identification order
    for (int i = 0; i < 5; ++i) std::swap(step.target_clique[i], step.target_clique[i + draw(5 - i)]);
    step.piece_clique = random_piece_clique(kind);

    spec.pieces.push_back(kind);
    spec.glue.push_back(step);
    built = build_cockade_tracked(spec);
  }
  return {spec, built.graph};
}

CockadeFamily k8_k22222_family() {
  CockadeFamily fam;
  fam.clique_size = 5;
  fam.law_a = 6;
  fam.law_b = 20;
  fam.is_piece = [](const Graph& g) {
    if (g.order() == 8) return g.edge_count() == 28;
    if (g.order() == 10) {
      for (int v = 0; v < 10; ++v)
        if (g.degree(v) != 8) return false;
      return true;
    }
    return false;
  };
  return fam;
}

CockadeFamily complete_piece_family(int piece_order, int clique_size) {
  int num = piece_order * (piece_order - 1) / 2 - clique_size * (clique_size - 1) / 2;
  if (num % (piece_order - clique_size) != 0)
    throw std::invalid_argument("no linear edge law for this family");
  CockadeFamily fam;
  fam.clique_size = clique_size;
  fam.law_a = num / (piece_order - clique_size);
  fam.law_b = fam.law_a * piece_order - piece_order * (piece_order - 1) / 2;
  fam.is_piece = [piece_order](const Graph& g) {
    return g.order() == piece_order && g.edge_count() == piece_order * (piece_order - 1) / 2;
  };
  return fam;
}

namespace {

struct Recognizer {
  const Graph& g;
  const CockadeFamily& fam;
  std::unordered_set<uint64_t> failed;

  bool satisfies_law(uint64_t mask) const {
    Graph sub = g.induced(mask);
    return sub.edge_count() == fam.law_a * sub.order() - fam.law_b;
  }

  bool rec(uint64_t mask, CockadeCertificate& cert) {
    Graph sub = g.induced(mask);
    if (sub.edge_count() != fam.law_a * sub.order() - fam.law_b) return false;
    if (fam.is_piece(sub)) {
      cert.final_leaf = VertexSet(mask);
      return true;
    }
    if (failed.contains(mask)) return false;
    for (uint64_t clique : cliques_within(g, mask, fam.clique_size)) {
      auto comps = g.components(mask & ~clique);
      if (comps.size() < 2) continue;
      for (uint64_t comp : comps) {
        uint64_t leaf = comp | clique;
        if (!fam.is_piece(g.induced(leaf))) continue;
        if (rec(mask & ~comp, cert)) {
          cert.peels.push_back({VertexSet(leaf), VertexSet(clique)});
          return true;
        }
      }
    }
    failed.insert(mask);
    return false;
  }
};

}  // namespace

std::optional<CockadeCertificate> recognize_cockade_family(const Graph& g,
                                                           const CockadeFamily& family) {
  CockadeCertificate cert;
  Recognizer rec{g, family, {}};
  if (!rec.rec(g.vertex_mask(), cert)) return std::nullopt;
  std::reverse(cert.peels.begin(), cert.peels.end());
  return cert;
}

std::optional<CockadeCertificate> recognize_cockade(const Graph& g) {
  return recognize_cockade_family(g, k8_k22222_family());
}

bool is_valid_certificate(const Graph& g, const CockadeFamily& family,
                          const CockadeCertificate& cert) {
  uint64_t remaining = g.vertex_mask();
  // replay the peels outermost first
  for (auto it = cert.peels.rbegin(); it != cert.peels.rend(); ++it) {
    const auto& peel = *it;
    uint64_t leaf = peel.leaf.bits, sep = peel.separator.bits;
    if ((leaf & ~remaining) != 0 || (sep & ~leaf) != 0) return false;
    if (std::popcount(sep) != family.clique_size) return false;
    if (!induces_clique(g, sep)) return false;
    if (!family.is_piece(g.induced(leaf))) return false;
    uint64_t removed = leaf & ~sep;
    if (removed == 0) return false;
    uint64_t rest = remaining & ~removed;
    if ((g.neighborhood_of_set(removed) & rest & ~sep) != 0) return false;  // separation
    remaining = rest;
  }
  return remaining == cert.final_leaf.bits && family.is_piece(g.induced(remaining));
}

std::vector<Graph> all_cockades_up_to(int max_order) {
  if (max_order < 8) return {};
  if (max_order > 13)
    throw std::invalid_argument("cockade enumeration supported up to 13 vertices");
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;

  auto consider = [&](const CockadeSpec& spec) {
    Graph g = build_cockade(spec);
    if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
  };

  for (PieceKind first : {PieceKind::K8, PieceKind::K22222}) {
    if (piece_order(first) > max_order) continue;
    CockadeSpec base{{first}, {}};
    consider(base);
    BuiltCockade built = build_cockade_tracked(base);
    for (PieceKind second : {PieceKind::K8, PieceKind::K22222}) {
      if (built.graph.order() + piece_order(second) - 5 > max_order) continue;
      Graph piece = piece_graph(second);
      auto target_cliques = cliques_within(built.graph, built.graph.vertex_mask(), 5);
      auto piece_cliques = cliques_within(piece, piece.vertex_mask(), 5);
      for (uint64_t tmask : target_cliques) {
        std::vector<int> tverts = VertexSet(tmask).to_vector();
        std::sort(tverts.begin(), tverts.end());
        for (uint64_t pmask : piece_cliques) {
          std::vector<int> pverts = VertexSet(pmask).to_vector();
          std::vector<int> perm = tverts;
          std::sort(perm.begin(), perm.end());
          do {
            CockadeSpec spec = base;
            spec.pieces.push_back(second);
            GlueStep step;
            step.target_piece = 0;
            for (int i = 0; i < 5; ++i) {
              step.target_clique[i] = perm[i];
              step.piece_clique[i] = pverts[i];
            }
            spec.glue.push_back(step);
            consider(spec);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return canonical_form(a) < canonical_form(b);
  });
  return out;
}

}  // namespace minorlab
