#include "minorlab/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace minorlab {

namespace {
constexpr int kOffset = 63;
}

std::string graph6_encode(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kOffset + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kOffset + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kOffset + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kOffset + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(kOffset + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(kOffset + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view text) {
  size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= text.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(text[pos++]);
    if (c < kOffset || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - kOffset;
  };

  int n;
  if (!text.empty() && text[0] == '~') {
    ++pos;
    if (pos < text.size() && text[pos] == '~')
      throw std::invalid_argument("graph6: orders above 64 unsupported");
    int a = take(), b = take(), c = take();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = take();
  }
  if (n > kMaxVertices) throw std::invalid_argument("graph6: orders above 64 unsupported");

  int bits_needed = n * (n - 1) / 2;
  int bytes_needed = (bits_needed + 5) / 6;
  if (text.size() != pos + static_cast<size_t>(bytes_needed))
    throw std::invalid_argument(text.size() > pos + static_cast<size_t>(bytes_needed)
                                    ? "graph6: trailing garbage"
                                    : "graph6: truncated input");

  std::vector<std::pair<int, int>> edges;
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (nbits == 0) {
        acc = take();
        nbits = 6;
      }
      if ((acc >> (nbits - 1)) & 1) edges.emplace_back(u, v);
      --nbits;
    }
  }
  if (nbits > 0 && (acc & ((1 << nbits) - 1)) != 0)
    throw std::invalid_argument("graph6: nonzero padding bits");
  return Graph::from_edges(n, edges);
}

}  // namespace minorlab
