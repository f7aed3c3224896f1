#pragma once

#include <string>
#include <string_view>

#include "minorlab/graph.hpp"

namespace minorlab {

// Standard graph6 text encoding, restricted to n <= 64.  The header is one
// byte n+63 for n <= 62, or '~' followed by three bytes holding n in 18 bits;
// the body packs the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ... six
// bits per byte, each byte offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace minorlab
