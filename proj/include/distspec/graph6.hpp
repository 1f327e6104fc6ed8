#pragma once

#include <string>
#include <string_view>

#include "distspec/graph.hpp"

namespace distspec {

/// Largest order representable in the single-byte size form of graph6.
inline constexpr int kMaxGraph6Order = 62;

/// Decodes a graph6 string (short form only). Throws std::invalid_argument on
/// a bad length, a byte outside 63..126, nonzero padding, or the multi-byte
/// size form.
Graph parse_graph6(std::string_view s);

/// Exact inverse of parse_graph6.
std::string emit_graph6(const Graph& g);

}  // namespace distspec
