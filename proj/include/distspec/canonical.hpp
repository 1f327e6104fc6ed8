#pragma once

#include <cstdint>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Orders up to this fit the upper-triangle encoding in 64 bits.
inline constexpr int kMaxCanonicalOrder = 11;

/// Upper-triangle adjacency bits in graph6 pair order ((0,1), (0,2), (1,2),
/// (0,3), ...), first pair most significant.
using AdjacencyCode = std::uint64_t;

AdjacencyCode adjacency_code(const Graph& g);
Graph graph_from_code(int order, AdjacencyCode code);

struct CanonicalForm {
  AdjacencyCode code;
  /// labeling[i] is the vertex of the input placed at canonical position i.
  std::vector<Vertex> labeling;
};

/// Lexicographically minimal adjacency code over all vertex orderings that
/// respect an isomorphism-invariant refinement of the degree partition. Two
/// graphs are isomorphic iff their canonical codes match.
CanonicalForm canonical_form(const Graph& g);

/// Largest order the census enumerator accepts at all.
inline constexpr int kHardEnumerationCap = 8;
inline constexpr int kDefaultEnumerationCap = 7;

/// One representative (the canonical relabeling) per isomorphism class of
/// connected graphs on n vertices, sorted by canonical code. Throws
/// std::invalid_argument if n < 1 or n > cap (cap itself at most 8).
std::vector<Graph> enumerate_connected(int n, int cap = kDefaultEnumerationCap);

/// Same, for all graphs (connected or not).
std::vector<Graph> enumerate_all(int n, int cap = kDefaultEnumerationCap);

}  // namespace distspec
