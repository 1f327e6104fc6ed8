#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace distspec {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Largest order an explicit Graph may have. Family polynomials are evaluated
/// from their parameters, so only small graphs are ever materialized.
inline constexpr int kMaxOrder = 1024;

/// Simple undirected graph on vertices 0..order-1, stored as a symmetric bit
/// matrix. Immutable; build one with GraphBuilder or the constructors below.
class Graph {
 public:
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  /// Raw adjacency words of row v (bit j of word w is vertex 64*w + j).
  std::span<const std::uint64_t> row(Vertex v) const;

  bool operator==(const Graph& other) const = default;

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const;

  int order_;
  int words_per_row_;
  std::vector<std::uint64_t> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order);

  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
  int order() const noexcept { return graph_.order(); }

  Graph build() const& { return graph_; }
  Graph build() && { return std::move(graph_); }

 private:
  void set(Vertex u, Vertex v, bool on);

  Graph graph_;
};

// Named families. Paths are numbered in traversal order, the star's center is
// vertex 0.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph empty_graph(int n);

// Vertices of g2 are relabeled to follow those of g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
Graph scalar_union(int copies, const Graph& g);

Graph complement(const Graph& g);

/// Throws std::invalid_argument if {u, v} is not an edge.
Graph delete_edge(const Graph& g, Vertex u, Vertex v);

/// Applies `perm` so that vertex v of g becomes vertex perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// Symmetric matrix of shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  /// Validates symmetry, zero diagonal, positive off-diagonal entries and the
  /// triangle inequality.
  static DistanceMatrix from_entries(int order, std::vector<int> entries);

  int order() const noexcept { return order_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * order_ + j]; }
  int max_entry() const;
  std::span<const int> entries() const { return entries_; }

  /// Restriction to the rows and columns in s (in the given order).
  DistanceMatrix principal_submatrix(std::span<const Vertex> s) const;

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  friend DistanceMatrix distance_matrix(const Graph& g);
  DistanceMatrix(int order, std::vector<int> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order_;
  std::vector<int> entries_;
};

/// All-pairs BFS. Throws std::domain_error for a disconnected graph.
DistanceMatrix distance_matrix(const Graph& g);

/// Single-source BFS distances; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Subgraph induced on s, with s[i] becoming vertex i. s must be nonempty,
/// in range and free of duplicates.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// True iff the subgraph H induced on s is connected and preserves every
/// pairwise distance of g (H is an isometric induced subgraph). Requires
/// |s| >= 2 and a connected g.
bool is_isometric_induced(const Graph& g, std::span<const Vertex> s);

/// Some ordered 4-tuple (a, b, c, d) inducing the path a-b-c-d.
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

/// Component orders (sorted non-decreasing) if every component is complete.
std::optional<std::vector<int>> is_union_of_cliques(const Graph& g);

}  // namespace distspec
