#include "distspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>

namespace distspec {

namespace {

void check_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, " + std::to_string(kMaxOrder) +
                                "], got " + std::to_string(order));
  }
}

void check_vertex_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw std::invalid_argument("vertex set must be nonempty");
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
    if (seen[v]) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
    seen[v] = true;
  }
}

}  // namespace

Graph::Graph(int order) : order_(order), words_per_row_(0) {
  check_order(order);
  words_per_row_ = (order + 63) / 64;
  bits_.assign(static_cast<std::size_t>(order) * words_per_row_, 0);
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(order_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_per_row_ + v / 64] >> (v % 64)) & 1u;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_per_row_,
          static_cast<std::size_t>(words_per_row_)};
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_per_row_; ++w) {
    for (auto bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(64 * w + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int order) : graph_(order) {}

void GraphBuilder::set(Vertex u, Vertex v, bool on) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  const auto wpr = static_cast<std::size_t>(graph_.words_per_row_);
  const auto bit_v = std::uint64_t{1} << (v % 64);
  const auto bit_u = std::uint64_t{1} << (u % 64);
  auto& word_uv = graph_.bits_[u * wpr + v / 64];
  auto& word_vu = graph_.bits_[v * wpr + u / 64];
  if (on) {
    word_uv |= bit_v;
    word_vu |= bit_u;
  } else {
    word_uv &= ~bit_v;
    word_vu &= ~bit_u;
  }
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  set(u, v, true);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  set(u, v, false);
  return *this;
}

Graph complete(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph path(int n) {
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star(int n) {
  if (n < 2) throw std::invalid_argument("star needs at least 2 vertices");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

Graph union_impl(const Graph& g1, const Graph& g2, bool cross_edges) {
  const int n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  if (cross_edges) {
    for (Vertex u = 0; u < n1; ++u)
      for (Vertex v = 0; v < g2.order(); ++v) b.add_edge(u, n1 + v);
  }
  return std::move(b).build();
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) { return union_impl(g1, g2, false); }

Graph join(const Graph& g1, const Graph& g2) { return union_impl(g1, g2, true); }

Graph scalar_union(int copies, const Graph& g) {
  if (copies < 1) throw std::invalid_argument("number of copies must be positive");
  Graph out = g;
  for (int i = 1; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (u == v || !g.adjacent(u, v)) {
    throw std::invalid_argument("{" + std::to_string(u) + ", " + std::to_string(v) +
                                "} is not an edge");
  }
  GraphBuilder b(g.order());
  for (auto [x, y] : g.edges()) b.add_edge(x, y);
  b.remove_edge(u, v);
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  check_vertex_set(g, perm);
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] >= 0) {
        seen[v] = true;
        comp.push_back(v);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix DistanceMatrix::from_entries(int order, std::vector<int> entries) {
  if (order < 1) throw std::invalid_argument("distance matrix order must be positive");
  const auto n = static_cast<std::size_t>(order);
  if (entries.size() != n * n) throw std::invalid_argument("distance matrix has wrong size");
  auto at = [&](std::size_t i, std::size_t j) { return entries[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) != at(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
      if (i != j && at(i, j) < 1) {
        throw std::invalid_argument("off-diagonal distances must be positive");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, j) > at(i, k) + at(k, j)) {
          throw std::invalid_argument("distance matrix violates the triangle inequality");
        }
      }
    }
  }
  return DistanceMatrix(order, std::move(entries));
}

int DistanceMatrix::max_entry() const { return *std::max_element(entries_.begin(), entries_.end()); }

DistanceMatrix DistanceMatrix::principal_submatrix(std::span<const Vertex> s) const {
  if (s.empty()) throw std::invalid_argument("principal submatrix needs a nonempty index set");
  const int m = static_cast<int>(s.size());
  std::vector<int> sub(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (s[i] < 0 || s[i] >= order_ || s[j] < 0 || s[j] >= order_) {
        throw std::invalid_argument("principal submatrix index out of range");
      }
      if (i != j && s[i] == s[j]) throw std::invalid_argument("duplicate submatrix index");
      sub[static_cast<std::size_t>(i) * m + j] = (*this)(s[i], s[j]);
    }
  }
  return DistanceMatrix(m, std::move(sub));
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] < 0) throw std::domain_error("distance matrix requires a connected graph");
      entries[static_cast<std::size_t>(s) * n + v] = dist[v];
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_vertex_set(g, s);
  const int m = static_cast<int>(s.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge(i, j);
  return std::move(b).build();
}

bool is_isometric_induced(const Graph& g, std::span<const Vertex> s) {
  if (s.size() < 2) throw std::invalid_argument("isometric check needs at least 2 vertices");
  const Graph h = induced_subgraph(g, s);
  if (!is_connected(h)) return false;
  const auto dh = distance_matrix(h);
  const int m = h.order();
  for (int i = 0; i < m; ++i) {
    const auto dg = bfs_distances(g, s[i]);
    for (int j = 0; j < m; ++j) {
      if (dh(i, j) != dg[s[j]]) return false;
    }
  }
  return true;
}

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g) {
  const int n = g.order();
  // Search for the middle edge b-c first; a hangs off b only, d off c only.
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex c : g.neighbors(b)) {
      for (Vertex a : g.neighbors(b)) {
        if (a == c || g.adjacent(a, c)) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d == b || d == a || g.adjacent(d, b) || g.adjacent(d, a)) continue;
          return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  }
  return out;
}

std::optional<std::vector<int>> is_union_of_cliques(const Graph& g) {
  std::vector<int> sizes;
  for (const auto& comp : components(g)) {
    const int k = static_cast<int>(comp.size());
    for (Vertex v : comp) {
      if (g.degree(v) != k - 1) return std::nullopt;
    }
    sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace distspec
