#include "distspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>

namespace distspec {

namespace {

// Adjacency of a graph with at most kMaxCanonicalOrder vertices, one bit mask
// per vertex.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonicalOrder> rows{};

  bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
};

int total_bits(int n) { return n * (n - 1) / 2; }

SmallGraph small_from_code(int n, AdjacencyCode code) {
  SmallGraph g;
  g.n = n;
  int bit = total_bits(n) - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1u) {
        g.rows[i] |= 1u << j;
        g.rows[j] |= 1u << i;
      }
    }
  }
  return g;
}

SmallGraph small_from_graph(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("canonical form supports order at most " + std::to_string(kMaxCanonicalOrder));
  }
  SmallGraph s;
  s.n = g.order();
  for (Vertex v = 0; v < s.n; ++v) s.rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  return s;
}

bool small_connected(const SmallGraph& g) {
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (auto f = frontier; f != 0; f &= f - 1) next |= g.rows[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1);
}

// Iterated degree refinement: colors are ranks of (color, sorted neighbor
// colors) signatures until the number of classes stabilizes.
std::vector<int> refined_colors(const SmallGraph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) color[v] = std::popcount(g.rows[v]);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (auto r = g.rows[v]; r != 0; r &= r - 1) around.push_back(color[std::countr_zero(r)]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < g.n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const int now = static_cast<int>(sorted.size());
    if (now == classes) break;
    classes = now;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : g_(g), bits_(total_bits(g.n)) {
    const auto color = refined_colors(g);
    order_.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return color[a] < color[b]; });
    cell_of_position_.resize(static_cast<std::size_t>(g.n));
    for (int pos = 0; pos < g.n; ++pos) cell_of_position_[pos] = color[order_[pos]];
    color_ = color;
    placed_.assign(static_cast<std::size_t>(g.n), -1);
  }

  CanonicalForm run() {
    search(0, 0, 0u);
    return {best_code_, best_labeling_};
  }

 private:
  void search(int pos, AdjacencyCode prefix, std::uint32_t used) {
    if (pos == g_.n) {
      if (!found_ || prefix < best_code_) {
        found_ = true;
        best_code_ = prefix;
        best_labeling_ = placed_;
      }
      return;
    }
    const int bits_after = (pos + 1) * pos / 2;
    for (int v = 0; v < g_.n; ++v) {
      if (((used >> v) & 1u) || color_[v] != cell_of_position_[pos]) continue;
      AdjacencyCode column = 0;
      for (int i = 0; i < pos; ++i) column = (column << 1) | (g_.adjacent(placed_[i], v) ? 1u : 0u);
      const AdjacencyCode next = (prefix << pos) | column;
      if (found_ && next > (best_code_ >> (bits_ - bits_after))) continue;
      placed_[pos] = v;
      search(pos + 1, next, used | (1u << v));
    }
  }

  const SmallGraph& g_;
  int bits_;
  std::vector<int> order_;
  std::vector<int> color_;
  std::vector<int> cell_of_position_;
  std::vector<int> placed_;
  bool found_ = false;
  AdjacencyCode best_code_ = 0;
  std::vector<Vertex> best_labeling_;
};

AdjacencyCode canonical_code(const SmallGraph& g) { return CanonicalSearch(g).run().code; }

void check_cap(int n, int cap) {
  if (cap > kHardEnumerationCap) {
    throw std::invalid_argument("enumeration cap cannot exceed " + std::to_string(kHardEnumerationCap));
  }
  if (n < 1 || n > cap) {
    throw std::invalid_argument("enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
  }
}

// Canonical codes of all graphs of each order, built by vertex augmentation.
const std::vector<AdjacencyCode>& all_codes(int n) {
  static std::mutex mutex;
  static std::vector<std::vector<AdjacencyCode>> levels{{}, {0}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= n) {
    const int m = static_cast<int>(levels.size());
    std::set<AdjacencyCode> found;
    for (AdjacencyCode parent : levels[m - 1]) {
      for (AdjacencyCode mask = 0; mask < (AdjacencyCode{1} << (m - 1)); ++mask) {
        found.insert(canonical_code(small_from_code(m, (parent << (m - 1)) | mask)));
      }
    }
    levels.emplace_back(found.begin(), found.end());
  }
  return levels[n];
}

}  // namespace

AdjacencyCode adjacency_code(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::invalid_argument("adjacency code supports order at most " + std::to_string(kMaxCanonicalOrder));
  }
  AdjacencyCode code = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  return code;
}

Graph graph_from_code(int order, AdjacencyCode code) {
  if (order < 1 || order > kMaxCanonicalOrder) throw std::invalid_argument("order out of range for adjacency code");
  const SmallGraph s = small_from_code(order, code);
  GraphBuilder b(order);
  for (int j = 1; j < order; ++j)
    for (int i = 0; i < j; ++i)
      if (s.adjacent(i, j)) b.add_edge(i, j);
  return std::move(b).build();
}

CanonicalForm canonical_form(const Graph& g) { return CanonicalSearch(small_from_graph(g)).run(); }

std::vector<Graph> enumerate_all(int n, int cap) {
  check_cap(n, cap);
  std::vector<Graph> out;
  for (AdjacencyCode code : all_codes(n)) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<Graph> enumerate_connected(int n, int cap) {
  check_cap(n, cap);
  std::vector<Graph> out;
  for (AdjacencyCode code : all_codes(n)) {
    if (small_connected(small_from_code(n, code))) out.push_back(graph_from_code(n, code));
  }
  return out;
}

}  // namespace distspec
