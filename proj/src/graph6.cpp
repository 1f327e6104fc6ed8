#include "distspec/graph6.hpp"

#include <stdexcept>

namespace distspec {

namespace {

constexpr int kOffset = 63;

std::size_t data_bytes(int n) {
  const auto bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace

Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  for (char ch : s) {
    const int byte = static_cast<unsigned char>(ch);
    if (byte < kOffset || byte > 126) {
      throw std::invalid_argument("graph6: byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(s[0]) - kOffset;
  if (n > kMaxGraph6Order) {
    throw std::invalid_argument("graph6: multi-byte order form is not supported (order > 62)");
  }
  if (n < 1) throw std::invalid_argument("graph6: order must be at least 1");
  const auto expected = data_bytes(n);
  if (s.size() != 1 + expected) {
    throw std::invalid_argument("graph6: expected " + std::to_string(1 + expected) +
                                " bytes for order " + std::to_string(n) + ", got " +
                                std::to_string(s.size()));
  }

  GraphBuilder b(n);
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const int byte = static_cast<unsigned char>(s[1 + bit / 6]) - kOffset;
    const bool on = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return on;
  };
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (next_bit()) b.add_edge(i, j);
    }
  }
  while (bit < 6 * expected) {
    if (next_bit()) throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw std::invalid_argument("graph6: order above 62 needs the multi-byte form");
  }
  std::string out(1 + data_bytes(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

}  // namespace distspec
