#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powcay/error.hpp"

namespace powcay {

using Vertex = int;

/// Square boolean matrix stored as packed 64-bit rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_) {}

  int size() const noexcept { return n_; }

  bool test(int r, int c) const noexcept { return (bits_[index(r, c)] >> (c & 63)) & 1u; }
  void set(int r, int c, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (value) bits_[index(r, c)] |= mask;
    else bits_[index(r, c)] &= ~mask;
  }

  std::span<const std::uint64_t> row(int r) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }
  int row_count(int r) const noexcept {
    int count = 0;
    for (auto w : row(r)) count += std::popcount(w);
    return count;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * words_ + static_cast<std::size_t>(c >> 6);
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Loop-free undirected graph on vertices 0..n-1.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  int order() const noexcept { return adj_.size(); }
  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_.test(u, v);
  }
  /// Adds or removes the edge {u, v}; u == v is rejected.
  void set_edge(Vertex u, Vertex v, bool present = true);

  int edge_count() const;
  const BitMatrix& matrix() const noexcept { return adj_; }

  void check_vertex(Vertex v) const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  BitMatrix adj_;
};

/// Loop-free directed graph on vertices 0..n-1.
class Digraph {
 public:
  explicit Digraph(int n);

  int order() const noexcept { return arcs_.size(); }
  bool has_arc(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return arcs_.test(u, v);
  }
  void set_arc(Vertex u, Vertex v, bool present = true);

  int arc_count() const;
  const BitMatrix& matrix() const noexcept { return arcs_; }

  void check_vertex(Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  BitMatrix arcs_;
};

int degree(const SimpleGraph& graph, Vertex v);
int in_degree(const Digraph& graph, Vertex v);
int out_degree(const Digraph& graph, Vertex v);

bool is_complete(const SimpleGraph& graph);
bool is_regular(const SimpleGraph& graph);
bool has_constant_in_out_degrees(const Digraph& graph);

/// Degrees sorted in descending order.
std::vector<int> degree_sequence(const SimpleGraph& graph);

/// Symmetrize arcs and drop orientation.
SimpleGraph underlying_undirected(const Digraph& graph);
/// Each edge becomes a pair of opposite arcs.
Digraph as_digraph(const SimpleGraph& graph);

// graph6 / digraph6 codecs, single-byte size header only (n <= 62).
inline constexpr int kMaxShortFormOrder = 62;

std::string to_graph6(const SimpleGraph& graph);
SimpleGraph from_graph6(std::string_view text);
std::string to_digraph6(const Digraph& graph);
Digraph from_digraph6(std::string_view text);

/// Graphviz output; `labels` may be empty, otherwise one label per vertex.
std::string to_dot(const SimpleGraph& graph, std::span<const std::string> labels = {});
std::string to_dot(const Digraph& graph, std::span<const std::string> labels = {});

}  // namespace powcay
