#include "powcay/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace powcay {

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidOrder, "graph order must be positive");
}

void check_vertex_in(Vertex v, int n) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " not in [0, " + std::to_string(n) + ")");
  }
}

constexpr char kOffset = 63;

// Packs bits six at a time, most significant first, padding the final group
// with zeros.
void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      value <<= 1;
      if (i + k < bits.size() && bits[i + k]) value |= 1;
    }
    out += static_cast<char>(value + kOffset);
  }
}

std::vector<bool> unpack_bits(std::string_view body, std::size_t bit_count) {
  if (body.size() != (bit_count + 5) / 6) {
    throw Error(ErrorCode::kMalformedEncoding, "expected " + std::to_string((bit_count + 5) / 6) +
                                                   " data bytes, got " + std::to_string(body.size()));
  }
  std::vector<bool> bits;
  bits.reserve(body.size() * 6);
  for (char ch : body) {
    const int value = static_cast<unsigned char>(ch) - kOffset;
    if (value < 0 || value > 63) throw Error(ErrorCode::kMalformedEncoding, "byte outside printable range");
    for (int k = 5; k >= 0; --k) bits.push_back((value >> k) & 1);
  }
  for (std::size_t i = bit_count; i < bits.size(); ++i) {
    if (bits[i]) throw Error(ErrorCode::kMalformedEncoding, "nonzero padding bits");
  }
  bits.resize(bit_count);
  return bits;
}

int decode_order(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kMalformedEncoding, "empty encoding");
  const int header = static_cast<unsigned char>(text.front());
  if (header == 126) throw Error(ErrorCode::kUnsupportedOrder, "multi-byte size header (n > 62)");
  const int n = header - kOffset;
  if (n < 0 || n > kMaxShortFormOrder) throw Error(ErrorCode::kMalformedEncoding, "bad size header");
  if (n == 0) throw Error(ErrorCode::kMalformedEncoding, "zero-vertex graph");
  return n;
}

std::string_view trim_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

std::string dot_label(std::span<const std::string> labels, Vertex v) {
  std::string s = labels.empty() ? std::to_string(v) : labels[v];
  std::string escaped;
  for (char c : s) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += c;
  }
  return escaped;
}

std::string dot_text(const BitMatrix& m, bool directed, std::span<const std::string> labels) {
  const int n = m.size();
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::kVertexOutOfRange, "label count does not match order");
  }
  std::ostringstream out;
  out << (directed ? "digraph G {\n" : "graph G {\n");
  for (Vertex v = 0; v < n; ++v) out << "  " << v << " [label=\"" << dot_label(labels, v) << "\"];\n";
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (m.test(u, v)) out << "  " << u << (directed ? " -> " : " -- ") << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : adj_((check_order(n), n)) {}

void SimpleGraph::check_vertex(Vertex v) const { check_vertex_in(v, order()); }

void SimpleGraph::set_edge(Vertex u, Vertex v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::kVertexOutOfRange, "loop at vertex " + std::to_string(u));
  adj_.set(u, v, present);
  adj_.set(v, u, present);
}

int SimpleGraph::edge_count() const {
  int total = 0;
  for (Vertex v = 0; v < order(); ++v) total += adj_.row_count(v);
  return total / 2;
}

Digraph::Digraph(int n) : arcs_((check_order(n), n)) {}

void Digraph::check_vertex(Vertex v) const { check_vertex_in(v, order()); }

void Digraph::set_arc(Vertex u, Vertex v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::kVertexOutOfRange, "loop at vertex " + std::to_string(u));
  arcs_.set(u, v, present);
}

int Digraph::arc_count() const {
  int total = 0;
  for (Vertex v = 0; v < order(); ++v) total += arcs_.row_count(v);
  return total;
}

int degree(const SimpleGraph& graph, Vertex v) {
  graph.check_vertex(v);
  return graph.matrix().row_count(v);
}

int out_degree(const Digraph& graph, Vertex v) {
  graph.check_vertex(v);
  return graph.matrix().row_count(v);
}

int in_degree(const Digraph& graph, Vertex v) {
  graph.check_vertex(v);
  int count = 0;
  for (Vertex u = 0; u < graph.order(); ++u) count += graph.matrix().test(u, v);
  return count;
}

bool is_complete(const SimpleGraph& graph) {
  for (Vertex v = 0; v < graph.order(); ++v) {
    if (degree(graph, v) != graph.order() - 1) return false;
  }
  return true;
}

bool is_regular(const SimpleGraph& graph) {
  const int d = degree(graph, 0);
  for (Vertex v = 1; v < graph.order(); ++v) {
    if (degree(graph, v) != d) return false;
  }
  return true;
}

bool has_constant_in_out_degrees(const Digraph& graph) {
  const int in0 = in_degree(graph, 0), out0 = out_degree(graph, 0);
  for (Vertex v = 1; v < graph.order(); ++v) {
    if (in_degree(graph, v) != in0 || out_degree(graph, v) != out0) return false;
  }
  return true;
}

std::vector<int> degree_sequence(const SimpleGraph& graph) {
  std::vector<int> seq;
  seq.reserve(graph.order());
  for (Vertex v = 0; v < graph.order(); ++v) seq.push_back(degree(graph, v));
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

SimpleGraph underlying_undirected(const Digraph& graph) {
  SimpleGraph out(graph.order());
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Vertex v = 0; v < graph.order(); ++v)
      if (graph.matrix().test(u, v)) out.set_edge(u, v);
  return out;
}

Digraph as_digraph(const SimpleGraph& graph) {
  Digraph out(graph.order());
  for (Vertex u = 0; u < graph.order(); ++u)
    for (Vertex v = 0; v < graph.order(); ++v)
      if (graph.matrix().test(u, v)) out.set_arc(u, v);
  return out;
}

std::string to_graph6(const SimpleGraph& graph) {
  const int n = graph.order();
  if (n > kMaxShortFormOrder) throw Error(ErrorCode::kUnsupportedOrder, "graph6 limited to n <= 62");
  std::string out(1, static_cast<char>(n + kOffset));
  std::vector<bool> bits;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) bits.push_back(graph.matrix().test(i, j));
  append_bits(out, bits);
  return out;
}

SimpleGraph from_graph6(std::string_view text) {
  text = trim_line(text);
  if (!text.empty() && (text.front() == '&' || text.front() == ':' || text.front() == ';')) {
    throw Error(ErrorCode::kMalformedEncoding, "not a graph6 string");
  }
  const int n = decode_order(text);
  const auto bits = unpack_bits(text.substr(1), static_cast<std::size_t>(n) * (n - 1) / 2);
  SimpleGraph graph(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (bits[k++]) graph.set_edge(i, j);
  return graph;
}

std::string to_digraph6(const Digraph& graph) {
  const int n = graph.order();
  if (n > kMaxShortFormOrder) throw Error(ErrorCode::kUnsupportedOrder, "digraph6 limited to n <= 62");
  std::string out = "&";
  out += static_cast<char>(n + kOffset);
  std::vector<bool> bits;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j) bits.push_back(graph.matrix().test(i, j));
  append_bits(out, bits);
  return out;
}

Digraph from_digraph6(std::string_view text) {
  text = trim_line(text);
  if (text.empty() || text.front() != '&') throw Error(ErrorCode::kMalformedEncoding, "digraph6 must start with '&'");
  text.remove_prefix(1);
  const int n = decode_order(text);
  const auto bits = unpack_bits(text.substr(1), static_cast<std::size_t>(n) * n);
  Digraph graph(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (!bits[static_cast<std::size_t>(i) * n + j]) continue;
      if (i == j) throw Error(ErrorCode::kMalformedEncoding, "loop at vertex " + std::to_string(i));
      graph.set_arc(i, j);
    }
  }
  return graph;
}

std::string to_dot(const SimpleGraph& graph, std::span<const std::string> labels) {
  return dot_text(graph.matrix(), false, labels);
}

std::string to_dot(const Digraph& graph, std::span<const std::string> labels) {
  return dot_text(graph.matrix(), true, labels);
}

}  // namespace powcay
