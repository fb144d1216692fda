#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "powcay/graph.hpp"
#include "powcay/power_graph.hpp"

using namespace powcay;

namespace {

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v) g.set_edge(v, (v + 1) % n);
  return g;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected powcay::Error");
  return ErrorCode::kInvalidSpec;
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
  SimpleGraph g(3);
  g.set_edge(0, 2);
  CHECK(g.adjacent(2, 0));
  CHECK(code_of([&] { g.set_edge(1, 1); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([&] { g.adjacent(0, 3); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([] { SimpleGraph(0); }) == ErrorCode::kInvalidOrder);
  Digraph d(2);
  CHECK(code_of([&] { d.set_arc(0, 0); }) == ErrorCode::kVertexOutOfRange);
  CHECK(code_of([&] { in_degree(d, 2); }) == ErrorCode::kVertexOutOfRange);
}

TEST_CASE("degrees") {
  const auto k4 = complete(4);
  for (int v = 0; v < 4; ++v) CHECK(degree(k4, v) == 3);
  const SimpleGraph empty(5);
  for (int v = 0; v < 5; ++v) CHECK(degree(empty, v) == 0);

  const auto z4 = directed_power_graph(cyclic(4));
  CHECK(in_degree(z4, 0) == 3);
  CHECK(out_degree(z4, 0) == 0);
}

TEST_CASE("completeness and regularity") {
  CHECK(is_complete(SimpleGraph(1)));
  CHECK(is_complete(complete(8)));
  CHECK_FALSE(is_complete(undirected_power_graph(cyclic(6))));
  CHECK(is_regular(cycle(5)));
  CHECK_FALSE(is_regular(undirected_power_graph(symmetric(3))));
  CHECK(degree_sequence(undirected_power_graph(symmetric(3))) == std::vector<int>{5, 2, 2, 1, 1, 1});
  for (const auto& g : {cyclic(2), cyclic(9), symmetric(3), quaternion()}) {
    CHECK_FALSE(has_constant_in_out_degrees(directed_power_graph(g)));
  }
}

TEST_CASE("degree_sequence") {
  CHECK(degree_sequence(complete(4)) == std::vector<int>{3, 3, 3, 3});
  CHECK(degree_sequence(undirected_power_graph(cyclic(6))) == std::vector<int>{5, 5, 5, 4, 4, 3});
  CHECK(degree_sequence(undirected_power_graph(cyclic(8))) == std::vector<int>(8, 7));
}

TEST_CASE("handshake and completeness properties on random graphs") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    const auto g = oracle::random_graph(n, (trial % 5) / 4.0, rng);
    const auto seq = degree_sequence(g);
    CHECK(std::accumulate(seq.begin(), seq.end(), 0) == 2 * g.edge_count());
    CHECK(is_complete(g) == (seq == std::vector<int>(n, n - 1)));

    const auto d = oracle::random_digraph(n, 0.3, rng);
    int in_sum = 0, out_sum = 0;
    for (int v = 0; v < n; ++v) {
      in_sum += in_degree(d, v);
      out_sum += out_degree(d, v);
    }
    CHECK(in_sum == d.arc_count());
    CHECK(out_sum == d.arc_count());
    const auto u = underlying_undirected(d);
    for (int a = 0; a < n; ++a) {
      CHECK_FALSE(u.adjacent(a, a));
      for (int b = 0; b < n; ++b) CHECK(u.adjacent(a, b) == (d.has_arc(a, b) || d.has_arc(b, a)));
    }
  }
}

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(SimpleGraph(1)) == "@");
  CHECK(to_graph6(undirected_power_graph(cyclic(6))) == "E}zw");
  CHECK(from_graph6("C~\n") == complete(4));
}

TEST_CASE("digraph6 known encodings") {
  Digraph d(2);
  d.set_arc(0, 1);
  // n=2 -> 'A'; bits 0100 -> 010000 -> 16 + 63 = 'O'
  CHECK(to_digraph6(d) == "&AO");
  CHECK(from_digraph6("&AO") == d);
}

TEST_CASE("graph6 round trips on random graphs up to 62 vertices") {
  std::mt19937 rng(7);
  for (int n : {1, 2, 3, 5, 6, 7, 13, 31, 62}) {
    for (double density : {0.0, 0.2, 0.5, 1.0}) {
      const auto g = oracle::random_graph(n, density, rng);
      CHECK(from_graph6(to_graph6(g)) == g);
      const auto d = oracle::random_digraph(n, density, rng);
      CHECK(from_digraph6(to_digraph6(d)) == d);
    }
  }
}

TEST_CASE("graph6 error paths") {
  CHECK(code_of([] { to_graph6(SimpleGraph(63)); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([] { to_digraph6(Digraph(63)); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([] { from_graph6("~??~"); }) == ErrorCode::kUnsupportedOrder);
  CHECK(code_of([] { from_graph6(""); }) == ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { from_graph6("C~~"); }) == ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { from_graph6("C"); }) == ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { from_graph6("A`"); }) == ErrorCode::kMalformedEncoding);  // padding bit set
  CHECK(code_of([] { from_graph6("A "); }) == ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { from_graph6("&AO"); }) == ErrorCode::kMalformedEncoding);
  CHECK(code_of([] { from_digraph6("AO"); }) == ErrorCode::kMalformedEncoding);
  // loop bit on vertex 0: bits 1000 -> 100000 -> '_'
  CHECK(code_of([] { from_digraph6("&A_"); }) == ErrorCode::kMalformedEncoding);
}

TEST_CASE("dot output") {
  SimpleGraph g(2);
  g.set_edge(0, 1);
  const std::vector<std::string> labels{"e", "a"};
  CHECK(to_dot(g, labels) == "graph G {\n  0 [label=\"e\"];\n  1 [label=\"a\"];\n  0 -- 1;\n}\n");
  Digraph d(2);
  d.set_arc(1, 0);
  CHECK(to_dot(d) == "digraph G {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  1 -> 0;\n}\n");
}
