#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "powcay/cayley_graph.hpp"
#include "powcay/graph.hpp"
#include "powcay/group.hpp"
#include "powcay/permutation.hpp"

namespace powcay {

struct SearchLimits {
  /// Largest order for automorphism enumeration and transitivity tests.
  int max_automorphism_order = 16;
  /// Largest order for the regular-subgroup search inside is_cayley.
  int max_cayley_order = 12;
  /// Enumeration aborts with kSearchBoundExceeded past this many automorphisms.
  std::size_t max_automorphisms = 2'000'000;
  /// Complete and edgeless graphs are answered with Z_n directly instead of
  /// enumerating their n! automorphisms.
  bool trivial_graph_fast_path = true;
};

/// All automorphisms, sorted lexicographically by image array.
std::vector<Permutation> automorphisms(const SimpleGraph& graph, const SearchLimits& limits = {});
std::vector<Permutation> automorphisms(const Digraph& graph, const SearchLimits& limits = {});

/// An automorphism sending `from` to `to`, if any.
std::optional<Permutation> find_automorphism(const Digraph& graph, Vertex from, Vertex to,
                                             const SearchLimits& limits = {});

bool is_vertex_transitive(const SimpleGraph& graph, const SearchLimits& limits = {});
bool is_vertex_transitive(const Digraph& graph, const SearchLimits& limits = {});

/// A subgroup of `auts` acting regularly on {0..n-1}, returned indexed by the
/// image of vertex 0 (entry v maps 0 to v). Candidates are tried in the order
/// given, so a lexicographically sorted input gives a deterministic answer.
std::optional<std::vector<Permutation>> find_regular_subgroup(std::span<const Permutation> auts, int n);

/// A graph presented as a Cayley graph: vertex_map[g] is the automorphism
/// realizing group element g, and element g sits at vertex vertex_map[g](0).
struct CayleyWitness {
  FiniteGroup group;
  ConnectionSet connection;
  std::vector<Permutation> vertex_map;
  bool directed = false;

  Vertex vertex_of(Element g) const { return vertex_map.at(g)(0); }
};

enum class NotCayleyReason { kNotRegularDegree, kNotVertexTransitive, kNoRegularSubgroup };
std::string_view to_string(NotCayleyReason reason);

struct NotCayley {
  NotCayleyReason reason;
};

using CayleyVerdict = std::variant<CayleyWitness, NotCayley>;

inline bool is_cayley_success(const CayleyVerdict& verdict) {
  return std::holds_alternative<CayleyWitness>(verdict);
}

/// Decides whether the graph is a Cayley graph of some group. Rejections are
/// tried in order: degree constancy, vertex-transitivity, regular subgroup
/// search; the first failing test is reported.
CayleyVerdict is_cayley(const SimpleGraph& graph, const SearchLimits& limits = {});
CayleyVerdict is_cayley(const Digraph& graph, const SearchLimits& limits = {});

/// Rebuilds the Cayley graph of the witness on the original vertex labels.
Digraph reconstruct_directed(const CayleyWitness& witness);
SimpleGraph reconstruct_undirected(const CayleyWitness& witness);

}  // namespace powcay
