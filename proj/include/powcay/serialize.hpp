#pragma once

#include <span>
#include <string>

#include "powcay/graph.hpp"
#include "powcay/symmetry.hpp"

namespace powcay {

// JSON documents used by the command-line tool.
//
// Graph:   {"order": n, "directed": false, "edges": [[u, v], ...], "labels": [...]}
//          (directed graphs use "arcs"; "labels" only when supplied)
// Witness: {"directed": b, "order": n, "identity": e, "table": [[...]],
//           "connection": [...], "vertex_map": [[...]], "labels": [...]}
// vertex_map[g] is the image array of the automorphism realizing element g.

std::string graph_to_json(const SimpleGraph& graph, std::span<const std::string> labels = {});
std::string graph_to_json(const Digraph& graph, std::span<const std::string> labels = {});

std::string witness_to_json(const CayleyWitness& witness);
/// Rebuilds and revalidates a witness; throws powcay::Error on bad input.
CayleyWitness witness_from_json(const std::string& text);

}  // namespace powcay
