#pragma once

#include "powcay/graph.hpp"
#include "powcay/group.hpp"

namespace powcay {

/// Arc x -> y iff x != y and y is a positive power of x.
Digraph directed_power_graph(const FiniteGroup& group);

/// x ~ y iff x != y and one of them is a positive power of the other.
SimpleGraph undirected_power_graph(const FiniteGroup& group);

}  // namespace powcay
