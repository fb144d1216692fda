#include "powcay/power_graph.hpp"

namespace powcay {

// Powers of x cycle with period ord(x), so walking x, x^2, ... up to the
// identity visits every positive power exactly once.
Digraph directed_power_graph(const FiniteGroup& group) {
  Digraph graph(group.order());
  for (Element x = 0; x < group.order(); ++x) {
    for (Element y = x; ; y = group.multiply(y, x)) {
      if (y != x) graph.set_arc(x, y);
      if (y == group.identity()) break;
    }
  }
  return graph;
}

SimpleGraph undirected_power_graph(const FiniteGroup& group) {
  return underlying_undirected(directed_power_graph(group));
}

}  // namespace powcay
