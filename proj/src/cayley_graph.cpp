#include "powcay/cayley_graph.hpp"

#include <algorithm>

namespace powcay {

ConnectionSet::ConnectionSet(const FiniteGroup& group, std::vector<Element> members)
    : parent_order_(group.order()), members_(std::move(members)) {
  for (Element g : members_) {
    group.check_element(g);
    if (g == group.identity()) {
      throw Error(ErrorCode::kIdentityInConnectionSet, "identity " + std::to_string(g) + " in connection set");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ConnectionSet::contains(Element g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool ConnectionSet::is_inverse_closed(const FiniteGroup& group) const {
  return std::all_of(members_.begin(), members_.end(), [&](Element g) { return contains(group.inverse(g)); });
}

namespace {

void check_parent(const FiniteGroup& group, const ConnectionSet& connection) {
  if (connection.parent_order() != group.order()) {
    throw Error(ErrorCode::kElementOutOfRange, "connection set belongs to a group of order " +
                                                   std::to_string(connection.parent_order()));
  }
}

}  // namespace

Digraph directed_cayley(const FiniteGroup& group, const ConnectionSet& connection) {
  check_parent(group, connection);
  Digraph graph(group.order());
  // g^-1 h = c  <=>  h = g c
  for (Element g = 0; g < group.order(); ++g)
    for (Element c : connection.members()) graph.set_arc(g, group.multiply(g, c));
  return graph;
}

SimpleGraph undirected_cayley(const FiniteGroup& group, const ConnectionSet& connection) {
  check_parent(group, connection);
  for (Element c : connection.members()) {
    if (!connection.contains(group.inverse(c))) {
      throw Error(ErrorCode::kNotInverseClosed, "element " + std::to_string(c) + " has inverse " +
                                                    std::to_string(group.inverse(c)) + " outside the set");
    }
  }
  return underlying_undirected(directed_cayley(group, connection));
}

Permutation left_translation(const FiniteGroup& group, Element a) {
  group.check_element(a);
  std::vector<int> image(group.order());
  for (Element v = 0; v < group.order(); ++v) image[v] = group.multiply(a, v);
  return Permutation(std::move(image));
}

}  // namespace powcay
