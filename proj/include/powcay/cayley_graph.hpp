#pragma once

#include <vector>

#include "powcay/graph.hpp"
#include "powcay/group.hpp"
#include "powcay/permutation.hpp"

namespace powcay {

/// Subset C of G \ {e} that parameterizes a Cayley graph.
class ConnectionSet {
 public:
  /// Sorts and deduplicates `members`. Throws kElementOutOfRange or
  /// kIdentityInConnectionSet.
  ConnectionSet(const FiniteGroup& group, std::vector<Element> members);

  int parent_order() const noexcept { return parent_order_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool contains(Element g) const;

  bool is_inverse_closed(const FiniteGroup& group) const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;

 private:
  int parent_order_;
  std::vector<Element> members_;
};

/// Arc (g, h) iff g^-1 h is in C.
Digraph directed_cayley(const FiniteGroup& group, const ConnectionSet& connection);

/// Undirected Cayley graph; C must be inverse-closed (kNotInverseClosed).
SimpleGraph undirected_cayley(const FiniteGroup& group, const ConnectionSet& connection);

/// v -> a v. An automorphism of every Cayley graph on the group.
Permutation left_translation(const FiniteGroup& group, Element a);

}  // namespace powcay
