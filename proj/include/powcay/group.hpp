#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powcay/error.hpp"

namespace powcay {

/// Element of a finite group, as a dense index in [0, order).
using Element = int;

/// A finite group given by its full multiplication table.
///
/// Values are immutable once constructed. Every constructor validates the
/// group axioms (closure, two-sided identity, Latin-square rows and columns,
/// associativity) so downstream code may assume a genuine group.
class FiniteGroup {
 public:
  /// Tables up to this order are checked for associativity at construction.
  static constexpr int kEagerAssociativityBound = 128;

  /// Validates `table` (row-major, table[g][h] = g*h). Labels are optional
  /// display names; when empty, elements are labelled by their index.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table,
                                std::vector<std::string> labels = {});

  int order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element multiply(Element g, Element h) const {
    check_element(g);
    check_element(h);
    return table_[static_cast<std::size_t>(g) * order_ + h];
  }
  Element inverse(Element g) const {
    check_element(g);
    return inverses_[g];
  }

  const std::string& label(Element g) const {
    check_element(g);
    return labels_[g];
  }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::vector<std::vector<Element>> table() const;

  /// Runs the O(n^3) associativity check regardless of order. Throws
  /// kNotAssociative with the first violating triple.
  void verify_associativity() const;

  bool is_abelian() const;

  void check_element(Element g) const {
    if (g < 0 || g >= order_) {
      throw Error(ErrorCode::kElementOutOfRange,
                  "element " + std::to_string(g) + " not in [0, " + std::to_string(order_) + ")");
    }
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.identity_ == b.identity_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
};

// Catalog constructors. Element indexing is deterministic and documented per
// constructor; the identity is always element 0.

/// Z_n with a*b = (a + b) mod n.
FiniteGroup cyclic(int n);
/// Dihedral group of order 2m; r^i s^j has index j*m + i.
FiniteGroup dihedral(int m);
/// S_k on {0..k-1}; permutations in lexicographic order, product p*q = p o q.
FiniteGroup symmetric(int k);
/// Even permutations of {0..k-1} in lexicographic order.
FiniteGroup alternating(int k);
/// Dicyclic group <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1> of order 4m;
/// a^i x^j has index j*2m + i.
FiniteGroup dicyclic(int m);
/// Quaternion group Q_8, indexed 1, i, -1, -i, j, k, -j, -k (dicyclic(2)).
FiniteGroup quaternion();
/// G x H with the pair (i, j) at index i*|H| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// g^m for m >= 0 by repeated squaring.
Element power(const FiniteGroup& group, Element g, long long m);

/// Smallest m >= 1 with g^m = e.
int element_order(const FiniteGroup& group, Element g);

/// Positive powers g, g^2, ..., e in that order.
std::vector<Element> cyclic_subgroup(const FiniteGroup& group, Element g);

bool is_cyclic(const FiniteGroup& group);

/// The prime p when |G| = p^k; nullopt otherwise. The trivial group reports
/// p = 1 so that it still counts as a p-group.
std::optional<int> p_group_prime(const FiniteGroup& group);
inline bool is_p_group(const FiniteGroup& group) { return p_group_prime(group).has_value(); }
bool is_cyclic_p_group(const FiniteGroup& group);

/// Multiset of element orders, sorted ascending.
std::vector<int> element_order_profile(const FiniteGroup& group);

// Table text format: first line n, then n lines of n space-separated indices.
void write_table(std::ostream& out, const FiniteGroup& group);
FiniteGroup read_table(std::istream& in);

}  // namespace powcay
