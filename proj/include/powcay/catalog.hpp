#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "powcay/group.hpp"

namespace powcay {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
  int order() const noexcept { return group.order(); }
};

/// One representative of every isomorphism class of order <= 15 (28 groups),
/// sorted by order.
const std::vector<CatalogEntry>& catalog();

/// Builds a group from `Zn | Dn | Sn | An | Q8 | Dicn | <spec>x<spec>`.
/// Products associate to the right, so Z2xZ2xZ2 is Z2 x (Z2 x Z2).
FiniteGroup parse_group_spec(std::string_view spec);

}  // namespace powcay
