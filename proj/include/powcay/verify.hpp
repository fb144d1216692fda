#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powcay/symmetry.hpp"

namespace powcay {

/// Outcome of checking both halves of the power-graph/Cayley-graph
/// characterization on one group.
struct VerificationRow {
  std::string name;
  int order = 0;
  bool cyclic_p_group = false;
  bool pg_complete = false;
  bool pg_vertex_transitive = false;
  bool pg_cayley = false;
  bool dpg_cayley = false;
  std::optional<NotCayleyReason> pg_reason;
  std::optional<NotCayleyReason> dpg_reason;
  bool consistent = false;
};

/// True iff cyclic_p_group, pg_complete and pg_cayley agree, and the directed
/// power graph is not Cayley (order 1 exempt).
bool row_consistent(const VerificationRow& row);

VerificationRow verify_group(const std::string& name, const FiniteGroup& group, const SearchLimits& limits = {});

/// One row per catalog group of order <= max_order (1..15), in catalog order.
std::vector<VerificationRow> verify_theorem(int max_order, const SearchLimits& limits = {});

/// Throws kInconsistentRow naming the first inconsistent row.
void require_consistent(const std::vector<VerificationRow>& rows);

void write_rows_table(std::ostream& out, const std::vector<VerificationRow>& rows);
void write_rows_json_lines(std::ostream& out, const std::vector<VerificationRow>& rows);

}  // namespace powcay
