#include "powcay/verify.hpp"

#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "powcay/catalog.hpp"
#include "powcay/power_graph.hpp"

namespace powcay {

bool row_consistent(const VerificationRow& row) {
  const bool undirected = row.cyclic_p_group == row.pg_complete && row.pg_complete == row.pg_cayley;
  return undirected && (row.order == 1 || !row.dpg_cayley);
}

VerificationRow verify_group(const std::string& name, const FiniteGroup& group, const SearchLimits& limits) {
  VerificationRow row;
  row.name = name;
  row.order = group.order();
  row.cyclic_p_group = is_cyclic_p_group(group);

  const SimpleGraph pg = undirected_power_graph(group);
  row.pg_complete = is_complete(pg);
  row.pg_vertex_transitive = is_vertex_transitive(pg, limits);
  const CayleyVerdict pg_verdict = is_cayley(pg, limits);
  row.pg_cayley = is_cayley_success(pg_verdict);
  if (!row.pg_cayley) row.pg_reason = std::get<NotCayley>(pg_verdict).reason;

  const CayleyVerdict dpg_verdict = is_cayley(directed_power_graph(group), limits);
  row.dpg_cayley = is_cayley_success(dpg_verdict);
  if (!row.dpg_cayley) row.dpg_reason = std::get<NotCayley>(dpg_verdict).reason;

  row.consistent = row_consistent(row);
  return row;
}

std::vector<VerificationRow> verify_theorem(int max_order, const SearchLimits& limits) {
  if (max_order < 1 || max_order > 15) {
    throw Error(ErrorCode::kInvalidOrder, "max order must be in [1, 15], got " + std::to_string(max_order));
  }
  std::vector<VerificationRow> rows;
  for (const auto& entry : catalog()) {
    if (entry.order() <= max_order) rows.push_back(verify_group(entry.name, entry.group, limits));
  }
  return rows;
}

void require_consistent(const std::vector<VerificationRow>& rows) {
  for (const auto& row : rows) {
    if (!row.consistent) throw Error(ErrorCode::kInconsistentRow, row.name);
  }
}

namespace {

const char* mark(bool b) { return b ? "yes" : "no"; }

std::string reason_text(const std::optional<NotCayleyReason>& reason) {
  return reason ? std::string(to_string(*reason)) : "-";
}

}  // namespace

void write_rows_table(std::ostream& out, const std::vector<VerificationRow>& rows) {
  out << std::left << std::setw(10) << "group" << std::setw(6) << "n" << std::setw(8) << "cyc-p"
      << std::setw(10) << "complete" << std::setw(8) << "vt" << std::setw(8) << "pg-cay" << std::setw(19)
      << "pg-reason" << std::setw(9) << "dpg-cay" << std::setw(19) << "dpg-reason"
      << "ok\n";
  bool trivial_seen = false;
  for (const auto& r : rows) {
    out << std::left << std::setw(10) << r.name << std::setw(6) << r.order << std::setw(8) << mark(r.cyclic_p_group)
        << std::setw(10) << mark(r.pg_complete) << std::setw(8) << mark(r.pg_vertex_transitive) << std::setw(8)
        << mark(r.pg_cayley) << std::setw(19) << reason_text(r.pg_reason) << std::setw(9) << mark(r.dpg_cayley)
        << std::setw(19) << reason_text(r.dpg_reason) << mark(r.consistent) << '\n';
    trivial_seen |= r.order == 1;
  }
  if (trivial_seen) {
    out << "note: order 1 is exempt from the directed check; the one-vertex digraph is the Cayley graph "
           "of the trivial group with empty connection set.\n";
  }
}

void write_rows_json_lines(std::ostream& out, const std::vector<VerificationRow>& rows) {
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["order"] = r.order;
    j["cyclic_p_group"] = r.cyclic_p_group;
    j["pg_complete"] = r.pg_complete;
    j["pg_vertex_transitive"] = r.pg_vertex_transitive;
    j["pg_cayley"] = r.pg_cayley;
    j["pg_reason"] = r.pg_reason ? nlohmann::ordered_json(std::string(to_string(*r.pg_reason))) : nullptr;
    j["dpg_cayley"] = r.dpg_cayley;
    j["dpg_reason"] = r.dpg_reason ? nlohmann::ordered_json(std::string(to_string(*r.dpg_reason))) : nullptr;
    j["dpg_exempt"] = r.order == 1;
    j["consistent"] = r.consistent;
    out << j.dump() << '\n';
  }
}

}  // namespace powcay
