// Command-line front end: build power and Cayley graphs, inspect their
// symmetry, and run the catalog verification.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powcay/catalog.hpp"
#include "powcay/cayley_graph.hpp"
#include "powcay/graph.hpp"
#include "powcay/power_graph.hpp"
#include "powcay/serialize.hpp"
#include "powcay/symmetry.hpp"
#include "powcay/verify.hpp"

namespace {

using namespace powcay;

struct GroupSource {
  std::string spec;
  std::string table_file;

  FiniteGroup load() const {
    if (!table_file.empty()) {
      std::ifstream in(table_file);
      if (!in) throw Error(ErrorCode::kInvalidSpec, "cannot open " + table_file);
      return read_table(in);
    }
    if (spec.empty()) throw Error(ErrorCode::kInvalidSpec, "one of --group or --table is required");
    return parse_group_spec(spec);
  }
};

void add_group_options(CLI::App* cmd, GroupSource& source) {
  auto* group = cmd->add_option("--group", source.spec, "Group spec: Zn | Dn | Sn | An | Q8 | Dicn | <spec>x<spec>");
  auto* table = cmd->add_option("--table", source.table_file, "Multiplication table file");
  group->excludes(table);
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorCode::kInvalidSpec, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

template <class Graph>
void emit_graph(std::ostream& out, const Graph& graph, const std::string& format, const std::vector<std::string>& labels) {
  if (format == "graph6") {
    if constexpr (std::is_same_v<Graph, Digraph>) out << to_digraph6(graph) << '\n';
    else out << to_graph6(graph) << '\n';
  } else if (format == "dot") {
    out << to_dot(graph, labels);
  } else {
    out << graph_to_json(graph, labels) << '\n';
  }
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw Error(ErrorCode::kInvalidSpec, "bad element index '" + item + "'");
    out.push_back(value);
  }
  return out;
}

// A batch file holds one graph6 or digraph6 string per line.
struct LoadedGraph {
  bool directed;
  SimpleGraph simple{1};
  Digraph arcs{1};
  std::string source;
};

std::vector<LoadedGraph> read_batch(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorCode::kInvalidSpec, "cannot open " + path);
    in = &file;
  }
  std::vector<LoadedGraph> graphs;
  std::string line;
  while (std::getline(*in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    LoadedGraph g{line.front() == '&', SimpleGraph(1), Digraph(1), line};
    if (g.directed) g.arcs = from_digraph6(line);
    else g.simple = from_graph6(line);
    graphs.push_back(std::move(g));
  }
  return graphs;
}

std::string verdict_text(const CayleyVerdict& verdict) {
  if (const auto* no = std::get_if<NotCayley>(&verdict)) return "NotCayley(" + std::string(to_string(no->reason)) + ")";
  const auto& w = std::get<CayleyWitness>(verdict);
  return "Cayley(order " + std::to_string(w.group.order()) + ", connection size " + std::to_string(w.connection.size()) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power graphs, Cayley graphs and Cayley-graph recognition for small finite groups"};
  app.require_subcommand(1);

  GroupSource source;
  std::string format = "graph6";
  std::string out_path;
  bool directed = false;

  auto* power_cmd = app.add_subcommand("power", "Power graph of a group");
  add_group_options(power_cmd, source);
  power_cmd->add_flag("--directed,!--undirected", directed, "Directed power graph (default undirected)");
  power_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  power_cmd->add_option("--out", out_path);

  std::string set_text;
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley graph of a group and connection set");
  add_group_options(cayley_cmd, source);
  cayley_cmd->add_option("--set", set_text, "Comma-separated element indices")->required();
  cayley_cmd->add_flag("--directed,!--undirected", directed, "Directed Cayley graph (default undirected)");
  cayley_cmd->add_option("--format", format)->check(CLI::IsMember({"graph6", "dot", "json"}));
  cayley_cmd->add_option("--out", out_path);

  std::string in_path;
  std::string report_format = "table";
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of each graph in a graph6/digraph6 file");
  aut_cmd->add_option("--in", in_path, "Input file ('-' for stdin)")->required();
  aut_cmd->add_option("--format", report_format)->check(CLI::IsMember({"table", "json"}));
  aut_cmd->add_option("--out", out_path);

  std::string witness_path;
  auto* cayley_test_cmd = app.add_subcommand("is-cayley", "Decide whether each graph is a Cayley graph");
  cayley_test_cmd->add_option("--in", in_path, "Input file ('-' for stdin)")->required();
  cayley_test_cmd->add_option("--witness", witness_path, "Write witnesses as JSON lines");
  cayley_test_cmd->add_option("--format", report_format)->check(CLI::IsMember({"table", "json"}));
  cayley_test_cmd->add_option("--out", out_path);

  int max_order = 15;
  auto* verify_cmd = app.add_subcommand("verify", "Check the power-graph characterization on the group catalog");
  verify_cmd->add_option("--max-order", max_order)->check(CLI::Range(1, 15));
  verify_cmd->add_option("--format", report_format)->check(CLI::IsMember({"table", "json"}));
  verify_cmd->add_option("--out", out_path);

  auto* table_cmd = app.add_subcommand("table", "Print a group's multiplication table");
  add_group_options(table_cmd, source);
  table_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    Output output(out_path);
    std::ostream& out = output.stream();

    if (*power_cmd) {
      const FiniteGroup group = source.load();
      if (directed) emit_graph(out, directed_power_graph(group), format, group.labels());
      else emit_graph(out, undirected_power_graph(group), format, group.labels());
    } else if (*cayley_cmd) {
      const FiniteGroup group = source.load();
      const ConnectionSet connection(group, parse_index_list(set_text));
      if (directed) emit_graph(out, directed_cayley(group, connection), format, group.labels());
      else emit_graph(out, undirected_cayley(group, connection), format, group.labels());
    } else if (*aut_cmd) {
      for (const auto& g : read_batch(in_path)) {
        const auto auts = g.directed ? automorphisms(g.arcs) : automorphisms(g.simple);
        if (report_format == "json") {
          nlohmann::ordered_json j;
          j["graph"] = g.source;
          j["count"] = auts.size();
          nlohmann::ordered_json list = nlohmann::ordered_json::array();
          for (const auto& p : auts) list.push_back(p.image());
          j["automorphisms"] = std::move(list);
          out << j.dump() << '\n';
        } else {
          out << g.source << ": " << auts.size() << " automorphisms\n";
          for (const auto& p : auts) out << "  " << p.to_cycles() << '\n';
        }
      }
    } else if (*cayley_test_cmd) {
      std::ofstream witness_out;
      if (!witness_path.empty()) {
        witness_out.open(witness_path);
        if (!witness_out) throw Error(ErrorCode::kInvalidSpec, "cannot write " + witness_path);
      }
      for (const auto& g : read_batch(in_path)) {
        const CayleyVerdict verdict = g.directed ? is_cayley(g.arcs) : is_cayley(g.simple);
        if (report_format == "json") {
          nlohmann::ordered_json j;
          j["graph"] = g.source;
          j["cayley"] = is_cayley_success(verdict);
          if (const auto* no = std::get_if<NotCayley>(&verdict)) j["reason"] = std::string(to_string(no->reason));
          out << j.dump() << '\n';
        } else {
          out << g.source << ": " << verdict_text(verdict) << '\n';
        }
        if (witness_out.is_open() && is_cayley_success(verdict)) {
          witness_out << witness_to_json(std::get<CayleyWitness>(verdict)) << '\n';
        }
      }
    } else if (*verify_cmd) {
      const auto rows = verify_theorem(max_order);
      if (report_format == "json") write_rows_json_lines(out, rows);
      else write_rows_table(out, rows);
      for (const auto& row : rows) {
        if (!row.consistent) {
          std::cerr << "inconsistent row: " << row.name << '\n';
          return 1;
        }
      }
    } else if (*table_cmd) {
      write_table(out, source.load());
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
