#include "powcay/serialize.hpp"

#include <json.hpp>

namespace powcay {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const BitMatrix& m, bool directed, std::span<const std::string> labels) {
  Json j;
  j["order"] = m.size();
  j["directed"] = directed;
  Json pairs = Json::array();
  for (int u = 0; u < m.size(); ++u)
    for (int v = directed ? 0 : u + 1; v < m.size(); ++v)
      if (m.test(u, v)) pairs.push_back({u, v});
  j[directed ? "arcs" : "edges"] = std::move(pairs);
  if (!labels.empty()) j["labels"] = std::vector<std::string>(labels.begin(), labels.end());
  return j;
}

}  // namespace

std::string graph_to_json(const SimpleGraph& graph, std::span<const std::string> labels) {
  return matrix_json(graph.matrix(), false, labels).dump();
}

std::string graph_to_json(const Digraph& graph, std::span<const std::string> labels) {
  return matrix_json(graph.matrix(), true, labels).dump();
}

std::string witness_to_json(const CayleyWitness& witness) {
  Json j;
  j["directed"] = witness.directed;
  j["order"] = witness.group.order();
  j["identity"] = witness.group.identity();
  j["table"] = witness.group.table();
  j["connection"] = witness.connection.members();
  Json map = Json::array();
  for (const auto& p : witness.vertex_map) map.push_back(p.image());
  j["vertex_map"] = std::move(map);
  j["labels"] = witness.group.labels();
  return j.dump();
}

CayleyWitness witness_from_json(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    auto labels = j.contains("labels") ? j.at("labels").get<std::vector<std::string>>() : std::vector<std::string>{};
    FiniteGroup group = FiniteGroup::from_table(j.at("table").get<std::vector<std::vector<Element>>>(), std::move(labels));
    if (j.at("identity").get<int>() != group.identity()) throw Error(ErrorCode::kNoIdentity, "identity field disagrees with table");
    ConnectionSet connection(group, j.at("connection").get<std::vector<Element>>());
    std::vector<Permutation> vertex_map;
    for (const auto& image : j.at("vertex_map")) vertex_map.emplace_back(image.get<std::vector<int>>());
    if (static_cast<int>(vertex_map.size()) != group.order()) {
      throw Error(ErrorCode::kInvalidSpec, "vertex_map needs one permutation per element");
    }
    for (const auto& p : vertex_map) {
      if (p.degree() != group.order()) throw Error(ErrorCode::kInvalidSpec, "vertex_map permutation of wrong degree");
    }
    return CayleyWitness{std::move(group), std::move(connection), std::move(vertex_map), j.at("directed").get<bool>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedEncoding, e.what());
  }
}

}  // namespace powcay
