#include "powcay/catalog.hpp"

#include <charconv>

namespace powcay {

namespace {

int parse_parameter(std::string_view digits, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(ErrorCode::kInvalidSpec, "bad group spec '" + std::string(whole) + "'");
  }
  return value;
}

FiniteGroup parse_factor(std::string_view token) {
  if (token == "Q8") return quaternion();
  if (token.starts_with("Dic")) return dicyclic(parse_parameter(token.substr(3), token));
  if (token.empty()) throw Error(ErrorCode::kInvalidSpec, "empty group spec");
  const std::string_view rest = token.substr(1);
  switch (token.front()) {
    case 'Z': return cyclic(parse_parameter(rest, token));
    case 'D': return dihedral(parse_parameter(rest, token));
    case 'S': return symmetric(parse_parameter(rest, token));
    case 'A': return alternating(parse_parameter(rest, token));
    default: throw Error(ErrorCode::kInvalidSpec, "unknown group family in '" + std::string(token) + "'");
  }
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  const auto split = spec.find('x');
  if (split == std::string_view::npos) return parse_factor(spec);
  return direct_product(parse_factor(spec.substr(0, split)), parse_group_spec(spec.substr(split + 1)));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const char* names[] = {
        "Z1",   "Z2",  "Z3",    "Z4",       "Z2xZ2", "Z5", "Z6",    "S3",  "Z7",  "Z8",
        "Z2xZ4", "Z2xZ2xZ2", "D4", "Q8", "Z9",    "Z3xZ3", "Z10", "D5",  "Z11", "Z12",
        "Z2xZ6", "D6",  "A4",   "Dic3",     "Z13",   "Z14", "D7",    "Z15",
    };
    std::vector<CatalogEntry> out;
    for (const char* name : names) out.push_back({name, parse_group_spec(name)});
    return out;
  }();
  return entries;
}

}  // namespace powcay
