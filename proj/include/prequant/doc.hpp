#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "prequant/instances.hpp"

namespace prequant {

inline constexpr const char* kDocFormat = "prequant-structure";
inline constexpr int kDocVersion = 1;

// Interchange document. Exactly the members matching `kind` are set:
// poset -> poset; magma -> magma; finite-magma -> finite; map -> magma + map;
// morphism -> morphism; lazy -> lazy_carrier ("upsets-nat" or "chain-omega").
struct StructureDoc {
    std::string kind;
    std::optional<FinitePoset> poset;
    std::optional<OrderedMagma> magma;
    std::optional<FiniteMagmaDesc> finite;
    std::optional<MonotoneMap> map;
    std::optional<MagmaMap> morphism;
    std::string lazy_carrier;
};

nlohmann::json to_json(const FinitePoset& p);
nlohmann::json to_json(const OrderedMagma& m);
nlohmann::json to_json(const FiniteMagmaDesc& m);
nlohmann::json to_json(const OrderedMagma& carrier, const SelfMap& s);
nlohmann::json to_json(const MagmaMap& f);
nlohmann::json lazy_json(const std::string& carrier);

// Schema-checked; throws malformed.
StructureDoc parse_doc(const nlohmann::json& j);
StructureDoc read_doc(std::istream& in);
// "-" reads standard input.
StructureDoc load_doc(const std::string& path);

// Graphviz Hasse diagram (covering relation, bottom-up).
std::string hasse_dot(const FinitePoset& p, const std::string& name);

}  // namespace prequant
