#pragma once

#include <string>

#include <json.hpp>

#include "gentuple/certify.hpp"
#include "gentuple/explorer.hpp"
#include "gentuple/group.hpp"
#include "gentuple/moves.hpp"

namespace gentuple {

// Wire formats. Integers serialize as JSON numbers while they fit in 64 bits
// and as decimal strings beyond that; both parse.

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const Group& g, const GroupElement& e);
GroupElement element_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json tuple_to_json(const Tuple& t);
Tuple tuple_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json move_to_json(const Group& g, const Move& m);
Move move_from_json(const Group& g, const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json components_report_to_json(const ComponentsReport& r);
nlohmann::json preimage_report_to_json(const PreimageReport& r);

// Element-label array.
nlohmann::json subgroup_to_json(const Subgroup& s);

// Tuple literals: entries separated by ';', each either a coordinate list
// "(1,0,-3)", a table label, or a word over the distinguished generators.
Tuple parse_tuple_literal(const Group& g, const std::string& text);

}  // namespace gentuple
