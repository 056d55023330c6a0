#pragma once

#include <string>

#include <json.hpp>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon {

using Json = nlohmann::ordered_json;

// Unknown fields and structural problems raise InvalidMapError; the result
// is not validated beyond what is needed to build the arrays.
OrientedMap map_from_json(const nlohmann::json& j);
OrientedMap parse_map(const std::string& text);

Json map_to_json(const OrientedMap& map);
std::string print_map(const OrientedMap& map);

// "fixture:NAME" or a path; "-" reads standard input.
OrientedMap load_map(const std::string& source);

}  // namespace semiribbon
