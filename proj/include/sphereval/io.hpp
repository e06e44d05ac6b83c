#pragma once

#include "sphereval/bodies.hpp"
#include "sphereval/mval.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace sphereval {

using Json = nlohmann::json;

/// {"n", "i", "space", "parity", "coeffs"}; "i" is null for a bare zonal profile.
Json to_json(const ZonalProfile& p, std::optional<int> degree = std::nullopt);
Json to_json(const GrassProfile& p);
/// Profile JSON plus a "rep" field.
Json to_json(const ValuationRep& v);

ZonalProfile zonal_from_json(const Json& j);
GrassProfile grass_from_json(const Json& j);

/**
 * Reads a valuation of the given representation. A "rep" field, if
 * present, must agree with `kind`. A generating profile without "i"
 * takes `degree`.
 */
ValuationRep valuation_from_json(const Json& j, RepKind kind, std::optional<int> degree = std::nullopt);

/// Accepts [[x,y,z],...] or {"vertices": [[...],...]}.
std::vector<Vec> vertices_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace sphereval
