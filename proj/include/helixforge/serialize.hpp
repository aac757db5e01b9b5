#pragma once

#include <variant>

#include <json.hpp>

#include "helixforge/helix.hpp"

namespace helixforge {

using Json = nlohmann::ordered_json;

Json to_json(const GroupDescriptor& d);
GroupDescriptor descriptor_from_json(const Json& j);

/// Cyclic elements serialize as integers; curve points as [x, y] or "inf".
Json to_json(const GroupElement& g);
GroupElement element_from_json(const Json& j, const GroupDescriptor& d);

Json to_json(const DivisorClass& c);
DivisorClass class_from_json(const Json& j, const GroupDescriptor& d);

Json to_json(const QuadraticHelixSpec& spec);
Json to_json(const CubicHelixSpec& spec);

using GeometrySpec = std::variant<QuadraticHelixSpec, CubicHelixSpec>;

Json to_json(const GeometrySpec& g);
GeometrySpec geometry_from_json(const Json& j, const GroupDescriptor& d);

}  // namespace helixforge
