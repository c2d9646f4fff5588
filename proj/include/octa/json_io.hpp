#pragma once

#include <string>

#include <json.hpp>

#include "octa/enumerator.hpp"

namespace octa {

using json = nlohmann::ordered_json;

// A PointConfig renders as an array of [x, y, z] triples in canonical order.
json config_to_json(const PointConfig& c);
PointConfig config_from_json(const json& j);

// Record schema, stable field order:
// {"side_factor", "min_cube", "vertices", "k_values", "abc"}.
json record_to_json(const IrreducibleRecord& rec);

// {"irreducible": [...], "multiples": [...]}
json catalog_to_json(const Catalog& catalog);

// Serialized with a trailing newline so exports are byte-stable.
std::string dump_json(const json& j);

}  // namespace octa
