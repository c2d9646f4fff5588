#include "octa/json_io.hpp"

#include <stdexcept>

namespace octa {

json config_to_json(const PointConfig& c) {
  json arr = json::array();
  for (const Vec3& p : c.points()) arr.push_back({p.x, p.y, p.z});
  return arr;
}

PointConfig config_from_json(const json& j) {
  if (!j.is_array()) throw std::runtime_error("point config: expected an array of [x,y,z]");
  std::vector<Vec3> pts;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw std::runtime_error("point config: each entry must be three integers");
    pts.push_back({e[0].get<i64>(), e[1].get<i64>(), e[2].get<i64>()});
  }
  return PointConfig(std::move(pts));
}

json record_to_json(const IrreducibleRecord& rec) {
  json j;
  j["side_factor"] = rec.side_factor;
  j["min_cube"] = rec.min_cube;
  j["vertices"] = config_to_json(rec.octahedron.config());
  j["k_values"] = json::array();
  for (i64 k : rec.k_values) j["k_values"].push_back(k);
  j["abc"] = {rec.abc[0], rec.abc[1], rec.abc[2]};
  return j;
}

json catalog_to_json(const Catalog& catalog) {
  json j;
  j["irreducible"] = json::array();
  for (const IrreducibleRecord& rec : catalog.irreducible)
    j["irreducible"].push_back(record_to_json(rec));
  j["multiples"] = json::array();
  for (const IrreducibleRecord& rec : catalog.multiples)
    j["multiples"].push_back(record_to_json(rec));
  return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace octa
