#pragma once

#include <array>
#include <compare>
#include <vector>

#include "octa/vec3.hpp"

namespace octa {

// A finite set of lattice points in canonical form: the stored list is the
// lexicographic sort of the points, so two configs are equal iff their stored
// lists are equal. Duplicates are rejected.
class PointConfig {
 public:
  PointConfig() = default;
  explicit PointConfig(std::vector<Vec3> pts);

  const std::vector<Vec3>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }

  Vec3 min_corner() const;
  Vec3 max_corner() const;

  PointConfig translated(const Vec3& t) const;

  // Translate so the minimum coordinate on every axis is 0.
  PointConfig normalized() const { return translated(-min_corner()); }
  bool is_normalized() const;

  friend auto operator<=>(const PointConfig&, const PointConfig&) = default;

 private:
  std::vector<Vec3> pts_;
};

// Axis-aligned extents of a config together with the deficits used by the
// box-counting formula: deficits[i] = max(dims) - dims[i].
struct BoundingBox {
  std::array<i64, 3> dims{};      // per-axis max - min
  std::array<i64, 3> deficits{};  // max(dims) - dims[i]
  int distinct_deficit_count = 0; // number of distinct values among dims
  i64 max_dim = 0;
};

BoundingBox bounding_box(const PointConfig& c);

}  // namespace octa
