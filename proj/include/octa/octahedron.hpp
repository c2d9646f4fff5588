#pragma once

#include <array>

#include "octa/point_config.hpp"

namespace octa {

/**
 * A regular octahedron with vertices in Z^3, validated on construction:
 *
 *  - of the 15 vertex pairs, exactly 12 realize the minimal squared distance
 *    (the edges) and 3 realize twice that value (the antipodal diagonals);
 *  - the 3 antipodal pairs share one midpoint, and twice that midpoint has
 *    even coordinates, i.e. the center itself is a lattice point;
 *  - side_sq = 2*s^2 for an integer s (edge length s*sqrt(2));
 *  - the three semi-axis vectors (antipodal vertex minus center) are integer
 *    vectors, pairwise orthogonal, of equal squared norm s^2, so the eight
 *    points center +- e1 +- e2 +- e3 form a doubled integer cube (the dual
 *    cube of the octahedron).
 *
 * Every octahedron in the system goes through from_points(), so the full
 * invariant list holds for every instance.
 */
class Octahedron {
 public:
  static Octahedron from_points(std::vector<Vec3> pts);
  static Octahedron from_config(const PointConfig& c);

  const PointConfig& config() const { return config_; }
  const std::vector<Vec3>& points() const { return config_.points(); }

  i64 side_sq() const { return side_sq_; }        // squared edge length, = 2*s^2
  i64 side_factor() const { return side_factor_; } // s, edge = s*sqrt(2)
  Vec3 center2() const { return center2_; }        // twice the center (always even)
  const std::array<Vec3, 3>& axes2() const { return axes2_; } // doubled semi-axes

  Octahedron translated(const Vec3& t) const;
  Octahedron normalized() const;
  Octahedron scaled(i64 j) const;  // componentwise dilation, j >= 1

  friend auto operator<=>(const Octahedron& a, const Octahedron& b) {
    return a.config_ <=> b.config_;
  }
  friend bool operator==(const Octahedron& a, const Octahedron& b) {
    return a.config_ == b.config_;
  }

 private:
  Octahedron() = default;

  PointConfig config_;
  i64 side_sq_ = 0;
  i64 side_factor_ = 0;
  Vec3 center2_;
  std::array<Vec3, 3> axes2_{};
};

}  // namespace octa
