#pragma once

// Shared reference data for the test suites: well-known octahedra, the
// worked triangle example, and the printed horizon-20 catalog.

#include <array>
#include <vector>

#include "octa/point_config.hpp"

namespace fixtures {

using octa::i64;
using octa::PointConfig;
using octa::Vec3;

inline PointConfig make_config(const std::vector<std::array<i64, 3>>& pts) {
  std::vector<Vec3> v;
  v.reserve(pts.size());
  for (const auto& p : pts) v.push_back({p[0], p[1], p[2]});
  return PointConfig(std::move(v));
}

// Smallest lattice octahedron, side sqrt(2), minimal cube [0,2]^3.
inline PointConfig oc1() {
  return make_config({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}});
}

// Side 3*sqrt(2), minimal cube [0,4]^3, box-orbit size 4.
inline PointConfig oc2() {
  return make_config({{0, 0, 1}, {0, 3, 4}, {1, 4, 0}, {3, 0, 4}, {4, 1, 0}, {4, 4, 3}});
}

// Equilateral triangle in the box B_{7,7,2} with omega = 8 and
// (alpha0, alpha, beta, gamma) = (48, 144, 40, 0).
inline PointConfig triangle() { return make_config({{0, 2, 2}, {5, 7, 0}, {7, 0, 1}}); }

// Its eight box-orbit representatives.
inline std::vector<PointConfig> triangle_box_orbit() {
  return {
      triangle(),
      make_config({{0, 0, 1}, {2, 7, 0}, {7, 2, 2}}),
      make_config({{0, 0, 1}, {2, 7, 2}, {7, 2, 0}}),
      make_config({{0, 2, 0}, {5, 7, 2}, {7, 0, 1}}),
      make_config({{0, 5, 0}, {5, 0, 2}, {7, 7, 1}}),
      make_config({{0, 5, 2}, {5, 0, 0}, {7, 7, 1}}),
      make_config({{0, 7, 1}, {2, 0, 0}, {7, 5, 2}}),
      make_config({{0, 7, 1}, {2, 0, 2}, {7, 5, 0}}),
  };
}

// Octahedron of side 2011*sqrt(2) from the construction with
// (a,b,c) = (1,1,1), (m,n) = (880,2301), translated to the positive octant.
inline PointConfig k2011_normalized() {
  return make_config({{2401, 1521, 3822},
                      {3822, 2401, 1521},
                      {2301, 0, 1421},
                      {1521, 3822, 2401},
                      {0, 1421, 2301},
                      {1421, 2301, 0}});
}

// One printed catalog entry for horizon 20.
struct CatalogEntry {
  i64 side_factor;
  i64 min_cube;
  std::vector<std::array<i64, 3>> vertices;
  std::vector<i64> k_values;
  std::array<i64, 3> abc;
};

// The thirteen irreducible octahedra with edge factor <= 20.
inline std::vector<CatalogEntry> catalog20_irreducible() {
  return {
      {1, 2, {{2, 1, 1}, {1, 2, 1}, {1, 1, 0}, {0, 1, 1}, {1, 1, 2}, {1, 0, 1}}, {1}, {1, 1, 1}},
      {3, 4, {{4, 1, 0}, {0, 3, 4}, {3, 0, 4}, {1, 4, 0}, {4, 4, 3}, {0, 0, 1}}, {1, 3}, {1, 1, 5}},
      {5, 10, {{8, 5, 7}, {4, 10, 4}, {1, 5, 8}, {4, 0, 4}, {7, 5, 0}, {0, 5, 1}}, {1}, {1, 5, 7}},
      {7, 12, {{9, 0, 4}, {12, 8, 9}, {0, 4, 3}, {3, 12, 8}, {4, 3, 12}, {8, 9, 0}}, {1, 7}, {1, 5, 11}},
      {9, 16, {{3, 9, 0}, {11, 7, 16}, {14, 4, 4}, {3, 0, 9}, {0, 12, 12}, {11, 16, 7}}, {1, 3}, {1, 11, 11}},
      {11, 18, {{7, 18, 13}, {11, 0, 1}, {18, 7, 13}, {15, 15, 0}, {0, 11, 1}, {3, 3, 14}}, {1}, {1, 1, 19}},
      {13, 24, {{24, 15, 16}, {16, 0, 9}, {8, 24, 15}, {15, 16, 0}, {9, 8, 24}, {0, 9, 8}}, {1, 13}, {5, 11, 19}},
      {13, 26, {{17, 13, 0}, {24, 13, 17}, {12, 26, 12}, {7, 13, 24}, {12, 0, 12}, {0, 13, 7}}, {1}, {7, 13, 17}},
      {15, 28, {{15, 28, 13}, {0, 19, 1}, {20, 12, 0}, {20, 9, 21}, {5, 0, 9}, {0, 16, 22}}, {1, 3}, {5, 11, 23}},
      {17, 24, {{0, 3, 4}, {0, 20, 21}, {13, 0, 24}, {24, 4, 3}, {11, 24, 0}, {24, 21, 20}}, {1}, {1, 5, 29}},
      {17, 34, {{23, 17, 0}, {15, 34, 15}, {15, 0, 15}, {0, 17, 7}, {30, 17, 23}, {7, 17, 30}}, {1}, {7, 17, 23}},
      {19, 36, {{0, 12, 12}, {34, 24, 24}, {11, 17, 36}, {11, 36, 17}, {23, 0, 19}, {23, 19, 0}}, {1}, {5, 23, 23}},
      {19, 30, {{0, 21, 25}, {9, 25, 0}, {21, 5, 30}, {30, 9, 5}, {25, 30, 21}, {5, 0, 9}}, {1, 19}, {1, 11, 31}},
  };
}

// The fourteen reducible entries for horizon 20: (scaling factor, index of
// the irreducible entry above).
inline std::vector<std::pair<i64, int>> catalog20_multiples() {
  return {{2, 0}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}, {8, 0},
          {9, 0}, {10, 0}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}};
}

}  // namespace fixtures
