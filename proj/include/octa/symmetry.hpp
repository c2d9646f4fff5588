#pragma once

#include <set>

#include "octa/point_config.hpp"

namespace octa {

// Orbit machinery under the 48-element symmetry group of a cube (coordinate
// permutations composed with per-axis reflections), acting on configs
// normalized into their minimal cube / box. Generic over PointConfig: the
// same code serves triangles and octahedra.

// Counting scalars attached to one config.
struct OrbitStats {
  i64 alpha0 = 0;  // orbit size in the minimal cube; divides 48
  i64 alpha = 0;   // distinct translates of orbit members inside C_m
  i64 beta = 0;    // ... restricted to {0..m}^2 x {0..m-1}
  i64 gamma = 0;   // ... restricted to {0..m} x {0..m-1}^2
};

// All images of a normalized config under the 48 symmetries of its minimal
// cube C_m (images are kept as-is, not re-normalized).
std::set<PointConfig> full_orbit(const PointConfig& c);

struct BoxOrbit {
  i64 omega = 0;                 // number of distinct images inside the box
  std::set<PointConfig> reps;    // the images themselves
};

// Images under permutations + reflections that keep the config inside its
// minimal box B_{m,n,p} (per-coordinate bounds check on every image).
BoxOrbit box_orbit(const PointConfig& c);

// alpha0/alpha/beta/gamma by explicit enumeration of orbit translates.
OrbitStats translation_stats(const PointConfig& c);

// Number of distinct copies of the config inside [0, grid]^3 under all
// symmetries and integer translations, via the box-orbit formula:
// multiplicity * omega * prod(grid - dim_i + 1), multiplicity 1/3/6 by the
// number of distinct box dimensions. Returns 0 when the box does not fit.
i64 count_in_cube(const PointConfig& c, i64 grid);

// Same count via the translation-stats formula
// (g-m+1)^3*alpha - 3(g-m)(g-m+1)^2*beta + 3(g-m+1)(g-m)^2*gamma.
// The two routes are algebraically equivalent; both are kept and
// cross-checked rather than collapsing one into the other.
i64 count_in_cube_via_translations(const PointConfig& c, i64 grid);

// True when b can be produced from a by a signed coordinate permutation plus
// an integer translation (the equivalence the catalog dedups by).
bool orbit_equivalent(const PointConfig& a, const PointConfig& b);

}  // namespace octa
