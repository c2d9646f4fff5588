#pragma once

#include <vector>

#include "octa/octahedron.hpp"

namespace octa {

// Independent brute-force counter of regular octahedra with all vertices in
// {0..n}^3. Scans every possible (doubled) center and radius class and counts
// unordered triples of pairwise-orthogonal equal-length semi-axis vectors;
// each triple corresponds to exactly one octahedron. Shares no code with the
// catalog pipeline beyond the basic vector type.
//
// The scan is cubic in the doubled grid with a quadratic factor per radius
// class; n <= 12 is the supported envelope. Larger n must be forced with
// allow_large.
inline constexpr i64 kBruteForceLimit = 12;

i64 brute_force_count(i64 n, bool allow_large = false);

// Materializes the octahedra instead of counting them (validating every one
// through the Octahedron invariants). Intended for small n only.
std::vector<Octahedron> brute_force_octahedra(i64 n);

}  // namespace octa
