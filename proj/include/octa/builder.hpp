#pragma once

#include <array>
#include <set>

#include "octa/octahedron.hpp"
#include "octa/quadratic_forms.hpp"

namespace octa {

// Output of the parameterized construction: the octahedron itself plus the
// three starting face vertices (the other three vertices are their pairwise
// sums). The triangle is needed to evaluate the face k-value invariant the
// way the construction defines it.
struct BuiltOctahedron {
  Octahedron octa;
  std::array<Vec3, 3> triangle;
};

// Constructs a regular octahedron in Z^3 from a normal vector (a, b, c) with
// a^2 + b^2 + c^2 = 3*d^2 and a primitive pair (m_p, n_p) with
// k^2 = m_p^2 - m_p*n_p + n_p^2. The edge length is d*k*sqrt(2). The result
// may have negative coordinates; callers normalize as needed.
BuiltOctahedron build_octahedron(i64 a, i64 b, i64 c, i64 m_p, i64 n_p);

// Translate into the positive octant so every coordinate plane contains at
// least one vertex.
Octahedron normalize_to_octant(const Octahedron& t);

// Side of the smallest cube [0, m]^3 containing a normalized config.
i64 minimal_cube_size(const PointConfig& c);
inline i64 minimal_cube_size(const Octahedron& t) { return minimal_cube_size(t.config()); }

// d / gcd(a, b, c) for a vector with a^2 + b^2 + c^2 = 3*d^2 (up to a common
// factor); throws when the input is not of that shape.
i64 unit_vector_norm(const Vec3& u);

// The set {k_1, .., k_4} of edge-factor divisors across the four pairs of
// parallel faces, evaluated from the construction triangle. Invariant under
// the 48 cube symmetries, hence usable to tell essentially different
// octahedra apart.
std::set<i64> face_k_values(const Vec3& t1, const Vec3& t2, const Vec3& t3);

// Same invariant evaluated geometrically from any octahedron (face normals
// are the +- combinations of the semi-axes), so it is also translation-proof.
std::set<i64> face_k_values(const Octahedron& t);

// Componentwise dilation by j >= 1.
Octahedron scale_octahedron(const Octahedron& t, i64 j);

// One catalog entry: an irreducible octahedron in normalized position with
// the data used for dedup and counting.
struct IrreducibleRecord {
  i64 side_factor = 0;          // odd for irreducible entries; edge = side_factor*sqrt(2)
  i64 min_cube = 0;             // smallest m with the octahedron inside [0, m]^3
  Octahedron octahedron;        // normalized
  std::set<i64> k_values;       // face k-value invariant
  std::array<i64, 3> abc{};     // normal vector the construction used
};

}  // namespace octa
