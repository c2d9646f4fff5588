#include "octa/builder.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace octa {

namespace {

i64 exact_sqrt(i64 n, const char* what) {
  i64 r = 0;
  if (!is_perfect_square(n, &r))
    throw std::domain_error(std::string(what) + ": " + std::to_string(n) +
                            " is not a perfect square");
  return r;
}

bool divisible_by_3(const Vec3& v) {
  return v.x % 3 == 0 && v.y % 3 == 0 && v.z % 3 == 0;
}

Vec3 div3(const Vec3& v) { return {v.x / 3, v.y / 3, v.z / 3}; }

}  // namespace

BuiltOctahedron build_octahedron(i64 a, i64 b, i64 c, i64 m_p, i64 n_p) {
  if (a < 1 || b < 1 || c < 1)
    throw std::invalid_argument("build_octahedron: (a,b,c) must be positive");
  if (m_p < 0 || n_p <= 0)
    throw std::invalid_argument("build_octahedron: need m_p >= 0 and n_p > 0");

  const i64 q = a * a + b * b;
  const i64 d = exact_sqrt(exact_div(a * a + b * b + c * c, 3,
                                     "build_octahedron: a^2+b^2+c^2"),
                           "build_octahedron: d");
  const i64 k = exact_sqrt(m_p * m_p - m_p * n_p + n_p * n_p, "build_octahedron: k");

  const i64 A = a * c;
  const i64 B = b * d;
  const RsPair rs = find_rs(A, B, q);
  const i64 r = rs.r, s = rs.s;

  // Triangle parameterization; every division must be exact, which the
  // find_rs congruences guarantee.
  const i64 mx = exact_div(-(d * b * (3 * r + s) + a * c * (r - s)), 2 * q, "zeta/eta");
  const i64 nx = exact_div(-(r * a * c + d * b * s), q, "zeta/eta");
  const i64 my = exact_div(d * a * (3 * r + s) - b * c * (r - s), 2 * q, "zeta/eta");
  const i64 ny = exact_div(-(r * b * c - d * a * s), q, "zeta/eta");
  const i64 mz = exact_div(r - s, 2, "zeta/eta");
  const i64 nz = r;

  const Vec3 zeta{nx, ny, nz};
  const Vec3 eta{nx - mx, ny - my, nz - mz};
  const Vec3 t1 = m_p * zeta - n_p * eta;
  const Vec3 t2 = m_p * Vec3{mx, my, mz} - n_p * zeta;

  // Apex: one of (t1 + t2 -+ 2k*(a,b,c)) / 3 is integral.
  const Vec3 base = t1 + t2;
  const Vec3 shift = (2 * k) * Vec3{a, b, c};
  const Vec3 r1 = base - shift;
  Vec3 t3;
  if (divisible_by_3(r1)) {
    t3 = div3(r1);
  } else {
    const Vec3 r2 = base + shift;
    if (!divisible_by_3(r2)) {
      std::ostringstream os;
      os << "build_octahedron: neither apex candidate is integral for (a,b,c)=(" << a
         << "," << b << "," << c << "), (m,n)=(" << m_p << "," << n_p << ")";
      throw std::domain_error(os.str());
    }
    t3 = div3(r2);
  }

  BuiltOctahedron out{Octahedron::from_points({t1, t2, t3, t1 + t2, t1 + t3, t2 + t3}),
                      {t1, t2, t3}};
  if (out.octa.side_sq() != 2 * d * k * d * k)
    throw std::logic_error("build_octahedron: edge length disagrees with d*k*sqrt(2)");
  return out;
}

Octahedron normalize_to_octant(const Octahedron& t) { return t.normalized(); }

i64 minimal_cube_size(const PointConfig& c) {
  if (!c.is_normalized())
    throw std::invalid_argument("minimal_cube_size: config is not normalized");
  Vec3 hi = c.max_corner();
  return std::max({hi.x, hi.y, hi.z});
}

i64 unit_vector_norm(const Vec3& u) {
  if (u == Vec3{0, 0, 0}) throw std::invalid_argument("unit_vector_norm: zero vector");
  i64 g = gcd3(std::abs(u.x), std::abs(u.y), std::abs(u.z));
  i64 t = exact_div(norm2(u), 3 * g * g, "unit_vector_norm");
  return exact_sqrt(t, "unit_vector_norm");
}

namespace {

std::set<i64> k_values_from_normals(i64 side, const std::array<Vec3, 4>& normals) {
  std::set<i64> out;
  for (const Vec3& n : normals)
    out.insert(exact_div(side, unit_vector_norm(n), "face_k_values"));
  return out;
}

}  // namespace

std::set<i64> face_k_values(const Vec3& t1, const Vec3& t2, const Vec3& t3) {
  i64 side = exact_sqrt(exact_div(squared_distance(t1, t2), 2, "face_k_values"),
                        "face_k_values: side");
  return k_values_from_normals(
      side, {t1 + t2 + t3, t1 + t2 - 3 * t3, t1 + t3 - 3 * t2, t2 + t3 - 3 * t1});
}

std::set<i64> face_k_values(const Octahedron& t) {
  const auto& g = t.axes2();
  return k_values_from_normals(
      t.side_factor(), {g[0] + g[1] + g[2], g[0] + g[1] - g[2], g[0] - g[1] + g[2],
                        g[0] - g[1] - g[2]});
}

Octahedron scale_octahedron(const Octahedron& t, i64 j) { return t.scaled(j); }

}  // namespace octa
