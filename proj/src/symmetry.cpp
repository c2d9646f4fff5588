#include "octa/symmetry.hpp"

#include <algorithm>
#include <stdexcept>

#include "octa/builder.hpp"

namespace octa {

namespace {

constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

// out_i = bounds_i - in_{perm[i]} on flipped axes, in_{perm[i]} otherwise.
// With bounds = (m, m, m) these are exactly the 48 symmetries of C_m.
PointConfig apply_map(const PointConfig& c, const int perm[3], int flip_mask,
                      const std::array<i64, 3>& bounds) {
  std::vector<Vec3> pts;
  pts.reserve(c.size());
  for (const Vec3& p : c.points()) {
    Vec3 q;
    for (int i = 0; i < 3; ++i) {
      i64 v = p[perm[i]];
      q[i] = (flip_mask >> i & 1) ? bounds[i] - v : v;
    }
    pts.push_back(q);
  }
  return PointConfig(std::move(pts));
}

void require_normalized(const PointConfig& c, const char* what) {
  if (c.empty() || !c.is_normalized())
    throw std::invalid_argument(std::string(what) + ": config must be normalized");
}

}  // namespace

std::set<PointConfig> full_orbit(const PointConfig& c) {
  require_normalized(c, "full_orbit");
  const i64 m = minimal_cube_size(c);
  std::set<PointConfig> orbit;
  for (const auto& perm : kPerms)
    for (int mask = 0; mask < 8; ++mask)
      orbit.insert(apply_map(c, perm, mask, {m, m, m}));
  return orbit;
}

BoxOrbit box_orbit(const PointConfig& c) {
  require_normalized(c, "box_orbit");
  const BoundingBox bb = bounding_box(c);
  BoxOrbit out;
  for (const auto& perm : kPerms) {
    // Reflect within the permuted config's own box, then keep only images
    // that still fit inside the original box.
    std::array<i64, 3> own{bb.dims[perm[0]], bb.dims[perm[1]], bb.dims[perm[2]]};
    for (int mask = 0; mask < 8; ++mask) {
      PointConfig img = apply_map(c, perm, mask, own);
      bool inside = true;
      for (const Vec3& p : img.points())
        for (int i = 0; i < 3 && inside; ++i)
          if (p[i] < 0 || p[i] > bb.dims[i]) inside = false;
      if (inside) out.reps.insert(std::move(img));
    }
  }
  out.omega = static_cast<i64>(out.reps.size());
  return out;
}

OrbitStats translation_stats(const PointConfig& c) {
  require_normalized(c, "translation_stats");
  const i64 m = minimal_cube_size(c);
  const std::set<PointConfig> orbit = full_orbit(c);

  OrbitStats st;
  st.alpha0 = static_cast<i64>(orbit.size());

  std::set<PointConfig> in_cube, in_beta, in_gamma;
  for (const PointConfig& member : orbit) {
    const PointConfig base = member.normalized();
    const Vec3 hi = base.max_corner();
    for (i64 tx = 0; tx + hi.x <= m; ++tx)
      for (i64 ty = 0; ty + hi.y <= m; ++ty)
        for (i64 tz = 0; tz + hi.z <= m; ++tz) {
          PointConfig shifted = base.translated({tx, ty, tz});
          if (ty + hi.y <= m - 1 && tz + hi.z <= m - 1) in_gamma.insert(shifted);
          if (tz + hi.z <= m - 1) in_beta.insert(shifted);
          in_cube.insert(std::move(shifted));
        }
  }
  st.alpha = static_cast<i64>(in_cube.size());
  st.beta = static_cast<i64>(in_beta.size());
  st.gamma = static_cast<i64>(in_gamma.size());
  return st;
}

i64 count_in_cube(const PointConfig& c, i64 grid) {
  require_normalized(c, "count_in_cube");
  const BoundingBox bb = bounding_box(c);
  if (grid < bb.max_dim) return 0;

  i64 delta = box_orbit(c).omega;
  for (i64 dim : bb.dims) delta = checked_mul(delta, grid - dim + 1);
  switch (bb.distinct_deficit_count) {
    case 1: return delta;
    case 2: return checked_mul(3, delta);
    default: return checked_mul(6, delta);
  }
}

i64 count_in_cube_via_translations(const PointConfig& c, i64 grid) {
  require_normalized(c, "count_in_cube_via_translations");
  const i64 m = minimal_cube_size(c);
  if (grid < m) return 0;
  const OrbitStats st = translation_stats(c);
  const i64 a = grid - m + 1, b = grid - m;
  return checked_sub(
      checked_add(checked_mul(a * a * a, st.alpha), checked_mul(3 * a * b * b, st.gamma)),
      checked_mul(3 * b * a * a, st.beta));
}

bool orbit_equivalent(const PointConfig& a, const PointConfig& b) {
  if (a.size() != b.size()) return false;
  const PointConfig target = b.normalized();
  for (const auto& perm : kPerms)
    for (int mask = 0; mask < 8; ++mask) {
      // Signed permutation as a linear map, then shift to the origin.
      std::vector<Vec3> pts;
      pts.reserve(a.size());
      for (const Vec3& p : a.points()) {
        Vec3 q;
        for (int i = 0; i < 3; ++i) {
          i64 v = p[perm[i]];
          q[i] = (mask >> i & 1) ? -v : v;
        }
        pts.push_back(q);
      }
      if (PointConfig(std::move(pts)).normalized() == target) return true;
    }
  return false;
}

}  // namespace octa
