#include "octa/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace octa {

namespace {

// Spokes are doubled semi-axis vectors 2*(vertex - center). One per antipodal
// vertex pair, so each is kept in sign-normalized form (first nonzero
// component positive).
struct Spoke {
  i64 x, y, z;
};

template <typename Visit>
void scan_centers(i64 n, Visit&& visit) {
  // visit(c2, spokes grouped by squared length). Coordinates are doubled so
  // half-integral centers stay exact; vertex constraints become
  // |v_i| <= min(c2_i, 2n - c2_i) with v_i = c2_i (mod 2).
  std::map<i64, std::vector<Spoke>> by_norm;
  for (i64 cx = 0; cx <= 2 * n; ++cx)
    for (i64 cy = 0; cy <= 2 * n; ++cy)
      for (i64 cz = 0; cz <= 2 * n; ++cz) {
        const i64 lx = std::min(cx, 2 * n - cx);
        const i64 ly = std::min(cy, 2 * n - cy);
        const i64 lz = std::min(cz, 2 * n - cz);
        by_norm.clear();
        // Sign normalization: vx > 0, or vx = 0 and vy > 0, or vx = vy = 0
        // and vz > 0.
        for (i64 vx = (cx % 2 == 0) ? 0 : 1; vx <= lx; vx += 2) {
          const i64 ystart = (vx > 0) ? -ly : 0;
          for (i64 vy = ystart + mod_floor(cy - ystart, 2); vy <= ly; vy += 2) {
            const i64 zstart = (vx > 0 || vy > 0) ? -lz : 0;
            for (i64 vz = zstart + mod_floor(cz - zstart, 2); vz <= lz; vz += 2) {
              if (vx == 0 && vy == 0 && vz == 0) continue;
              by_norm[vx * vx + vy * vy + vz * vz].push_back({vx, vy, vz});
            }
          }
        }
        visit(Vec3{cx, cy, cz}, by_norm);
      }
}

i64 dot_spoke(const Spoke& a, const Spoke& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename Emit>
void orthogonal_triples(const std::vector<Spoke>& spokes, Emit&& emit) {
  const std::size_t m = spokes.size();
  if (m < 3) return;
  for (std::size_t i = 0; i + 2 < m; ++i)
    for (std::size_t j = i + 1; j + 1 < m; ++j) {
      if (dot_spoke(spokes[i], spokes[j]) != 0) continue;
      for (std::size_t k = j + 1; k < m; ++k)
        if (dot_spoke(spokes[i], spokes[k]) == 0 && dot_spoke(spokes[j], spokes[k]) == 0)
          emit(spokes[i], spokes[j], spokes[k]);
    }
}

void check_feasible(i64 n, bool allow_large) {
  if (n < 0) throw std::invalid_argument("brute_force_count: n must be >= 0");
  if (n > kBruteForceLimit && !allow_large)
    throw std::domain_error("brute_force_count: n = " + std::to_string(n) +
                            " exceeds the feasibility bound " +
                            std::to_string(kBruteForceLimit) +
                            " (pass allow_large to override)");
}

}  // namespace

i64 brute_force_count(i64 n, bool allow_large) {
  check_feasible(n, allow_large);
  i64 total = 0;
  scan_centers(n, [&](const Vec3&, const std::map<i64, std::vector<Spoke>>& by_norm) {
    for (const auto& [norm, spokes] : by_norm) {
      (void)norm;
      orthogonal_triples(spokes, [&](const Spoke&, const Spoke&, const Spoke&) { ++total; });
    }
  });
  return total;
}

std::vector<Octahedron> brute_force_octahedra(i64 n) {
  if (n > 6)
    throw std::domain_error("brute_force_octahedra: materialization supported for n <= 6");
  check_feasible(n, false);
  std::vector<Octahedron> out;
  scan_centers(n, [&](const Vec3& c2, const std::map<i64, std::vector<Spoke>>& by_norm) {
    for (const auto& [norm, spokes] : by_norm) {
      (void)norm;
      orthogonal_triples(spokes, [&](const Spoke& a, const Spoke& b, const Spoke& c) {
        std::vector<Vec3> pts;
        for (const Spoke& s : {a, b, c}) {
          const Vec3 v{s.x, s.y, s.z};
          pts.push_back(Vec3{(c2.x + v.x) / 2, (c2.y + v.y) / 2, (c2.z + v.z) / 2});
          pts.push_back(Vec3{(c2.x - v.x) / 2, (c2.y - v.y) / 2, (c2.z - v.z) / 2});
        }
        out.push_back(Octahedron::from_points(std::move(pts)));
      });
    }
  });
  return out;
}

}  // namespace octa
