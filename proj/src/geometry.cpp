#include "octa/octahedron.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octa {

PointConfig::PointConfig(std::vector<Vec3> pts) : pts_(std::move(pts)) {
  std::sort(pts_.begin(), pts_.end());
  if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
    throw std::invalid_argument("PointConfig: duplicate point");
}

Vec3 PointConfig::min_corner() const {
  if (pts_.empty()) throw std::invalid_argument("PointConfig: empty config");
  Vec3 m = pts_.front();
  for (const Vec3& p : pts_) {
    m.x = std::min(m.x, p.x);
    m.y = std::min(m.y, p.y);
    m.z = std::min(m.z, p.z);
  }
  return m;
}

Vec3 PointConfig::max_corner() const {
  if (pts_.empty()) throw std::invalid_argument("PointConfig: empty config");
  Vec3 m = pts_.front();
  for (const Vec3& p : pts_) {
    m.x = std::max(m.x, p.x);
    m.y = std::max(m.y, p.y);
    m.z = std::max(m.z, p.z);
  }
  return m;
}

PointConfig PointConfig::translated(const Vec3& t) const {
  std::vector<Vec3> pts;
  pts.reserve(pts_.size());
  for (const Vec3& p : pts_) pts.push_back(p + t);
  PointConfig out;
  out.pts_ = std::move(pts);  // translation preserves lexicographic order
  return out;
}

bool PointConfig::is_normalized() const {
  Vec3 m = min_corner();
  return m.x == 0 && m.y == 0 && m.z == 0;
}

BoundingBox bounding_box(const PointConfig& c) {
  if (c.empty()) throw std::invalid_argument("bounding_box: empty config");
  Vec3 lo = c.min_corner(), hi = c.max_corner();
  BoundingBox bb;
  bb.dims = {hi.x - lo.x, hi.y - lo.y, hi.z - lo.z};
  bb.max_dim = std::max({bb.dims[0], bb.dims[1], bb.dims[2]});
  for (int i = 0; i < 3; ++i) bb.deficits[i] = bb.max_dim - bb.dims[i];
  std::set<i64> distinct(bb.dims.begin(), bb.dims.end());
  bb.distinct_deficit_count = static_cast<int>(distinct.size());
  return bb;
}

namespace {

[[noreturn]] void reject(const PointConfig& c, const std::string& why) {
  std::ostringstream os;
  os << "Octahedron: " << why << "; points:";
  for (const Vec3& p : c.points()) os << " [" << p.x << "," << p.y << "," << p.z << "]";
  throw std::domain_error(os.str());
}

}  // namespace

Octahedron Octahedron::from_points(std::vector<Vec3> pts) {
  return from_config(PointConfig(std::move(pts)));
}

Octahedron Octahedron::from_config(const PointConfig& c) {
  if (c.size() != 6) reject(c, "exactly six vertices required");
  const auto& v = c.points();

  // Edge / diagonal split: 12 pairs at the minimal squared distance, 3 at
  // twice that value.
  i64 side_sq = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      i64 d = squared_distance(v[i], v[j]);
      if (side_sq == 0 || d < side_sq) side_sq = d;
    }
  if (side_sq == 0) reject(c, "degenerate (coincident vertices)");

  int n_edge = 0, n_diag = 0;
  int antipode[6];
  std::fill(std::begin(antipode), std::end(antipode), -1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      i64 d = squared_distance(v[i], v[j]);
      if (d == side_sq) {
        ++n_edge;
      } else if (d == 2 * side_sq) {
        ++n_diag;
        if (antipode[i] != -1 || antipode[j] != -1) reject(c, "vertex with two antipodes");
        antipode[i] = j;
        antipode[j] = i;
      } else {
        reject(c, "pair distance neither edge nor diagonal");
      }
    }
  if (n_edge != 12 || n_diag != 3) reject(c, "edge/diagonal count not 12/3");

  // The three diagonals must share a midpoint, and the center must itself be
  // a lattice point (its double is even on every axis).
  Vec3 center2 = v[0] + v[antipode[0]];
  for (int i = 1; i < 6; ++i)
    if (v[i] + v[antipode[i]] != center2) reject(c, "diagonals do not share a midpoint");
  if (mod_floor(center2.x, 2) != 0 || mod_floor(center2.y, 2) != 0 ||
      mod_floor(center2.z, 2) != 0)
    reject(c, "center is not a lattice point");

  i64 s = 0;
  if (side_sq % 2 != 0 || !is_perfect_square(side_sq / 2, &s))
    reject(c, "squared edge is not of the form 2*s^2");

  // Duality with the doubled cube: doubled semi-axes pairwise orthogonal and
  // of equal squared norm 4*s^2, i.e. integer semi-axes of norm s^2.
  std::array<Vec3, 3> axes2{};
  int k = 0;
  for (int i = 0; i < 6 && k < 3; ++i)
    if (antipode[i] > i) axes2[k++] = 2 * v[i] - center2;
  for (int i = 0; i < 3; ++i) {
    if (norm2(axes2[i]) != 4 * s * s) reject(c, "semi-axis norm mismatch");
    if (axes2[i].x % 2 != 0 || axes2[i].y % 2 != 0 || axes2[i].z % 2 != 0)
      reject(c, "semi-axis is not an integer vector");
    for (int j = i + 1; j < 3; ++j)
      if (dot(axes2[i], axes2[j]) != 0) reject(c, "semi-axes not orthogonal");
  }

  Octahedron o;
  o.config_ = c;
  o.side_sq_ = side_sq;
  o.side_factor_ = s;
  o.center2_ = center2;
  o.axes2_ = axes2;
  return o;
}

Octahedron Octahedron::translated(const Vec3& t) const {
  return from_config(config_.translated(t));
}

Octahedron Octahedron::normalized() const {
  return translated(-config_.min_corner());
}

Octahedron Octahedron::scaled(i64 j) const {
  if (j < 1) throw std::invalid_argument("Octahedron::scaled: factor must be >= 1");
  std::vector<Vec3> pts;
  pts.reserve(6);
  for (const Vec3& p : points()) pts.push_back(j * p);
  return from_points(std::move(pts));
}

}  // namespace octa
