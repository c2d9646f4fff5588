#pragma once

#include <compare>
#include <cstddef>

#include "octa/intmath.hpp"

namespace octa {

// Integer 3-vector. Doubles as a grid vertex and as a displacement; all
// arithmetic is exact and overflow-checked.
struct Vec3 {
  i64 x = 0, y = 0, z = 0;

  friend auto operator<=>(const Vec3&, const Vec3&) = default;

  i64 operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  i64& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z)};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {checked_sub(a.x, b.x), checked_sub(a.y, b.y), checked_sub(a.z, b.z)};
  }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(i64 s, const Vec3& a) {
    return {checked_mul(s, a.x), checked_mul(s, a.y), checked_mul(s, a.z)};
  }
};

inline Vec3 subtract(const Vec3& u, const Vec3& v) { return u - v; }

inline i64 dot(const Vec3& a, const Vec3& b) {
  return checked_add(checked_add(checked_mul(a.x, b.x), checked_mul(a.y, b.y)),
                     checked_mul(a.z, b.z));
}

inline i64 norm2(const Vec3& a) { return dot(a, a); }

inline i64 squared_distance(const Vec3& a, const Vec3& b) { return norm2(a - b); }

}  // namespace octa
