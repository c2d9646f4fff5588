#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace octa {

using i64 = std::int64_t;

// Thrown when a computation leaves the supported signed 64-bit range or an
// exact division fails. Grid sizes up to 10^4 and all quantities derived from
// them stay well inside the range; hitting this indicates misuse.
class arithmetic_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw arithmetic_error("integer overflow in add");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_error("integer overflow in sub");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_error("integer overflow in mul");
  return r;
}

// Quotient of an exact division; throws if d does not divide n.
inline i64 exact_div(i64 n, i64 d, const char* what = "exact_div") {
  if (d == 0 || n % d != 0)
    throw arithmetic_error(std::string(what) + ": " + std::to_string(n) +
                           " is not divisible by " + std::to_string(d));
  return n / d;
}

// Canonical nonnegative residue.
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Floor of sqrt(n), n >= 0.
inline i64 isqrt(i64 n) {
  if (n < 0) throw arithmetic_error("isqrt of negative value");
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(i64 n, i64* root = nullptr) {
  if (n < 0) return false;
  i64 r = isqrt(n);
  if (r * r != n) return false;
  if (root) *root = r;
  return true;
}

inline i64 gcd3(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

// Trial-division factorization, ascending primes with exponents. n >= 1.
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n < 1) throw arithmetic_error("factorize: n must be >= 1");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Multiplicity of p in n.
inline int valuation(i64 n, i64 p) {
  int e = 0;
  while (n % p == 0 && n != 0) { n /= p; ++e; }
  return e;
}

}  // namespace octa
