#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "octa/intmath.hpp"

namespace octa {

// --------------------------------------------------------------------------
// Diophantine solvers behind the octahedron parameterization.
// --------------------------------------------------------------------------

// All admissible side factors k <= limit: k = 1 together with every odd k
// whose prime factors are all congruent to 1 mod 3. Sorted ascending.
std::vector<i64> k_values(i64 limit);

// Primitive solutions (m, n) of k^2 = m^2 - m*n + n^2 with gcd(m, n) = 1,
// m >= 0, n > 0 and 2m < n, sorted ascending. k = 1 yields {(0, 1)}.
// For k > 1 with all prime factors = 1 mod 3 the count is 2^(omega(k)-1).
std::vector<std::pair<i64, i64>> primitive_mn_pairs(i64 k);

// Primitive triples 0 < a <= b <= c with a^2 + b^2 + c^2 = 3*d^2 and
// gcd(a, b, c) = 1, sorted lexicographically.
std::vector<std::array<i64, 3>> abc_triples(i64 d);

// The unique (x, y), x, y > 0, with p = x^2 + 3*y^2 for a prime p = 1 mod 3;
// p = 2 returns the sentinel (1, 1). Other inputs are inadmissible and throw.
std::pair<i64, i64> decompose_x2_3y2(i64 p);

// --------------------------------------------------------------------------
// Arithmetic in Z[sqrt(3)*i].
// --------------------------------------------------------------------------

// u + v*sqrt(3)*i with norm u^2 + 3*v^2. The ring has units +-1 only and is
// not a UFD (4 = 2*2 = (1+w)(1-w)); factorizations below are certified by an
// exact reconstruction check rather than assumed unique.
struct EisensteinInt {
  i64 u = 0, v = 0;

  friend auto operator<=>(const EisensteinInt&, const EisensteinInt&) = default;

  i64 norm() const { return checked_add(checked_mul(u, u), 3 * checked_mul(v, v)); }
  EisensteinInt conj() const { return {u, -v}; }
  EisensteinInt negated() const { return {-u, -v}; }

  friend EisensteinInt operator*(const EisensteinInt& a, const EisensteinInt& b) {
    return {checked_sub(checked_mul(a.u, b.u), 3 * checked_mul(a.v, b.v)),
            checked_add(checked_mul(a.u, b.v), checked_mul(a.v, b.u))};
  }

  // Exact quotient, or nullopt when d does not divide *this.
  std::optional<EisensteinInt> divided_by(const EisensteinInt& d) const;
};

struct FactorizationResult {
  i64 content = 1;  // gcd(u, v), pulled out first
  std::vector<std::pair<EisensteinInt, int>> factors;  // (prime, exponent)

  // content * prod(prime^exp); must equal the input exactly.
  EisensteinInt value() const;
};

// Factors u + v*sqrt(3)*i over Z[sqrt(3)*i]: pulls out the content, then for
// each rational prime of the reduced norm selects the conjugate dividing the
// running value (the prime 2 is covered by a single factor (1 +- w) since the
// reduced norm carries 2 to the power of exactly two). Reconstruction is
// verified before returning.
FactorizationResult eisenstein_factorization(i64 u, i64 v);

// The (r, s) pair of the triangle parameterization together with the two
// congruences that make the parameterization integral. Both residues are
// checked to vanish mod 2q; a nonzero residue throws instead of being
// silently carried along.
struct RsPair {
  i64 r = 0, s = 0;
  i64 residue1 = 0, residue2 = 0;
};

// Common divisor of the conjugated input A - B*sqrt(3)*i and 2q, assembled by
// matching Eisenstein prime factors against the factorization of 2q. Returns
// s = real part, r = sqrt(3)*i coefficient. The sign convention matches the
// parameterization: build_octahedron passes B = b*d directly.
RsPair find_rs(i64 A, i64 B, i64 q);

}  // namespace octa
