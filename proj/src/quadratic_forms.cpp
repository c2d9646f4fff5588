#include "octa/quadratic_forms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace octa {

std::vector<i64> k_values(i64 limit) {
  if (limit < 1) throw std::invalid_argument("k_values: limit must be >= 1");
  std::vector<i64> out{1};
  for (i64 k = 3; k <= limit; k += 2) {
    bool admissible = true;
    for (const auto& [p, e] : factorize(k)) {
      (void)e;
      if (p % 3 != 1) { admissible = false; break; }
    }
    if (admissible) out.push_back(k);
  }
  return out;
}

std::vector<std::pair<i64, i64>> primitive_mn_pairs(i64 k) {
  if (k < 1) throw std::invalid_argument("primitive_mn_pairs: k must be >= 1");
  std::vector<std::pair<i64, i64>> out;
  // For fixed m the equation is quadratic in n: n = (m + sqrt(4k^2-3m^2))/2.
  // 2m < n forces 3m^2 < k^2, so scanning m in [0, k] is exhaustive.
  for (i64 m = 0; m <= k; ++m) {
    i64 disc = 4 * k * k - 3 * m * m;
    i64 root = 0;
    if (disc < 0 || !is_perfect_square(disc, &root)) continue;
    if ((m + root) % 2 != 0) continue;
    i64 n = (m + root) / 2;
    if (n <= 0 || 2 * m >= n) continue;
    if (std::gcd(m, n) != 1) continue;
    out.emplace_back(m, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<i64, 3>> abc_triples(i64 d) {
  if (d < 1) throw std::invalid_argument("abc_triples: d must be >= 1");
  std::set<std::array<i64, 3>> sol;
  i64 target = 3 * d * d;
  for (i64 a = 1; a * a * 3 <= target; ++a) {
    i64 rem = target - a * a;
    for (i64 b = a; 2 * b * b <= rem; ++b) {
      i64 c2 = rem - b * b;
      i64 c = 0;
      if (!is_perfect_square(c2, &c)) continue;
      if (c < b) continue;
      if (gcd3(a, b, c) != 1) continue;
      sol.insert({a, b, c});
    }
  }
  return {sol.begin(), sol.end()};
}

std::pair<i64, i64> decompose_x2_3y2(i64 p) {
  if (p == 2) return {1, 1};  // sentinel for the even prime
  if (p < 2 || p % 3 != 1)
    throw std::domain_error("decompose_x2_3y2: " + std::to_string(p) +
                            " has no representation x^2 + 3y^2");
  for (i64 y = 1; 3 * y * y < p; ++y) {
    i64 x = 0;
    if (is_perfect_square(p - 3 * y * y, &x) && x > 0) return {x, y};
  }
  throw std::domain_error("decompose_x2_3y2: no representation found for " +
                          std::to_string(p));
}

std::optional<EisensteinInt> EisensteinInt::divided_by(const EisensteinInt& d) const {
  i64 nd = d.norm();
  if (nd == 0) return std::nullopt;
  // this / d = this * conj(d) / norm(d)
  i64 re = checked_add(checked_mul(u, d.u), 3 * checked_mul(v, d.v));
  i64 im = checked_sub(checked_mul(v, d.u), checked_mul(u, d.v));
  if (re % nd != 0 || im % nd != 0) return std::nullopt;
  return EisensteinInt{re / nd, im / nd};
}

EisensteinInt FactorizationResult::value() const {
  EisensteinInt acc{content, 0};
  for (const auto& [prime, exp] : factors)
    for (int i = 0; i < exp; ++i) acc = acc * prime;
  return acc;
}

FactorizationResult eisenstein_factorization(i64 u, i64 v) {
  if (u == 0 && v == 0)
    throw std::invalid_argument("eisenstein_factorization: zero input");

  FactorizationResult res;
  res.content = std::gcd(u, v);
  EisensteinInt work{u / res.content, v / res.content};

  for (const auto& [p, e] : factorize(work.norm())) {
    EisensteinInt prime{0, 0};
    int want = e;
    if (p == 2) {
      // The reduced value has both parts odd here, so its norm carries 2^2
      // and a single factor 1 +- w (norm 4) accounts for it.
      if (e != 2)
        throw std::domain_error("eisenstein_factorization: unexpected power of 2 in norm");
      prime = {1, 1};
      want = 1;
    } else if (p % 3 == 1) {
      auto [x, y] = decompose_x2_3y2(p);
      prime = {x, y};
    } else {
      throw std::domain_error(
          "eisenstein_factorization: norm has inadmissible prime factor " +
          std::to_string(p));
    }

    // Peel the chosen conjugate off the running value; split exponents across
    // both conjugates if needed.
    int taken = 0;
    while (taken < want) {
      auto q = work.divided_by(prime);
      if (!q) break;
      work = *q;
      ++taken;
    }
    if (taken > 0) res.factors.emplace_back(prime, taken);
    if (taken < want) {
      EisensteinInt cp = prime.conj();
      int taken2 = 0;
      while (taken2 < want - taken) {
        auto q = work.divided_by(cp);
        if (!q)
          throw std::domain_error("eisenstein_factorization: prime " +
                                  std::to_string(p) + " does not divide out");
        work = *q;
        ++taken2;
      }
      res.factors.emplace_back(cp, taken2);
    }
  }

  if (work.u == -1 && work.v == 0) {
    // Residual unit -1: fold it into the last factor with an odd exponent.
    // (Flipping the highest-norm factor keeps the small primes in the form
    // the divisor matching of find_rs expects.)
    auto it = std::find_if(res.factors.rbegin(), res.factors.rend(),
                           [](const auto& f) { return f.second % 2 == 1; });
    if (it != res.factors.rend()) {
      it->first = it->first.negated();
    } else if (!res.factors.empty()) {
      // Every exponent even: split one negated copy off the last factor,
      // p^e = p^(e-1) * (-p) * (-1).
      auto& last = res.factors.back();
      last.second -= 1;
      res.factors.emplace_back(last.first.negated(), 1);
    } else {
      throw std::domain_error("eisenstein_factorization: residual unit -1 cannot be absorbed");
    }
    work = {1, 0};
  }
  if (!(work.u == 1 && work.v == 0))
    throw std::domain_error("eisenstein_factorization: incomplete factorization");

  EisensteinInt check = res.value();
  if (check.u != u || check.v != v)
    throw std::logic_error("eisenstein_factorization: reconstruction mismatch");
  return res;
}

namespace {

// Canonical associate: unique representative of {z, -z} with positive leading
// component.
EisensteinInt canonical_associate(const EisensteinInt& z) {
  if (z.u < 0 || (z.u == 0 && z.v < 0)) return z.negated();
  return z;
}

}  // namespace

RsPair find_rs(i64 A, i64 B, i64 q) {
  if (q < 1) throw std::invalid_argument("find_rs: q must be >= 1");
  if (A == 0 && B == 0) throw std::invalid_argument("find_rs: zero input");

  // The congruences are stated for A - B*sqrt(3)*i; the parameterization
  // formulas consume (r, s) in this convention.
  const i64 vpart = -B;
  FactorizationResult f = eisenstein_factorization(A, vpart);

  const i64 two_q = 2 * q;
  // Rational content shared with 2q, limited to the part whose square still
  // divides 2q (the accumulated divisor contributes its norm, content^2).
  i64 common = std::gcd(f.content, two_q);
  i64 g = 1;
  for (const auto& [p, e] : factorize(common)) {
    int take = std::min(e, valuation(two_q, p) / 2);
    for (int i = 0; i < take; ++i) g *= p;
  }

  EisensteinInt P{g, 0};
  i64 qq = two_q / (g * g);
  for (const auto& [p, e] : factorize(qq)) {
    int f2 = (p == 2) ? 1 : e;
    auto [x, y] = decompose_x2_3y2(p);
    EisensteinInt plus{x, y}, minus{x, -y};
    for (const auto& [prime, exp] : f.factors) {
      EisensteinInt cp = canonical_associate(prime);
      if (cp == plus || cp == minus) {
        int take = std::min(exp, f2);
        for (int i = 0; i < take; ++i) P = P * prime;
      }
    }
  }

  RsPair rs;
  rs.s = P.u;
  rs.r = P.v;
  rs.residue1 = mod_floor(checked_add(checked_mul(A, rs.s), 3 * checked_mul(vpart, rs.r)), two_q);
  rs.residue2 = mod_floor(checked_sub(checked_mul(A, rs.r), checked_mul(vpart, rs.s)), two_q);
  if (rs.residue1 != 0 || rs.residue2 != 0) {
    std::ostringstream os;
    os << "find_rs: congruences not satisfied for A=" << A << " B=" << B << " q=" << q
       << " (r=" << rs.r << ", s=" << rs.s << ", residues " << rs.residue1 << ", "
       << rs.residue2 << " mod " << two_q << ")";
    throw std::domain_error(os.str());
  }
  return rs;
}

}  // namespace octa
