#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "octa/quadratic_forms.hpp"

using namespace octa;

TEST_CASE("intmath basics") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(4044121) == 2011);
  i64 r = 0;
  CHECK(is_perfect_square(3822 * 3822, &r));
  CHECK(r == 3822);
  CHECK_FALSE(is_perfect_square(2));
  CHECK(factorize(22516) ==
        std::vector<std::pair<i64, int>>{{2, 2}, {13, 1}, {433, 1}});
  CHECK(mod_floor(-13, 4) == 3);
  CHECK_THROWS_AS(exact_div(5, 2), arithmetic_error);
}

TEST_CASE("k_values") {
  CHECK(k_values(100) == std::vector<i64>{1, 7, 13, 19, 31, 37, 43, 49, 61, 67, 73, 79, 91, 97});
  CHECK(k_values(1) == std::vector<i64>{1});
  CHECK(k_values(14) == std::vector<i64>{1, 7, 13});
}

TEST_CASE("primitive_mn_pairs matches the worked examples") {
  CHECK(primitive_mn_pairs(79) == std::vector<std::pair<i64, i64>>{{40, 91}});
  CHECK(primitive_mn_pairs(1) == std::vector<std::pair<i64, i64>>{{0, 1}});
  CHECK(primitive_mn_pairs(2011) == std::vector<std::pair<i64, i64>>{{880, 2301}});
  // omega(91) = 2 distinct admissible primes, so 2 pairs; values from an
  // exhaustive scan of m = 0..91.
  CHECK(primitive_mn_pairs(91) == std::vector<std::pair<i64, i64>>{{11, 96}, {19, 99}});
}

TEST_CASE("primitive_mn_pairs invariants over k_values(200)") {
  for (i64 k : k_values(200)) {
    auto pairs = primitive_mn_pairs(k);
    for (const auto& [m, n] : pairs) {
      CHECK(k * k == m * m - m * n + n * n);
      CHECK(std::gcd(m, n) == 1);
      CHECK(2 * m < n);
    }
    if (k > 1) {
      int omega = 0;
      for (const auto& [p, e] : factorize(k)) {
        (void)e;
        if (p % 3 == 1) ++omega;
      }
      CHECK(static_cast<i64>(pairs.size()) == (i64{1} << (omega - 1)));
    }
  }
}

TEST_CASE("abc_triples matches the worked examples") {
  CHECK(abc_triples(1) == std::vector<std::array<i64, 3>>{{1, 1, 1}});
  CHECK(abc_triples(17) == std::vector<std::array<i64, 3>>{
                               {1, 5, 29}, {7, 17, 23}, {11, 11, 25}, {13, 13, 23}});
  CHECK(abc_triples(19) == std::vector<std::array<i64, 3>>{
                               {1, 11, 31}, {5, 23, 23}, {11, 11, 29}, {13, 17, 25}});
  CHECK(abc_triples(2011).size() == 336);
}

TEST_CASE("abc_triples is exhaustive (independent triple loop, d <= 50)") {
  for (i64 d = 1; d <= 50; ++d) {
    std::set<std::array<i64, 3>> expect;
    for (i64 a = 1; a <= 2 * d; ++a)
      for (i64 b = a; b <= 2 * d; ++b)
        for (i64 c = b; c <= 2 * d; ++c)
          if (a * a + b * b + c * c == 3 * d * d && gcd3(a, b, c) == 1)
            expect.insert({a, b, c});
    auto got = abc_triples(d);
    CHECK(std::set<std::array<i64, 3>>(got.begin(), got.end()) == expect);
    CHECK(got.size() == expect.size());
    for (const auto& [a, b, c] : got) {
      CHECK(a * a + b * b + c * c == 3 * d * d);
      CHECK(gcd3(a, b, c) == 1);
      CHECK((0 < a && a <= b && b <= c));
    }
  }
}

TEST_CASE("decompose_x2_3y2") {
  CHECK(decompose_x2_3y2(2011) == std::pair<i64, i64>{44, 5});
  CHECK(decompose_x2_3y2(7) == std::pair<i64, i64>{2, 1});
  CHECK(decompose_x2_3y2(13) == std::pair<i64, i64>{1, 2});
  CHECK(decompose_x2_3y2(2) == std::pair<i64, i64>{1, 1});
  CHECK_THROWS_AS(decompose_x2_3y2(3), std::domain_error);
  CHECK_THROWS_AS(decompose_x2_3y2(5), std::domain_error);
  CHECK_THROWS_AS(decompose_x2_3y2(11), std::domain_error);
}

TEST_CASE("decompose_x2_3y2 round-trips on all primes = 1 mod 3 below 10^4") {
  for (i64 p = 7; p < 10000; p += 6) {
    if (factorize(p).size() != 1 || factorize(p)[0].second != 1) continue;
    auto [x, y] = decompose_x2_3y2(p);
    CHECK(x > 0);
    CHECK(y > 0);
    CHECK(x * x + 3 * y * y == p);
  }
}

TEST_CASE("eisenstein_factorization worked examples") {
  // 13 + 17w = (1+w)(2+w)(5-2w), w = sqrt(3)i.
  FactorizationResult f = eisenstein_factorization(13, 17);
  CHECK(f.content == 1);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<EisensteinInt, int>{{1, 1}, 1});
  CHECK(f.factors[1] == std::pair<EisensteinInt, int>{{2, 1}, 1});
  CHECK(f.factors[2] == std::pair<EisensteinInt, int>{{5, -2}, 1});
  CHECK(f.value() == EisensteinInt{13, 17});

  // Content extraction absorbs 4 + 0w entirely.
  FactorizationResult g = eisenstein_factorization(4, 0);
  CHECK(g.content == 4);
  CHECK(g.factors.empty());

  // Reconstruction on the d=17 pipeline input.
  FactorizationResult h = eisenstein_factorization(29, -85);
  CHECK(h.content == 1);
  CHECK(h.value() == EisensteinInt{29, -85});
}

TEST_CASE("eisenstein_factorization reconstructs 500 random admissible inputs") {
  // Admissible primes of small norm, plus the special factor of norm 4.
  const std::vector<EisensteinInt> primes = {
      {1, 1}, {2, 1}, {1, 2}, {4, 1}, {2, 3}, {5, 2}, {4, 3}, {1, 4}, {7, 2}};
  std::mt19937_64 rng(178797);
  std::uniform_int_distribution<int> npick(1, 4), pick(0, static_cast<int>(primes.size()) - 1);
  std::uniform_int_distribution<int> content(1, 9);
  std::uniform_int_distribution<int> coin(0, 1);

  int tested = 0;
  while (tested < 500) {
    EisensteinInt x{content(rng), 0};
    bool used_two = false;
    for (int i = npick(rng); i > 0; --i) {
      EisensteinInt p = primes[pick(rng)];
      if (p == EisensteinInt{1, 1}) {
        if (used_two) continue;  // norm-4 factor at most once per primitive part
        used_two = true;
      }
      if (coin(rng)) p = p.conj();
      x = x * p;
    }
    if (coin(rng)) x = x.negated();
    if (x.v == 0 && x.u < 0) continue;  // pure negative integers stay unrepresentable
    FactorizationResult f = eisenstein_factorization(x.u, x.v);
    CHECK(f.value() == x);
    ++tested;
  }
}

TEST_CASE("eisenstein_factorization error paths") {
  CHECK_THROWS_AS(eisenstein_factorization(0, 0), std::invalid_argument);
  // Norm divisible by 3: inadmissible.
  CHECK_THROWS_AS(eisenstein_factorization(3, 1), std::domain_error);
  CHECK_THROWS_AS(eisenstein_factorization(0, 1), std::domain_error);
  // A negative rational integer has no prime part to carry the unit.
  CHECK_THROWS_AS(eisenstein_factorization(-7, 0), std::domain_error);
}

TEST_CASE("find_rs matches the d = 17 worked example") {
  RsPair rs = find_rs(29, -85, 26);
  CHECK(rs.r == -1);
  CHECK(rs.s == 7);
  CHECK(rs.residue1 == 0);
  CHECK(rs.residue2 == 0);
}

TEST_CASE("find_rs residues vanish for every pipeline input with d <= 50") {
  for (i64 d = 1; d <= 50; d += 2) {
    for (const auto& [a, b, c] : abc_triples(d)) {
      RsPair rs = find_rs(a * c, b * d, a * a + b * b);
      CHECK(rs.residue1 == 0);
      CHECK(rs.residue2 == 0);
    }
  }
}

TEST_CASE("find_rs on real-integer input") {
  // A = q, B = 0: the congruences degenerate to 2q | q*s; pipeline q is
  // always even, which makes them satisfiable.
  for (i64 q : {2, 26, 50, 74}) {
    RsPair rs = find_rs(q, 0, q);
    CHECK(mod_floor(q * rs.s, 2 * q) == 0);
    CHECK(mod_floor(q * rs.r, 2 * q) == 0);
    CHECK(rs.residue1 == 0);
    CHECK(rs.residue2 == 0);
  }
}
