#include <doctest.h>

#include <random>
#include <set>

#include "octa/octahedron.hpp"
#include "support/fixtures.hpp"

using namespace octa;

TEST_CASE("subtract is componentwise") {
  CHECK(subtract({2, 1, 1}, {1, 1, 0}) == Vec3{1, 0, 1});
  CHECK(subtract({0, 0, 0}, {0, 0, 0}) == Vec3{0, 0, 0});
  CHECK(subtract({2401, 1521, 3822}, {1421, 2301, 0}) == Vec3{980, -780, 3822});
}

TEST_CASE("squared_distance") {
  CHECK(squared_distance({0, 1, 1}, {1, 0, 1}) == 2);
  CHECK(squared_distance({5, -3, 7}, {5, -3, 7}) == 0);
  // An edge of the side-2011 octahedron.
  CHECK(squared_distance({2401, 1521, 3822}, {3822, 2401, 1521}) == 2 * 2011 * 2011);
}

TEST_CASE("squared_distance agrees with the norm of the difference") {
  std::mt19937_64 rng(20138);
  std::uniform_int_distribution<i64> coord(-5000, 5000);
  for (int i = 0; i < 200; ++i) {
    Vec3 a{coord(rng), coord(rng), coord(rng)};
    Vec3 b{coord(rng), coord(rng), coord(rng)};
    CHECK(squared_distance(a, b) == norm2(subtract(a, b)));
  }
}

TEST_CASE("overflow is trapped") {
  const i64 big = INT64_MAX / 2 + 1;
  CHECK_THROWS_AS(norm2(Vec3{big, big, big}), arithmetic_error);
  CHECK_THROWS_AS((void)(Vec3{big, 0, 0} + Vec3{big, 0, 0}), arithmetic_error);
}

TEST_CASE("PointConfig canonical form") {
  PointConfig c({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(c.points()[0] == Vec3{0, 1, 1});
  CHECK(c.points()[2] == Vec3{1, 1, 0});
  // Re-sorting an already-sorted config is a no-op.
  CHECK(PointConfig(c.points()) == c);
  CHECK_THROWS_AS(PointConfig({{1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("bounding_box") {
  BoundingBox bb = bounding_box(fixtures::triangle());
  CHECK(bb.dims == std::array<i64, 3>{7, 7, 2});
  CHECK(bb.deficits == std::array<i64, 3>{0, 0, 5});
  CHECK(bb.distinct_deficit_count == 2);

  BoundingBox oc2 = bounding_box(fixtures::oc2());
  CHECK(oc2.dims == std::array<i64, 3>{4, 4, 4});
  CHECK(oc2.distinct_deficit_count == 1);

  BoundingBox pt = bounding_box(fixtures::make_config({{3, -1, 2}}));
  CHECK(pt.dims == std::array<i64, 3>{0, 0, 0});
  CHECK(pt.distinct_deficit_count == 1);
}

TEST_CASE("Octahedron validates the full invariant list") {
  Octahedron oc1 = Octahedron::from_config(fixtures::oc1());
  CHECK(oc1.side_sq() == 2);
  CHECK(oc1.side_factor() == 1);
  CHECK(oc1.center2() == Vec3{2, 2, 2});

  Octahedron oc2 = Octahedron::from_config(fixtures::oc2());
  CHECK(oc2.side_factor() == 3);

  Octahedron big = Octahedron::from_config(fixtures::k2011_normalized());
  CHECK(big.side_factor() == 2011);

  // Semi-axes: orthogonal, equal norm, integral.
  for (const Octahedron* o : {&oc1, &oc2, &big}) {
    const auto& g = o->axes2();
    for (int i = 0; i < 3; ++i) {
      CHECK(norm2(g[i]) == 4 * o->side_factor() * o->side_factor());
      for (int j = i + 1; j < 3; ++j) CHECK(dot(g[i], g[j]) == 0);
    }
    // The dual cube: eight distinct integer corners center +- e1 +- e2 +- e3.
    std::set<Vec3> corners;
    for (int mask = 0; mask < 8; ++mask) {
      Vec3 c2 = o->center2();
      for (int i = 0; i < 3; ++i) c2 = (mask >> i & 1) ? c2 + g[i] : c2 - g[i];
      CHECK(c2.x % 2 == 0);
      CHECK(c2.y % 2 == 0);
      CHECK(c2.z % 2 == 0);
      corners.insert({c2.x / 2, c2.y / 2, c2.z / 2});
    }
    CHECK(corners.size() == 8);
  }
}

TEST_CASE("Octahedron rejects invalid six-point sets") {
  // A cube's corner set is not an octahedron.
  CHECK_THROWS_AS(Octahedron::from_points(
                      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}}),
                  std::domain_error);
  // Five points only.
  CHECK_THROWS_AS(Octahedron::from_points({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 2}, {1, 2, 1}}),
                  std::domain_error);
  // Stretched along one axis: distances split 8/4/2/1, not 12/3.
  CHECK_THROWS_AS(Octahedron::from_points(
                      {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 4}, {1, 2, 1}, {2, 1, 1}}),
                  std::domain_error);
}

TEST_CASE("Octahedron scaling and translation") {
  Octahedron oc1 = Octahedron::from_config(fixtures::oc1());
  CHECK(oc1.scaled(1) == oc1);
  CHECK(oc1.scaled(2).side_factor() == 2);
  CHECK(oc1.translated({5, -3, 11}).normalized() == oc1);
  CHECK_THROWS_AS(oc1.scaled(0), std::invalid_argument);
}
