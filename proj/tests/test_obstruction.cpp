#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibresum/obstruction.hpp"

using namespace fibresum;

TEST_CASE("divides with the zero convention") {
  CHECK(divides(0, 0));
  CHECK_FALSE(divides(0, 2));
  CHECK_FALSE(divides(2, 1));
  CHECK(divides(2, 4));
  CHECK(divides(3, -9));
  CHECK(divides(1, 7));
}

TEST_CASE("extension obstruction examples") {
  const auto v = extension_obstructed(2, 1, 2);
  CHECK(v.obstructed);  // 2 does not divide 1
  REQUIRE(v.witness_m.has_value());
  CHECK(v.div_untwisted != v.div_twisted);

  for (int n = 1; n <= 6; ++n)
    CHECK_FALSE(extension_obstructed(0, 0, n).obstructed);

  CHECK(extension_obstructed(0, 1, 3).obstructed);  // 0 divides only 0
  CHECK_FALSE(extension_obstructed(0, 1, 1).obstructed);
  CHECK_FALSE(extension_obstructed(0, 0, 3).obstructed);
}

TEST_CASE("obstruction verdict monotonicity") {
  for (Int d = 1; d <= 8; ++d)
    for (Int a = 0; a <= 8; ++a)
      for (Int n = 1; n <= 6; ++n) {
        const auto v = extension_obstructed(d, a, n);
        if (a % d == 0) CHECK_FALSE(v.obstructed);
        if (gcd(a, d) == 1 && d > 1 && (n - 1) % d != 0) CHECK(v.obstructed);
      }
}

TEST_CASE("witness m distinguishes the two divisibilities") {
  for (Int d = 0; d <= 8; ++d)
    for (Int a = 0; a <= 8; ++a)
      for (Int n = 1; n <= 6; ++n) {
        const Int g = d == 0 ? Int(1) : Int(d + 1);  // ensures d | 2g-2
        const auto v = extension_obstructed(d, a, n, g);
        CHECK(v.obstructed == !divides(d, a * (n - 1)));
        REQUIRE(v.witness_m.has_value());
        CHECK(*v.witness_m >= 1);
        if (v.obstructed)
          CHECK(v.div_untwisted != v.div_twisted);
        else
          CHECK(v.div_untwisted == v.div_twisted);
      }
}

TEST_CASE("reduced criterion equivalence") {
  // divides(d, a((2g-1)n - 1)) = divides(d, a(n-1)) whenever d | 2g-2
  for (Int d = 1; d <= 8; ++d)
    for (Int a = 0; a <= 8; ++a)
      for (Int n = 1; n <= 6; ++n)
        for (Int g : {Int(d + 1), Int(2 * d + 1)}) {
          REQUIRE(divides(d, 2 * g - 2));
          CHECK(divides(d, a * ((2 * g - 1) * n - 1)) ==
                divides(d, a * (n - 1)));
        }
}

TEST_CASE("genus consistency check") {
  CHECK_THROWS_AS(extension_obstructed(3, 1, 2, Int(2)),  // 3 does not divide 2
                  PreconditionError);
  CHECK_NOTHROW(extension_obstructed(3, 1, 2, Int(4)));
}

TEST_CASE("pencil parameter chooser") {
  const auto p = choose_pencil_params(3, 5, 10);
  CHECK(p.s == 6);
  CHECK(p.k == 11);

  const auto q = choose_pencil_params(1, 4, 9);
  CHECK(q.s == 4);
  CHECK(q.k == 9);

  const auto r = choose_pencil_params(4, 4, 7);
  CHECK(r.s == 4);
  CHECK(r.k == 7);

  CHECK_THROWS_AS(choose_pencil_params(0, 1, 1), PreconditionError);

  for (Int d = 1; d <= 6; ++d)
    for (Int s0 = 1; s0 <= 6; ++s0)
      for (Int k0 = 1; k0 <= 6; ++k0) {
        const auto pp = choose_pencil_params(d, s0, k0);
        CHECK(pp.s % d == 0);
        CHECK((pp.k + 1) % d == 0);
        CHECK(pp.s >= s0);
        CHECK(pp.k >= k0);
        CHECK(pp.s < s0 + d);  // minimality
        CHECK(pp.k < k0 + d);
      }
}

TEST_CASE("ample threshold") {
  CHECK(ample_threshold(5, 5, 5) == 1);
  CHECK(ample_threshold(-100, 0, 1) == 11);
  CHECK(ample_threshold(1, 0, 1) == 1);
  CHECK_THROWS_AS(ample_threshold(1, 0, 0), PreconditionError);
  CHECK_THROWS_AS(ample_threshold(1, -1, 1), PreconditionError);
}

TEST_CASE("section genus by adjunction") {
  // quintic with L = K, s = 1, k = 1: Sigma = 2K, g = 1 + (20 + 10)/2
  CHECK(section_genus(5, 5, 5, 1, 1) == 16);
  // quintic O(1) data expressed as L = H - K (so K + L = H): g = 6
  CHECK(section_genus(5, 0, 0, 1, 1) == 6);
  CHECK_THROWS_AS(section_genus(5, 5, 5, 1, 0), PreconditionError);
  CHECK_THROWS_AS(section_genus(0, 1, 0, 1, 1), PreconditionError);  // odd sum
}

TEST_CASE("embedding data satisfies the divisibility target") {
  const auto p = with_embedding(choose_pencil_params(2, 1, 1), 5, 5, 5);
  CHECK(p.s == 2);
  CHECK(p.k == 1);
  CHECK(p.degree == 45);  // (K + 2K)^2 with K^2 = 5
  CHECK(p.genus == 31);   // 1 + (45 + 15)/2
  CHECK(divides(p.d, 2 * p.genus - 2));

  for (Int d = 1; d <= 6; ++d) {
    const auto e = with_embedding(choose_pencil_params(d, 1, 1), 5, 5, 5);
    CHECK(divides(e.d, 2 * e.genus - 2));
    CHECK(e.genus >= 2);
  }
}
