#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibresum/canonical.hpp"
#include "fibresum/seiberg_witten.hpp"

using namespace fibresum;

namespace {

FibreSumResult quintic_Mn_binary(const Fibred4Manifold& q, int n) {
  Fibred4Manifold prev = q;
  FibreSumResult x;
  for (int step = 2; step <= n; ++step) {
    x = generalized_fibre_sum(q, prev, GluingClass::zero(6), IntVec(12, -2),
                              zero_vec(12));
    prev = x.manifold;
  }
  return x;
}

}  // namespace

TEST_CASE("blow-up basic classes") {
  const Fibred4Manifold q = preset_manifold("quintic");
  const BasicClassSet s = basic_classes_blowup(q);
  CHECK(s.size() == 64);  // 2^(r+1) with r = 5
  for (const auto& e : s.entries) {
    CHECK(is_characteristic(q.lattice, e.cls));
    CHECK(pair(q.lattice, e.cls, e.cls) == 0);  // K'^2 - r = 5 - 5
    CHECK(abs(e.sw) == 1);
    // adjunction bound against the fibre
    const Int p = pair(q.lattice, e.cls, q.fibre);
    CHECK(abs(p) <= 10);
  }
  // charge-conjugation symmetry
  for (const auto& e : s.entries) {
    bool found = false;
    for (const auto& f : s.entries)
      if (f.cls == -e.cls && f.sw == -e.sw) found = true;
    CHECK(found);
  }
}

TEST_CASE("blow-up enumeration with no exceptional spheres") {
  Fibred4Manifold m = preset_manifold("quintic");
  m.exceptional.clear();  // model an r = 0 base
  const BasicClassSet s = basic_classes_blowup(m);
  CHECK(s.size() == 2);
  CHECK(max_fibre_filter(s, m.lattice, m.fibre, m.genus).size() == 1);
}

TEST_CASE("blow-up enumeration is gated on the general-type flag") {
  CHECK_THROWS_AS(basic_classes_blowup(preset_manifold("E1")), PreconditionError);
}

TEST_CASE("maximal fibre pairing selects the canonical class only") {
  const Fibred4Manifold q = preset_manifold("quintic");
  const BasicClassSet s = basic_classes_blowup(q);
  const BasicClassSet plus = max_fibre_filter(s, q.lattice, q.fibre, q.genus);
  REQUIRE(plus.size() == 1);
  CHECK(plus.entries[0].cls == q.canonical);
  CHECK(plus.entries[0].sw == 1);

  const BasicClassSet minus = max_fibre_filter(s, q.lattice, q.fibre, q.genus, -1);
  REQUIRE(minus.size() == 1);
  CHECK(minus.entries[0].cls == -q.canonical);

  CHECK(max_fibre_filter(BasicClassSet{}, q.lattice, q.fibre, q.genus).size() == 0);
  CHECK_THROWS_AS(max_fibre_filter(s, q.lattice, q.fibre, 1), PreconditionError);
}

TEST_CASE("normal-form decomposition of the canonical class") {
  const auto x = quintic_Mn_binary(preset_manifold("quintic"), 2);
  const auto d = decompose_characteristic(x, x.manifold.canonical);
  for (const Int& e : d.eps) CHECK(e == 0);
  for (const Int& s : d.s_coeffs) CHECK(s == 0);
  CHECK(d.b_coeff == 10);  // 2g - 2
  CHECK(d.beta == 20);     // (n-2) + (2g-2) n at n = 2
}

TEST_CASE("decomposition of zero in an even lattice") {
  const Fibred4Manifold e1 = preset_manifold("E1");
  const auto x = generalized_fibre_sum(e1, e1, GluingClass::zero(1), {-2, -2});
  const auto d = decompose_characteristic(x, x.manifold.lattice.zero());
  for (const Int& e : d.p_M) CHECK(e == 0);
  for (const Int& e : d.p_N) CHECK(e == 0);
  CHECK(d.b_coeff == 0);
  CHECK(d.beta == 0);
}

TEST_CASE("decomposition rejects invalid basic-class candidates") {
  const auto x = quintic_Mn_binary(preset_manifold("quintic"), 2);
  const auto& L = x.manifold.lattice;
  // adding twice a vanishing-surface vector stays characteristic but has a
  // nonzero S component
  const LatticeVector with_s =
      x.manifold.canonical + Int(2) * L.basis_vector(x.s_index(0));
  CHECK_THROWS_AS(decompose_characteristic(x, with_s), PreconditionError);
  CHECK_NOTHROW(decompose_characteristic(x, with_s, false));
  // non-characteristic inputs: R_1 pairs oddly with S_1, B pairs oddly with Sigma
  const LatticeVector odd = x.manifold.canonical + L.basis_vector(x.r_index(0));
  CHECK_FALSE(is_characteristic(L, odd));
  CHECK_THROWS_AS(decompose_characteristic(x, odd), PreconditionError);
  const LatticeVector bad = x.manifold.canonical + L.basis_vector(x.b_index);
  CHECK_THROWS_AS(decompose_characteristic(x, bad), PreconditionError);
}

TEST_CASE("MST sum on the canonical class has magnitude one") {
  const Fibred4Manifold q = preset_manifold("quintic");
  const BasicClassSet sq = basic_classes_blowup(q);
  const auto x = quintic_Mn_binary(q, 2);
  const auto d = decompose_characteristic(x, x.manifold.canonical);
  CHECK(abs(mst_sum(x, d, sq, sq)) == 1);

  // shifting beta off the matching grid empties the sum
  auto shifted = d;
  shifted.beta += 1;
  CHECK(mst_sum(x, shifted, sq, sq) == 0);
}

TEST_CASE("MST sum is bilinear in the Seiberg-Witten values") {
  const Fibred4Manifold q = preset_manifold("quintic");
  const BasicClassSet sq = basic_classes_blowup(q);
  BasicClassSet scaled = sq;
  for (auto& e : scaled.entries) e.sw *= 3;
  const auto x = quintic_Mn_binary(q, 2);
  const auto d = decompose_characteristic(x, x.manifold.canonical);
  CHECK(mst_sum(x, d, scaled, sq) == 3 * mst_sum(x, d, sq, sq));
}

TEST_CASE("MST preconditions") {
  const Fibred4Manifold e1 = preset_manifold("E1");
  const auto x = generalized_fibre_sum(e1, e1, GluingClass::zero(1), {-2, -2});
  const auto d = decompose_characteristic(x, x.manifold.canonical);
  CHECK_THROWS_AS(mst_sum(x, d, BasicClassSet{}, BasicClassSet{}),
                  PreconditionError);  // g = 1
}

TEST_CASE("the only maximal-pairing basic class of M(n) is the canonical one") {
  const Fibred4Manifold q = preset_manifold("quintic");
  for (int n = 2; n <= 3; ++n) {
    const MnBasicClasses result = basic_classes_Mn_fibre_nonzero(q, n);
    REQUIRE(result.classes.size() == 2);
    const auto& L = result.X.manifold.lattice;
    const auto& K = result.X.manifold.canonical;
    bool plus = false, minus = false;
    for (const auto& e : result.classes.entries) {
      CHECK(abs(e.sw) == 1);
      if (e.cls == K) plus = true;
      if (e.cls == -K) minus = true;
      CHECK(abs(pair(L, e.cls, result.X.manifold.fibre)) == 10);
    }
    CHECK(plus);
    CHECK(minus);
  }
  CHECK_THROWS_AS(basic_classes_Mn_fibre_nonzero(preset_manifold("E1"), 2),
                  PreconditionError);
  CHECK_THROWS_AS(basic_classes_Mn_fibre_nonzero(q, 1), PreconditionError);
}
