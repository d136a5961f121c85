#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fibresum/pipeline.hpp"

using namespace fibresum;

TEST_CASE("integer serialization") {
  CHECK(json_int(42).is_number_integer());
  CHECK(int_from_json(json_int(42)) == 42);
  const Int big("123456789012345678901234567890");
  CHECK(json_int(big).is_string());
  CHECK(int_from_json(json_int(big)) == big);
  CHECK(int_from_json(json_int(-big)) == -big);
  CHECK_THROWS_AS(int_from_json(Json("not-a-number")), ValidationError);
  CHECK_THROWS_AS(int_from_json(Json(1.5)), ValidationError);
}

TEST_CASE("lattice serialization round trip") {
  const IntegralLattice L = direct_sum(e8_form(-1), hyperbolic_plane());
  const Json j = lattice_to_json(L);
  const IntegralLattice back = lattice_from_json(j);
  CHECK(back.gram == L.gram);
  CHECK_THROWS_AS(lattice_from_json(Json{{"rank", 2}, {"gram", Json::array({1})}}),
                  ValidationError);
  CHECK_THROWS_AS(lattice_from_json(Json{{"rank", 1}, {"gram", Json::array({1})},
                                         {"extra", 0}}),
                  ValidationError);
}

TEST_CASE("normal-form labels") {
  const auto x = iterated_fibre_sum(preset_manifold("E1"), 2);
  const Json labels = labels_to_json(x.labels);
  CHECK(labels.size() == x.manifold.lattice.rank());
  CHECK(labels[x.b_index] == "B");
  CHECK(labels[x.fibre_index] == "Sigma");
  CHECK(labels[x.s_index(0)] == "S1");
  CHECK(labels[x.r_index(0)] == "R1");
  CHECK(labels[0] == "P0.0");
}

TEST_CASE("manifest: invariants of an iterated elliptic sum") {
  const Json manifest{{"surface", "E1"},
                      {"operations", Json::array({Json{{"op", "invariants"}, {"n", 3}}})}};
  const Json report = run_manifest(manifest);
  const Json& inv = report["results"][0]["invariants"];
  CHECK(inv["e"] == 36);
  CHECK(inv["sigma"] == -24);
  CHECK(inv["K_dot_section"] == 1);  // K = (n-2) Sigma pairs n-2 with B
  CHECK(inv["K_divisibility"] == 1);
  CHECK(report["surface"]["d"] == 0);
}

TEST_CASE("manifest: classification of the doubled elliptic surface") {
  const Json manifest{{"surface", "E1"},
                      {"operations", Json::array({Json{{"op", "classify"}, {"n", 2}}})}};
  const Json report = run_manifest(manifest);
  CHECK(report["results"][0]["form"]["decomposition"] == "2·E8(-1) ⊕ 3·H");
}

TEST_CASE("manifest: obstruction on the quintic model") {
  const Json manifest{
      {"surface", "quintic"},
      {"operations", Json::array({Json{{"op", "obstruction"}, {"a", 1}, {"n", 2}}})}};
  const Json report = run_manifest(manifest);
  const Json& r = report["results"][0];
  CHECK(r["d"] == 2);
  CHECK(r["obstructed"] == true);
  CHECK(r["div_untwisted"] != r["div_twisted"]);
}

TEST_CASE("manifest: pencil parameters") {
  const Json manifest{
      {"surface", "quintic"},
      {"operations",
       Json::array({Json{{"op", "pencil-params"}, {"d", 3}, {"s0", 5}, {"k0", 10}}})}};
  const Json report = run_manifest(manifest);
  CHECK(report["results"][0]["s"] == 6);
  CHECK(report["results"][0]["k"] == 11);
}

TEST_CASE("manifest: sw-classes and mst on the quintic model") {
  const Json manifest{
      {"surface", "quintic"},
      {"operations", Json::array({Json{{"op", "sw-classes"}},
                                  Json{{"op", "mst"}, {"n", 2}}})}};
  const Json report = run_manifest(manifest);
  CHECK(report["results"][0]["count"] == 64);
  CHECK(report["results"][0]["max_fibre_count"] == 1);
  CHECK(report["results"][0]["surviving_is_canonical"] == true);
  CHECK(report["results"][1]["classes"] == 2);
  CHECK(report["results"][1]["sw_magnitude"] == 1);
}

TEST_CASE("manifest: canonical data agreement") {
  const Json manifest{
      {"surface", "quintic"},
      {"operations", Json::array({Json{{"op", "canonical"}, {"n", 3}}})}};
  const Json report = run_manifest(manifest);
  const Json& r = report["results"][0];
  CHECK(r["agree"] == true);
  CHECK(r["K_dot_fibre"] == 10);
  CHECK(r["K_dot_section"] == 1);
}

TEST_CASE("manifest: twisted and untwisted sums agree at C = 0") {
  const Json a{{"surface", "E1"},
               {"operations",
                Json::array({Json{{"op", "fibresum"}, {"m", 1}, {"n", 1}}})}};
  const Json b{{"surface", "E1"},
               {"operations", Json::array({Json{{"op", "fibresum"}, {"n", 2}}})}};
  const Json ra = run_manifest(a);
  const Json rb = run_manifest(b);
  CHECK(ra["results"][0]["invariants"] == rb["results"][0]["invariants"]);
}

TEST_CASE("manifest validation errors") {
  CHECK_THROWS_AS(run_manifest(Json{{"surface", "E1"}}), ValidationError);
  CHECK_THROWS_AS(run_manifest(Json{{"surface", "E1"},
                                    {"operations", Json::array()},
                                    {"bogus", 1}}),
                  ValidationError);
  CHECK_THROWS_AS(
      run_manifest(Json{{"surface", "E1"},
                        {"operations", Json::array({Json{{"op", "nope"}}})}}),
      ValidationError);
  CHECK_THROWS_AS(
      run_manifest(Json{{"surface", "E1"},
                        {"operations",
                         Json::array({Json{{"op", "invariants"}, {"zz", 1}}})}}),
      ValidationError);
  CHECK_THROWS_AS(
      run_manifest(Json{{"surface", "E1"},
                        {"operations", Json::array()},
                        {"output", "xml"}}),
      ValidationError);
  CHECK_THROWS_AS(run_manifest(Json{{"surface", "unknown-preset"},
                                    {"operations", Json::array()}}),
                  ValidationError);
}

TEST_CASE("raw surface data through the manifest") {
  // CP^2 with the cubic pencil, written out explicitly
  Json surface;
  surface["name"] = "cp2-raw";
  surface["K_squared"] = 9;
  surface["euler"] = 3;
  surface["degree"] = 9;
  surface["lattice"] = Json{{"rank", 1}, {"gram", Json::array({1})}};
  surface["canonical"] = Json::array({-3});
  surface["hyperplane"] = Json::array({3});
  const Json manifest{{"surface", surface},
                      {"operations",
                       Json::array({Json{{"op", "invariants"}, {"n", 1}}})}};
  const Json report = run_manifest(manifest);
  CHECK(report["results"][0]["invariants"]["e"] == 12);
  CHECK(report["results"][0]["invariants"]["sigma"] == -8);
  CHECK(report["surface"]["genus"] == 1);
}

TEST_CASE("reports are byte-stable and round-trip through json") {
  const Json manifest{
      {"surface", "quintic"},
      {"operations", Json::array({Json{{"op", "fibresum"}, {"n", 2}},
                                  Json{{"op", "canonical"}, {"n", 2}}})}};
  const std::string once = render_json(run_manifest(manifest));
  const std::string twice = render_json(run_manifest(manifest));
  CHECK(once == twice);
  CHECK(render_json(Json::parse(once)) == once);

  const std::string human = render_human(run_manifest(manifest));
  CHECK(human.find("surface.name") != std::string::npos);
}

TEST_CASE("selftest runs clean on several seeds") {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    const Json r = run_selftest(seed, 5);
    CHECK(r["selftest"] == "ok");
  }
}
