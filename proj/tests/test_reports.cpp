#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include "platcover/catalog.hpp"
#include "platcover/errors.hpp"
#include "platcover/report.hpp"
#include "support.hpp"

using namespace platcover;

TEST_CASE("catalog entries reproduce their stored mu and linking matrix") {
  for (const CatalogEntry& entry : catalog()) {
    const PlatPresentation plat = entry.plat();
    const ComponentPartition part = components(plat);
    CHECK(part.mu == entry.expected_mu);
    if (entry.expected_lk) {
      const LinkingMatrix lk = linking_matrix(orient(plat, part));
      CHECK(lk.entries == *entry.expected_lk);
    }
  }
  CHECK(find_catalog_entry("hopf") != nullptr);
  CHECK(find_catalog_entry("missing") == nullptr);
}

TEST_CASE("plat files round-trip through JSON") {
  const Json j{{"strands", 4}, {"word", {2, -1, 2}}, {"name", "sample"}};
  const NamedPlat loaded = plat_from_json(j);
  CHECK(loaded.name == "sample");
  CHECK(loaded.plat.strand_count() == 4);
  CHECK(to_text(loaded.plat.word()) == "2 -1 2");

  CHECK_THROWS_AS(plat_from_json(Json{{"strands", 4}}), ParseError);
  CHECK_THROWS_AS(plat_from_json(Json{{"strands", 3}, {"word", {1}}}),
                  ParseError);
  CHECK_THROWS_AS(
      plat_from_json(Json{{"strands", 4}, {"word", {0}}}), ParseError);
  CHECK_THROWS_AS(load_plat_file("/nonexistent/plat.json"), ParseError);
}

TEST_CASE("covering specs parse and validate") {
  const CoveringSpec spec =
      covering_from_json(Json{{"p", 6}, {"weights", {2, 3}}});
  CHECK(spec.p == 6);
  CHECK(spec.weights == std::vector<int>{2, 3});
  CHECK_THROWS_AS(covering_from_json(Json{{"p", 6}}), ParseError);
}

TEST_CASE("seed specs parse into per-component directions") {
  const auto seeds = parse_seed_spec("2:backward", 3);
  CHECK(seeds[0] == ArcDirection::Forward);
  CHECK(seeds[1] == ArcDirection::Backward);
  CHECK(seeds[2] == ArcDirection::Forward);
  CHECK_THROWS_AS(parse_seed_spec("5:backward", 3), PreconditionError);
  CHECK_THROWS_AS(parse_seed_spec("nonsense", 3), ParseError);
  CHECK_THROWS_AS(parse_seed_spec("1:sideways", 3), ParseError);
}

TEST_CASE("info report fields") {
  const CatalogEntry* hopf = find_catalog_entry("hopf");
  REQUIRE(hopf != nullptr);
  const Json report = info_report(NamedPlat{hopf->plat(), hopf->name});
  CHECK(report["mu"] == 2);
  CHECK(report["n_j"] == Json::array({1, 1}));
  CHECK(report["conditions"]["c1"] == true);
  CHECK(report["conditions"]["c2"] == true);
  CHECK(report["conditions"]["c2prime"] == true);
  CHECK(report["lk"][0][1] == -1);
  CHECK(report["parity_preserving"] == true);

  // reversing component 2 negates the off-diagonal entries
  const Json reversed =
      info_report(NamedPlat{hopf->plat(), hopf->name}, "2:backward");
  CHECK(reversed["lk"][0][1] == 1);
}

TEST_CASE("specialize report replays and preserves invariants") {
  const CatalogEntry* twist = find_catalog_entry("twist");
  REQUIRE(twist != nullptr);
  const Json report = specialize_report(NamedPlat{twist->plat(), twist->name});
  CHECK(report["conditions"]["c1"] == true);
  CHECK(report["conditions"]["c2"] == true);
  CHECK(report["invariants"]["lk_equivalent"] == true);
  CHECK(report["trace"].size() == 1);
  CHECK(report["trace"][0]["move"] == "II'");
  CHECK(report["output"]["word"] == Json::array({1, -1}));
}

TEST_CASE("cover pipeline classifies, reports genus and bounds") {
  const CatalogEntry* trefoil = find_catalog_entry("trefoil");
  REQUIRE(trefoil != nullptr);
  const NamedPlat input{trefoil->plat(), trefoil->name};

  const CoverComputation c =
      compute_cover(input, CoveringSpec{2, {1}});
  CHECK(c.specialized);  // "2 2 2" violates condition (2)

  const Json classify_report = cover_classify_report(c);
  CHECK(classify_report["classification"]["strictly_cyclic"] == true);

  const Json genus_report = cover_genus_report(c);
  CHECK(genus_report["genus"] == 1);
  CHECK(genus_report["chi"] == 0);
  CHECK(genus_report["heegaard_genus"] == 1);
  CHECK(genus_report["branch_points"][0]["label"] == "A1");
  CHECK(genus_report["branch_points"][1]["label"] == "B1");
  CHECK(genus_report["branch_points"][2]["label"] == "A2");

  const Json bounds_report = cover_bounds_report(c);
  CHECK(bounds_report["bounds"]["genus_bound"] == 1);
  CHECK(bounds_report["bounds"]["p_star"] == 1);

  // weight count mismatches and disabled specialization are rejected
  CHECK_THROWS_AS(compute_cover(input, CoveringSpec{2, {1, 1}}),
                  PreconditionError);
  CoverOptions no_spec;
  no_spec.allow_specialize = false;
  CHECK_THROWS_AS(compute_cover(input, CoveringSpec{2, {1}}, no_spec),
                  PreconditionError);
}

TEST_CASE("two-bridge covers reach genus p-1") {
  const CatalogEntry* hopf = find_catalog_entry("hopf");
  REQUIRE(hopf != nullptr);
  const CoverComputation c = compute_cover(
      NamedPlat{hopf->plat(), hopf->name}, CoveringSpec{5, {1, 1}});
  CHECK_FALSE(c.specialized);
  const Json report = cover_genus_report(c);
  CHECK(report["genus"] == 4);
}

TEST_CASE("monodromy-only classification via the CLI pipeline") {
  const CatalogEntry* hopf = find_catalog_entry("hopf");
  const CoverComputation c = compute_cover(
      NamedPlat{hopf->plat(), hopf->name}, CoveringSpec{6, {2, 3}});
  const Json report = cover_classify_report(c);
  CHECK(report["classification"]["monodromy_cyclic"] == true);
  CHECK(report["classification"]["singly_cyclic"] == false);
  CHECK(report["classification"]["strictly_cyclic"] == false);
  CHECK(is_connected_cover(c.branch));
}

TEST_CASE("lift-check report") {
  const CatalogEntry* hopf = find_catalog_entry("hopf");
  const CoverComputation c = compute_cover(
      NamedPlat{hopf->plat(), hopf->name}, CoveringSpec{4, {1, 3}});
  // weights (1, 3, 3, 1): reversal preserves them, a front swap does not
  const Json yes =
      cover_lift_check_report(c, std::vector<int>{4, 3, 2, 1});
  CHECK(yes["lifts"] == true);
  const Json no = cover_lift_check_report(c, std::vector<int>{2, 1, 3, 4});
  CHECK(no["lifts"] == false);
}

TEST_CASE("reports are deterministic within a process") {
  const CatalogEntry* chain = find_catalog_entry("chain3");
  REQUIRE(chain != nullptr);
  const NamedPlat input{chain->plat(), chain->name};
  CHECK(info_report(input).dump(2) == info_report(input).dump(2));
  CHECK(specialize_report(input).dump(2) == specialize_report(input).dump(2));
  const CoveringSpec spec{2, {1, 1, 1}};
  CHECK(cover_genus_report(compute_cover(input, spec)).dump(2) ==
        cover_genus_report(compute_cover(input, spec)).dump(2));
}

TEST_CASE("catalog reports list entries sorted by name") {
  const Json list = catalog_list_report();
  std::string previous;
  for (const auto& entry : list["entries"]) {
    const std::string name = entry["name"].get<std::string>();
    CHECK(previous < name);
    previous = name;
  }
  const Json shown = catalog_show_report("unlink2");
  CHECK(shown["entry"]["strands"] == 4);
  CHECK(shown["info"]["mu"] == 2);
  CHECK_THROWS_AS(catalog_show_report("nope"), PreconditionError);
}

TEST_CASE("text rendering flattens reports deterministically") {
  const Json j{{"a", 1}, {"b", Json{{"c", true}}}, {"d", Json::array({1, 2})}};
  CHECK(render_text(j) == "a = 1\nb.c = true\nd = [1,2]\n");
}
