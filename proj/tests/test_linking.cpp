#include <random>
#include <vector>

#include <doctest.h>

#include "platcover/errors.hpp"
#include "platcover/linking.hpp"
#include "platcover/plat.hpp"
#include "support.hpp"

using namespace platcover;

namespace {

OrientedPlat oriented_plat(const char* text, int strands) {
  PlatPresentation plat(parse_braid(text, strands));
  const ComponentPartition part = components(plat);
  return orient(plat, part);
}

}  // namespace

TEST_CASE("crossing_sign algebra") {
  const BraidLetter positive{2, 1};
  const BraidLetter negative{2, -1};
  CHECK(crossing_sign(positive, StrandDirection::Descending,
                      StrandDirection::Descending) == 1);
  CHECK(crossing_sign(positive, StrandDirection::Descending,
                      StrandDirection::Ascending) == -1);
  CHECK(crossing_sign(negative, StrandDirection::Ascending,
                      StrandDirection::Ascending) == -1);
  CHECK(crossing_sign(negative, StrandDirection::Descending,
                      StrandDirection::Ascending) == 1);
}

TEST_CASE("linking matrix of the basic plats") {
  const LinkingMatrix unlink = linking_matrix(oriented_plat("", 4));
  CHECK(unlink.entries == std::vector<std::vector<int>>{{0, 0}, {0, 0}});

  // Hopf plat: two inter-component crossings of equal sign, halved. Under
  // default seeds both crossings come out -1.
  const LinkingMatrix hopf = linking_matrix(oriented_plat("2 2", 4));
  CHECK(hopf.entries == std::vector<std::vector<int>>{{0, -1}, {-1, 0}});

  // single component: self-crossings are ignored
  const LinkingMatrix trefoil = linking_matrix(oriented_plat("2 2 2", 4));
  CHECK(trefoil.entries == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("linking matrix is symmetric with zero diagonal on the corpus") {
  for (const PlatPresentation& plat : testsupport::corpus(80)) {
    const ComponentPartition part = components(plat);
    const LinkingMatrix lk = linking_matrix(orient(plat, part));
    REQUIRE(lk.mu == part.mu);
    for (int j = 0; j < lk.mu; ++j) {
      CHECK(lk.entries[j][j] == 0);
      for (int k = 0; k < lk.mu; ++k) {
        CHECK(lk.entries[j][k] == lk.entries[k][j]);
      }
    }
  }
}

TEST_CASE("reversing one seed negates exactly that row and column") {
  for (const PlatPresentation& plat : testsupport::corpus(40)) {
    const ComponentPartition part = components(plat);
    if (part.mu < 2) continue;
    const LinkingMatrix base = linking_matrix(orient(plat, part));
    std::vector<ArcDirection> seeds(part.mu, ArcDirection::Forward);
    seeds[0] = ArcDirection::Backward;
    const LinkingMatrix flipped = linking_matrix(orient(plat, part, seeds));
    for (int j = 0; j < part.mu; ++j) {
      for (int k = 0; k < part.mu; ++k) {
        const int expected = (j == 0) != (k == 0) ? -base.entries[j][k]
                                                  : base.entries[j][k];
        CHECK(flipped.entries[j][k] == expected);
      }
    }
  }
}

TEST_CASE("linking matrix ignores cancelling crossing pairs") {
  std::mt19937 rng(424242);
  for (const PlatPresentation& plat : testsupport::corpus(40)) {
    const ComponentPartition part = components(plat);
    const LinkingMatrix base = linking_matrix(orient(plat, part));

    // insert sigma_k sigma_k^{-1} at a random position
    std::uniform_int_distribution<int> pos_dist(
        0, static_cast<int>(plat.word().length()));
    std::uniform_int_distribution<int> index_dist(1,
                                                  plat.strand_count() - 1);
    const int pos = pos_dist(rng);
    const int index = index_dist(rng);
    std::vector<BraidLetter> letters = plat.word().letters();
    letters.insert(letters.begin() + pos, {BraidLetter{index, 1},
                                           BraidLetter{index, -1}});
    const PlatPresentation padded(
        BraidWord(plat.strand_count(), std::move(letters)));

    const ComponentPartition padded_part = components(padded);
    REQUIRE(padded_part.mu == part.mu);
    const LinkingMatrix lk = linking_matrix(orient(padded, padded_part));
    CHECK(lk.entries == base.entries);
  }
}

TEST_CASE("linking_equivalent detects reorientation classes") {
  LinkingMatrix a{2, {{0, 3}, {3, 0}}};
  LinkingMatrix b{2, {{0, -3}, {-3, 0}}};
  LinkingMatrix c{2, {{0, 2}, {2, 0}}};
  CHECK(linking_equivalent(a, a));
  CHECK(linking_equivalent(a, b));
  CHECK_FALSE(linking_equivalent(a, c));

  // matching relabels components before comparing
  LinkingMatrix d{3, {{0, 1, 0}, {1, 0, 2}, {0, 2, 0}}};
  LinkingMatrix e{3, {{0, 2, 0}, {2, 0, 1}, {0, 1, 0}}};
  const std::vector<int> swap_outer{3, 2, 1};
  CHECK_FALSE(linking_equivalent(d, e));
  CHECK(linking_equivalent(d, e, swap_outer));
}
