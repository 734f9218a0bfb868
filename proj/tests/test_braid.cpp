#include <random>
#include <vector>

#include <doctest.h>

#include "platcover/braid.hpp"
#include "platcover/errors.hpp"
#include "support.hpp"

using namespace platcover;

TEST_CASE("parse_braid transcribes signed generator values") {
  const BraidWord w = parse_braid("2 2 2", 4);
  REQUIRE(w.length() == 3);
  for (const BraidLetter& l : w.letters()) {
    CHECK(l.index == 2);
    CHECK(l.sign == 1);
  }

  const BraidWord empty = parse_braid("", 4);
  CHECK(empty.empty());
  CHECK(permutation_of(empty).is_identity());

  const BraidWord mixed = parse_braid("-1 3", 4);
  REQUIRE(mixed.length() == 2);
  CHECK(mixed.letters()[0] == BraidLetter{1, -1});
  CHECK(mixed.letters()[1] == BraidLetter{3, 1});
  CHECK(to_text(mixed) == "-1 3");
}

TEST_CASE("parse_braid rejects each malformed input distinctly") {
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return e.kind();
    }
    FAIL("expected a parse error");
    return ParseError::Kind::BadFile;
  };
  CHECK(kind_of([] { parse_braid("0", 4); }) == ParseError::Kind::ZeroToken);
  CHECK(kind_of([] { parse_braid("4", 4); }) ==
        ParseError::Kind::IndexOutOfRange);
  CHECK(kind_of([] { parse_braid("-5", 4); }) ==
        ParseError::Kind::IndexOutOfRange);
  CHECK(kind_of([] { parse_braid("1", 5); }) ==
        ParseError::Kind::BadStrandCount);
  CHECK(kind_of([] { parse_braid("1", 0); }) ==
        ParseError::Kind::BadStrandCount);
  CHECK(kind_of([] { parse_braid("1x", 4); }) ==
        ParseError::Kind::NonIntegerToken);
  CHECK(kind_of([] { parse_braid("1.5", 4); }) ==
        ParseError::Kind::NonIntegerToken);
}

TEST_CASE("permutation_of composes crossings in letter order") {
  CHECK(permutation_of(BraidWord(4)).is_identity());

  // sigma_2^3 acts as the transposition (2 3)
  const EndpointPermutation cubed = permutation_of(parse_braid("2 2 2", 4));
  CHECK(cubed.image_of(1) == 1);
  CHECK(cubed.image_of(2) == 3);
  CHECK(cubed.image_of(3) == 2);
  CHECK(cubed.image_of(4) == 4);

  const EndpointPermutation single = permutation_of(parse_braid("1", 4));
  CHECK(single.image_of(1) == 2);
  CHECK(single.image_of(2) == 1);
}

TEST_CASE("preserves_parity_classes examples") {
  CHECK(preserves_parity_classes(EndpointPermutation::identity(6)));
  CHECK_FALSE(
      preserves_parity_classes(EndpointPermutation({2, 1, 3, 4})));
  CHECK(preserves_parity_classes(EndpointPermutation({3, 4, 1, 2})));
}

TEST_CASE("concatenate and prepend/append order letters as stated") {
  const BraidWord sigma1 = parse_braid("1", 4);
  const std::vector<BraidLetter> inverse{{1, -1}};
  const BraidWord padded = prepend(sigma1, inverse);
  CHECK(to_text(padded) == "-1 1");
  CHECK(permutation_of(padded).is_identity());

  const BraidWord w = parse_braid("2 -1 2", 4);
  CHECK(concatenate(BraidWord(4), w) == w);
  CHECK(concatenate(w, BraidWord(4)) == w);

  const std::vector<BraidLetter> sigma3{{3, 1}};
  CHECK(to_text(append(parse_braid("2", 4), sigma3)) == "2 3");

  CHECK_THROWS_AS(concatenate(BraidWord(4), BraidWord(6)),
                  PreconditionError);
}

TEST_CASE("permutation_of is a monoid homomorphism on random words") {
  std::mt19937 rng(7081);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 6);
    const int strands = 2 * n_dist(rng);
    std::uniform_int_distribution<int> len_dist(0, 40);
    std::uniform_int_distribution<int> index_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    auto make = [&] {
      std::vector<BraidLetter> letters;
      const int len = len_dist(rng);
      for (int i = 0; i < len; ++i) {
        letters.push_back(BraidLetter{index_dist(rng), sign_dist(rng) ? 1 : -1});
      }
      return BraidWord(strands, std::move(letters));
    };
    const BraidWord a = make();
    const BraidWord b = make();
    const EndpointPermutation pa = permutation_of(a);
    const EndpointPermutation pb = permutation_of(b);
    const EndpointPermutation pab = permutation_of(concatenate(a, b));
    for (int k = 1; k <= strands; ++k) {
      REQUIRE(pab.image_of(k) == pb.image_of(pa.image_of(k)));
    }

    // flipping every sign leaves the permutation unchanged
    std::vector<BraidLetter> flipped = a.letters();
    for (BraidLetter& l : flipped) l.sign = -l.sign;
    CHECK(permutation_of(BraidWord(strands, flipped)) == pa);
  }
}

TEST_CASE("identity permutations preserve parity at every size") {
  for (int n = 2; n <= 12; n += 2) {
    CHECK(preserves_parity_classes(EndpointPermutation::identity(n)));
  }
}
