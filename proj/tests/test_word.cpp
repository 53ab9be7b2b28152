#include <doctest.h>

#include <random>

#include "twin/symmetric.hpp"
#include "twin/verify/oracles.hpp"
#include "twin/word.hpp"

using namespace twin;

namespace {
  Word random_word(std::mt19937_64& rng, int n, std::size_t len) {
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::vector<int>                   out(len);
    for (auto& x : out) {
      x = letter(rng);
    }
    return Word(std::move(out));
  }
}  // namespace

TEST_CASE("GroupContext needs at least two strands") {
  CHECK_THROWS_AS(GroupContext(1), Error);
  CHECK_THROWS_AS(GroupContext(0), Error);
  GroupContext const ctx(5);
  CHECK(ctx.rank() == 4);
  CHECK(ctx.contains(4));
  CHECK_FALSE(ctx.contains(5));
  CHECK_FALSE(ctx.contains(0));
}

TEST_CASE("commute and adjacent") {
  CHECK(commute(1, 3));
  CHECK(commute(5, 2));
  CHECK_FALSE(commute(2, 3));
  CHECK_FALSE(commute(2, 2));
  CHECK(adjacent(2, 3));
  CHECK(adjacent(3, 2));
  CHECK_FALSE(adjacent(2, 2));
  CHECK_FALSE(adjacent(1, 3));
}

TEST_CASE("parse_word") {
  CHECK(parse_word("1 2 1", GroupContext(3)) == Word{1, 2, 1});
  CHECK(parse_word("", GroupContext(4)).empty());
  CHECK(parse_word("e", GroupContext(4)).empty());
  CHECK(parse_word("  ", GroupContext(4)).empty());
  CHECK(parse_word("s1.s3.s1.s3", GroupContext(5)) == Word{1, 3, 1, 3});
  CHECK(parse_word("s2 3.1", GroupContext(5)) == Word{2, 3, 1});
  CHECK(parse_word("12") == Word{12});

  CHECK_THROWS_AS(parse_word("3", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("0", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("-1", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("x1", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("s", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("1 e", GroupContext(3)), Error);
  CHECK_THROWS_AS(parse_word("1a", GroupContext(3)), Error);
}

TEST_CASE("format_word round-trips") {
  CHECK(format_word(Word{}) == "e");
  CHECK(format_word(Word{1, 2, 10}) == "s1 s2 s10");
  std::mt19937_64 rng(7);
  GroupContext const ctx(9);
  for (int t = 0; t < 200; ++t) {
    Word const w = random_word(rng, 9, t % 12);
    CHECK(parse_word(format_word(w), ctx) == w);
  }
}

TEST_CASE("check_bounds") {
  CHECK_NOTHROW(check_bounds(Word{1, 2, 3}, GroupContext(4)));
  CHECK_THROWS_AS(check_bounds(Word{1, 4}, GroupContext(4)), Error);
}

TEST_CASE("reduce examples") {
  CHECK(reduce(Word{3, 1, 3}) == Word{1});
  CHECK(reduce(Word{1, 2, 3, 5, 3, 2, 5}) == Word{1});
  CHECK(reduce(Word{1, 3, 1, 3}).empty());
  CHECK(reduce(Word{}).empty());
  CHECK(reduce(Word{1, 1}).empty());
  CHECK(reduce(Word{1, 2, 1}) == Word{1, 2, 1});
  CHECK(length(reduce(Word{1, 3, 1, 3})) == 0);
}

TEST_CASE("normal_form examples") {
  CHECK(normal_form(Word{4, 1}) == Word{1, 4});
  CHECK(normal_form(Word{2, 1}) == Word{2, 1});
  CHECK(normal_form(Word{3, 1, 3}) == Word{1});
  CHECK(normal_form(Word{}).empty());
  // s3 s1 s2: s1 can move to the front past s3, s2 cannot.
  CHECK(normal_form(Word{3, 1, 2}) == Word{1, 3, 2});
  CHECK(normal_form(Word{5, 3, 1}) == Word{1, 3, 5});
}

TEST_CASE("equal examples") {
  CHECK(equal(Word{1}, Word{3, 1, 3}));
  CHECK_FALSE(equal(Word{1}, Word{2}));
  CHECK_FALSE(equal(Word{1, 2}, Word{2, 1}));
  CHECK(equal(Word{1, 3}, Word{3, 1}));
  CHECK(equal(Word{}, Word{2, 2}));
}

TEST_CASE("eta, length, invert") {
  CHECK(eta(Word{1, 2, 1}, 1) == 2);
  CHECK(eta(Word{1, 2, 1}, 3) == 0);
  CHECK(eta(Word{}, 1) == 0);
  CHECK(length(Word{1, 2, 1}) == 3);
  CHECK(length(Word{}) == 0);
  CHECK(invert(Word{1, 2, 3}) == Word{3, 2, 1});
  CHECK(invert(Word{1}) == Word{1});
  CHECK(invert(Word{}).empty());
}

TEST_CASE("power, rotate, conjugate") {
  CHECK(power(Word{1, 2}, 3) == Word{1, 2, 1, 2, 1, 2});
  CHECK(power(Word{1, 2}, 0).empty());
  CHECK(rotate(Word{1, 2, 3}, 1) == Word{2, 3, 1});
  CHECK(rotate(Word{1, 2, 3}, 0) == Word{1, 2, 3});
  CHECK(rotate(Word{1, 2, 3}, 3) == Word{1, 2, 3});
  CHECK(conjugate(Word{2}, Word{1}) == Word{1, 2, 1});
  CHECK(equal(conjugate(Word{1, 2}, Word{1}), Word{2, 1}));
}

TEST_CASE("is_reduced matches the oracle on all short words") {
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& w : oracle::all_words(n, len)) {
        bool const expected = oracle::pair_deletion_reduce(w).size() == w.size();
        REQUIRE(is_reduced(w) == expected);
      }
    }
  }
}

TEST_CASE("reduce and normal_form agree with the oracle on all short words") {
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& w : oracle::all_words(n, len)) {
        Word const r = reduce(w);
        REQUIRE(is_reduced(r));
        REQUIRE(r.size() == oracle::pair_deletion_reduce(w).size());
        Word const nf = normal_form(w);
        REQUIRE(nf.size() == r.size());
        // The normal form is the least word in the flip class.
        REQUIRE(nf == *oracle::flip_class(r).begin());
      }
    }
  }
}

TEST_CASE("algebraic properties on random words") {
  std::mt19937_64 rng(20200601);
  for (int t = 0; t < 2000; ++t) {
    int const  n  = 2 + t % 9;
    Word const w1 = random_word(rng, n, static_cast<std::size_t>(t % 25));
    Word const w2 = random_word(rng, n, static_cast<std::size_t>((t * 7) % 19));
    GroupContext const ctx(n);

    Word const r = reduce(w1);
    CHECK(reduce(r) == r);
    CHECK(normal_form(normal_form(w1)) == normal_form(w1));
    CHECK(flip_normal_form(r) == normal_form(w1));
    CHECK(normal_form(w1).size() == r.size());
    CHECK(is_reduced(r));
    for (int i = 1; i < n; ++i) {
      CHECK(eta(w1, i) % 2 == eta(r, i) % 2);
    }
    CHECK(permutation_image(w1, ctx) == permutation_image(r, ctx));
    CHECK(normal_form(w1 * w2) == normal_form(normal_form(w1) * normal_form(w2)));
    CHECK(reduce(w1 * invert(w1)).empty());
    CHECK(equal(invert(w1 * w2), invert(w2) * invert(w1)));
  }
}
