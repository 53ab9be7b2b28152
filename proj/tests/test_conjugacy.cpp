#include <doctest.h>

#include <random>

#include "twin/conjugacy.hpp"
#include "twin/verify/oracles.hpp"

using namespace twin;

TEST_CASE("is_cyclically_reduced examples") {
  CHECK_FALSE(is_cyclically_reduced(Word{1, 2, 1}));
  CHECK(is_cyclically_reduced(Word{1, 2}));
  CHECK(is_cyclically_reduced(Word{}));
  CHECK(is_cyclically_reduced(Word{1}));
  // s1 s3 s2 s1: s1 can be flipped to the front of s3, so s1 ... s1 after flips.
  CHECK_FALSE(is_cyclically_reduced(Word{3, 1, 2, 1}));
  CHECK_FALSE(is_cyclically_reduced(Word{1, 3, 2, 3}));
  CHECK_THROWS_AS(is_cyclically_reduced(Word{1, 1}), Error);
}

TEST_CASE("is_cyclically_reduced matches the oracle") {
  for (int n = 2; n <= 5; ++n) {
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& w : oracle::all_words(n, len)) {
        if (!is_reduced(w)) {
          continue;
        }
        REQUIRE(is_cyclically_reduced(w) == oracle::is_cyclically_reduced(w));
      }
    }
  }
}

TEST_CASE("cyclically_reduce examples") {
  auto const a = cyclically_reduce(Word{1, 2, 1});
  CHECK(a.core == Word{2});
  CHECK(a.conjugator == Word{1});

  auto const b = cyclically_reduce(Word{1, 2});
  CHECK(b.core == Word{1, 2});
  CHECK(b.conjugator.empty());

  Word const w{2, 1, 3, 1, 2};
  auto const c = cyclically_reduce(w);
  CHECK(c.core == Word{3});
  CHECK(equal(c.conjugator * c.core * invert(c.conjugator), w));

  CHECK(cyclically_reduce(Word{}).core.empty());
  CHECK(cyclically_reduce(Word{1, 1}).core.empty());
}

TEST_CASE("cyclically_reduce invariants on random words") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1500; ++t) {
    int const                          n = 2 + t % 7;
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::vector<int>                   letters(static_cast<std::size_t>(t % 20));
    for (auto& x : letters) {
      x = letter(rng);
    }
    Word const w(letters);
    auto const r = cyclically_reduce(w);
    CHECK(is_reduced(r.core));
    CHECK(is_cyclically_reduced(r.core));
    CHECK(r.core == normal_form(r.core));
    CHECK(equal(r.core, conjugate(w, r.conjugator)));
    CHECK(are_conjugate(w, r.core));
    CHECK(conjugacy_minimal_length(w) == r.core.size());
  }
}

TEST_CASE("are_conjugate examples") {
  CHECK(are_conjugate(Word{1, 2}, Word{2, 1}));
  CHECK_FALSE(are_conjugate(Word{1, 3}, Word{3}));
  CHECK(are_conjugate(Word{1, 2, 1}, Word{2}));
  CHECK(are_conjugate(Word{}, Word{2, 2}));
  CHECK_FALSE(are_conjugate(Word{}, Word{2}));
  CHECK_FALSE(are_conjugate(Word{1}, Word{2}));
  // Conjugate without being a rotation of one another up to flips.
  CHECK(are_conjugate(Word{1, 2, 3}, Word{3, 2, 1}));
  CHECK_FALSE(are_conjugate(Word{1, 2, 1, 2}, Word{1, 2, 2, 1}));
}

TEST_CASE("conjugacy_minimal_length examples") {
  CHECK(conjugacy_minimal_length(Word{1, 2, 1}) == 1);
  CHECK(conjugacy_minimal_length(Word{}) == 0);
  CHECK(conjugacy_minimal_length(Word{1, 2}) == 2);
  CHECK(conjugacy_minimal_length(Word{1, 3, 1}) == 1);
}

TEST_CASE("cyclic_class of a rotation-closed word") {
  auto const cls = cyclic_class(Word{1, 2});
  CHECK(cls == std::vector<Word>{Word{1, 2}, Word{2, 1}});
  auto const single = cyclic_class(Word{1, 3});
  CHECK(single == std::vector<Word>{Word{1, 3}});
}

TEST_CASE("conjugacy_key is invariant under random conjugation") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 500; ++t) {
    int const                          n = 3 + t % 6;
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::vector<int>                   a(static_cast<std::size_t>(1 + t % 9));
    std::vector<int>                   g(static_cast<std::size_t>(t % 11));
    for (auto& x : a) {
      x = letter(rng);
    }
    for (auto& x : g) {
      x = letter(rng);
    }
    Word const w(a);
    CHECK(conjugacy_key(w) == conjugacy_key(conjugate(w, Word(g))));
  }
}

TEST_CASE("are_conjugate matches the conjugation-orbit oracle in T_4") {
  std::vector<Word> pool;
  for (std::size_t len = 0; len <= 5; ++len) {
    for (auto const& w : oracle::all_words(4, len)) {
      if (oracle::canonical(w) == w && oracle::is_cyclically_reduced(w)) {
        pool.push_back(w);
      }
    }
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    auto const orbit = oracle::conjugation_orbit(pool[i], 4, pool[i].size() + 4);
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (pool[j].size() != pool[i].size()) {
        continue;
      }
      bool const expected = orbit.count(pool[j]) > 0;
      REQUIRE(are_conjugate(pool[i], pool[j]) == expected);
    }
  }
}
