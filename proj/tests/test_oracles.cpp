#include <doctest.h>

#include "twin/verify/oracles.hpp"

using namespace twin;

// The oracles are only useful if they are right on cases checkable by hand.

TEST_CASE("oracle reduction and flips") {
  CHECK(oracle::pair_deletion_reduce(Word{3, 1, 3}) == Word{1});
  CHECK(oracle::pair_deletion_reduce(Word{1, 2, 1}) == Word{1, 2, 1});
  CHECK(oracle::flip_class(Word{1, 3, 5}).size() == 6);
  CHECK(oracle::flip_class(Word{1, 2, 3}).size() == 1);
  CHECK(oracle::flip_class(Word{1, 3, 2}).size() == 2);
  CHECK(oracle::canonical(Word{3, 1}) == Word{1, 3});
}

TEST_CASE("oracle equality") {
  CHECK(oracle::equal(Word{1}, Word{3, 1, 3}));
  CHECK_FALSE(oracle::equal(Word{1, 2}, Word{2, 1}));
  CHECK(oracle::equal(Word{1, 2, 3, 5, 3, 2, 5}, Word{1}));
  CHECK(oracle::minimal_key(Word{3, 1, 3}) == Word{1});
  CHECK(oracle::reachable(Word{1, 1}).count(Word{}) == 1);
}

TEST_CASE("oracle cyclic reduction and orbits") {
  CHECK_FALSE(oracle::is_cyclically_reduced(Word{1, 2, 1}));
  CHECK(oracle::is_cyclically_reduced(Word{1, 2}));
  CHECK(oracle::is_cyclically_reduced(Word{}));
  auto const orbit = oracle::conjugation_orbit(Word{1, 2, 3}, 4, 7);
  CHECK(orbit.count(Word{3, 2, 1}) == 1);
  CHECK(orbit.count(Word{2, 1, 3}) == 1);
  CHECK(oracle::conjugation_orbit(Word{1, 3}, 4, 6).count(Word{3}) == 0);
}

TEST_CASE("oracle counting") {
  CHECK(oracle::all_words(3, 2).size() == 4);
  CHECK(oracle::all_words(4, 0).size() == 1);
  CHECK(oracle::fibonacci(1) == 1);
  CHECK(oracle::fibonacci(2) == 1);
  CHECK(oracle::fibonacci(10) == 55);
  CHECK(oracle::binomial_rho(6) == 12);
  CHECK(oracle::gap_subsets(4)
        == std::vector<std::vector<int>>{{1}, {1, 3}, {2}, {3}});
}
