#include <doctest.h>

#include <random>

#include "twin/symmetric.hpp"

using namespace twin;

TEST_CASE("Permutation basics") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), Error);
  CHECK_THROWS_AS(Permutation({0, 1}), Error);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), Error);
  auto const t = Permutation::transposition(3, 1, 2);
  CHECK(t.images() == std::vector<int>{2, 1, 3});
  CHECK((t * t).is_identity());
  Permutation const p({2, 3, 1});
  CHECK((p * p.inverse()).is_identity());
  CHECK(format_one_line(p) == "2 3 1");
  CHECK(format_cycles(p) == "(1 2 3)");
  CHECK(format_cycles(Permutation::identity(4)) == "()");
  CHECK(format_cycles(Permutation({2, 1, 4, 3})) == "(1 2)(3 4)");
}

TEST_CASE("permutation_image examples") {
  GroupContext const ctx3(3);
  CHECK(permutation_image(Word{1}, ctx3) == Permutation::transposition(3, 1, 2));
  CHECK(permutation_image(power(Word{1, 2}, 3), ctx3).is_identity());
  CHECK(permutation_image(Word{}, GroupContext(4)).is_identity());
  CHECK_THROWS_AS(permutation_image(Word{3}, ctx3), Error);
}

TEST_CASE("is_pure examples") {
  CHECK(is_pure(power(Word{1, 2}, 3), GroupContext(3)));
  CHECK_FALSE(is_pure(Word{1}, GroupContext(3)));
  CHECK_FALSE(is_pure(power(Word{1, 3, 2}, 3), GroupContext(4)));
}

TEST_CASE("permutation_image is a homomorphism") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    int const                          n = 2 + t % 9;
    GroupContext const                 ctx(n);
    std::uniform_int_distribution<int> letter(1, n - 1);
    std::vector<int>                   a(static_cast<std::size_t>(t % 13)), b(static_cast<std::size_t>(t % 7));
    for (auto& x : a) {
      x = letter(rng);
    }
    for (auto& x : b) {
      x = letter(rng);
    }
    Word const u(a), v(b);
    CHECK(permutation_image(u * v, ctx) == permutation_image(u, ctx) * permutation_image(v, ctx));
    CHECK(permutation_image(invert(u), ctx) == permutation_image(u, ctx).inverse());
    // The product of transpositions, computed directly.
    Permutation direct = Permutation::identity(n);
    for (int i : u) {
      direct = direct * Permutation::transposition(n, i, i + 1);
    }
    CHECK(permutation_image(u, ctx) == direct);
  }
}
