#include <doctest.h>

#include "twin/conjugacy.hpp"
#include "twin/involutions.hpp"
#include "twin/zclasses.hpp"

using namespace twin;

TEST_CASE("lambda_direct examples") {
  CHECK(lambda_direct(2) == 1);
  CHECK(lambda_direct(3) == 2);
  CHECK(lambda_direct(4) == 2);
  CHECK(lambda_direct(5) == 5);
  CHECK(lambda_direct(6) == 8);
  CHECK(lambda_direct(7) == 12);
  CHECK_THROWS_AS(lambda_direct(enumeration_cap + 1), Error);
}

TEST_CASE("lambda_recursive examples") {
  CHECK(lambda_recursive(6) == 8);
  CHECK(lambda_recursive(7) == 12);
  CHECK(lambda_recursive(8) == 21);
  CHECK_THROWS_AS(lambda_recursive(1), Error);
}

TEST_CASE("direct and recursive lambda agree") {
  for (int n = 2; n <= 20; ++n) {
    CHECK(lambda_direct(n) == lambda_recursive(n));
  }
}

TEST_CASE("alpha") {
  CHECK(alpha(1) == 1);
  CHECK(alpha(5) == 3);
  CHECK(alpha(7) == 9);
  for (int i = 3; i <= 16; ++i) {
    CHECK(alpha(i + 1) == 1 + lambda_recursive(i));
  }
  for (int i = 1; i <= 12; ++i) {
    CHECK(alpha(i) == alpha(i, GroupContext(i + 1)));
  }
  CHECK_THROWS_AS(alpha(0), Error);
}

TEST_CASE("zclass_table") {
  for (int n = 2; n <= 14; ++n) {
    auto const table = zclass_table(n);
    REQUIRE(table.alpha.size() == static_cast<std::size_t>(n - 1));
    CHECK(table.lambda_recursive == lambda_recursive(n));
    REQUIRE(table.lambda_direct.has_value());
    CHECK(*table.lambda_direct == table.lambda_recursive);
  }
  CHECK_FALSE(zclass_table(enumeration_cap + 2).lambda_direct.has_value());
}

TEST_CASE("same_z_class examples") {
  CHECK(same_z_class(Word{1, 3}, Word{3}, GroupContext(4)));
  CHECK_FALSE(same_z_class(Word{1}, Word{2}, GroupContext(3)));
  CHECK(same_z_class(Word{2}, Word{2, 4}, GroupContext(5)));
  // Conjugates are in the same z-class.
  CHECK(same_z_class(Word{1, 2, 1}, Word{2}, GroupContext(3)));
  CHECK_THROWS_AS(same_z_class(Word{1, 2}, Word{1}, GroupContext(3)), Error);
}

TEST_CASE("X family") {
  CHECK(x_family_word(1) == Word{1, 2});
  CHECK(x_family_word(2) == Word{1, 2, 3});
  CHECK(x_family_word(3) == Word{1, 2, 3, 2});
  CHECK(x_family_word(4) == Word{1, 2, 3, 2, 3});
  CHECK(zclass_spotcheck_X_family(4, 4));
  CHECK(zclass_spotcheck_X_family(5, 6));
  CHECK(zclass_spotcheck_X_family(4, 2));
  CHECK(zclass_spotcheck_X_family(4, 12));
  for (int i = 1; i <= 8; ++i) {
    CHECK(is_reduced(x_family_word(i)));
    CHECK(is_cyclically_reduced(x_family_word(i)));
  }
}
