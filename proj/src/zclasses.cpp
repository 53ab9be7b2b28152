#include "twin/zclasses.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "twin/conjugacy.hpp"

namespace twin {

  namespace {
    void check_cap(int n) {
      if (n < 2) {
        throw Error("n must be at least 2");
      }
      if (n > enumeration_cap) {
        throw Error("refusing direct enumeration for n = " + std::to_string(n)
                    + " (cap is " + std::to_string(enumeration_cap) + ")");
      }
    }
  }  // namespace

  BigInt lambda_direct(int n) {
    check_cap(n);
    GroupContext const                ctx(n);
    std::unordered_set<std::uint64_t> centralizers;
    for_each_involution_mask(
        ctx, [&](std::uint64_t m) { centralizers.insert(centralizer_mask(m, ctx)); });
    return centralizers.size();
  }

  BigInt lambda_recursive(int n) {
    if (n < 2) {
      throw Error("lambda(n) is defined for n >= 2");
    }
    // lambda[k] for k = 0..n; entries below 2 unused
    std::vector<BigInt> lambda{0, 0, 1, 2, 2, 5, 8};
    for (int k = 7; k <= n; ++k) {
      BigInt sum = 0;
      for (int i = 3; i <= k - 2; ++i) {
        sum += lambda[static_cast<std::size_t>(i)];
      }
      lambda.push_back(sum - lambda[static_cast<std::size_t>(k - 4)] + (k - 2));
    }
    return lambda[static_cast<std::size_t>(n)];
  }

  BigInt alpha(int i, GroupContext const& ctx) {
    if (i < 1 || i > ctx.rank()) {
      throw Error("alpha(i) needs 1 <= i <= n - 1");
    }
    check_cap(ctx.n());
    std::uint64_t const               top = std::uint64_t{1} << i;
    std::uint64_t const               above = ~((top << 1) - 1);
    std::unordered_set<std::uint64_t> centralizers;
    for_each_involution_mask(ctx, [&](std::uint64_t m) {
      if ((m & top) && !(m & above)) {
        centralizers.insert(centralizer_mask(m, ctx));
      }
    });
    return centralizers.size();
  }

  BigInt alpha(int i) {
    if (i < 1) {
      throw Error("alpha(i) needs i >= 1");
    }
    return alpha(i, GroupContext(i + 1));
  }

  bool same_z_class(Word const& lhs, Word const& rhs, GroupContext const& ctx) {
    check_bounds(lhs, ctx);
    check_bounds(rhs, ctx);
    auto const a = centralizer_of_involution(involution_class_rep(lhs), ctx);
    auto const b = centralizer_of_involution(involution_class_rep(rhs), ctx);
    return a.gens == b.gens;
  }

  Word x_family_word(int index) {
    if (index < 1) {
      throw Error("X_i is defined for i >= 1");
    }
    Word x{1, 2};
    for (int j = 2; j <= index; ++j) {
      x.push_back(j % 2 == 0 ? 3 : 2);
    }
    return x;
  }

  bool zclass_spotcheck_X_family(int n, int count) {
    if (n < 4) {
      throw Error("the X_i family needs n >= 4");
    }
    if (count < 2) {
      throw Error("the X_i spot-check needs count >= 2");
    }
    GroupContext const ctx(n);
    std::vector<Word>  family;
    for (int j = 1; j <= count; ++j) {
      family.push_back(x_family_word(j));
      check_bounds(family.back(), ctx);
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        if (are_conjugate(family[a], family[b])) {
          return false;
        }
      }
    }
    return true;
  }

  ZClassTable zclass_table(int n) {
    ZClassTable table{n, std::nullopt, lambda_recursive(n), {}};
    if (n <= enumeration_cap) {
      table.lambda_direct = lambda_direct(n);
    }
    for (int i = 1; i < n; ++i) {
      // alpha_i is computed inside T_{i+1}, which is always within the cap
      // when T_n is.
      if (i + 1 <= enumeration_cap) {
        table.alpha.push_back(alpha(i));
      } else {
        // alpha_{m+1} = 1 + lambda_m for m >= 3
        table.alpha.push_back(1 + lambda_recursive(i - 1));
      }
    }
    return table;
  }

}  // namespace twin
