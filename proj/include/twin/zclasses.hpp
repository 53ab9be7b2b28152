// z-classes of involutions.
//
// Two involutions are z-equivalent iff their centralisers are conjugate;
// for involutions this happens iff the centraliser generating sets are
// equal. lambda(n) counts the distinct centralisers of involutions in T_n
// and alpha(i) counts those of involutions whose largest generator is s_i.

#ifndef TWIN_ZCLASSES_HPP_
#define TWIN_ZCLASSES_HPP_

#include <optional>
#include <vector>

#include "twin/involutions.hpp"
#include "twin/word.hpp"

namespace twin {

  struct ZClassTable {
    int n;
    // Absent when n exceeds the enumeration cap.
    std::optional<BigInt> lambda_direct;
    BigInt                lambda_recursive;
    // alpha[i - 1] = alpha_i for 1 <= i <= n - 1
    std::vector<BigInt> alpha;
  };

  // Number of distinct centraliser generating sets over A_n.
  BigInt lambda_direct(int n);

  // Base values for n <= 6, then
  //   lambda_n = (lambda_3 + ... + lambda_{n-2}) - lambda_{n-4} + n - 2.
  BigInt lambda_recursive(int n);

  // Distinct centralisers of involutions of T_{i+1} whose largest index is i.
  BigInt alpha(int i);

  // Same count taken inside T_n for any n >= i + 1; the value does not
  // depend on n.
  BigInt alpha(int i, GroupContext const& ctx);

  // Both words must be involutions of T_n (twin::Error otherwise).
  bool same_z_class(Word const& lhs, Word const& rhs, GroupContext const& ctx);

  // X_1 = s1 s2, X_2 = s1 s2 s3, X_3 = X_2 s2, X_{2i} = X_{2i-1} s3,
  // X_{2i+1} = X_{2i} s2.
  Word x_family_word(int index);

  // True iff X_1, ..., X_count are pairwise non-conjugate in T_n.
  bool zclass_spotcheck_X_family(int n, int count);

  ZClassTable zclass_table(int n);

}  // namespace twin

#endif  // TWIN_ZCLASSES_HPP_
