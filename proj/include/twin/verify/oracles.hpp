// Brute-force reference computations. Nothing in here calls the reduction,
// normal form or conjugacy code of the library; they only share the Word
// container.

#ifndef TWIN_VERIFY_ORACLES_HPP_
#define TWIN_VERIFY_ORACLES_HPP_

#include <cstddef>
#include <set>
#include <vector>

#include "twin/involutions.hpp"
#include "twin/word.hpp"

namespace twin::oracle {

  // Repeatedly deletes the leftmost pair of equal letters with no adjacent
  // letter between them.
  Word pair_deletion_reduce(Word const& w);

  // Every word obtained from w by swapping adjacent commuting letters.
  std::set<Word> flip_class(Word const& w);

  // Least word of the flip class of pair_deletion_reduce(w).
  Word canonical(Word const& w);

  // Every word reachable from w by flips and deletions of s_i s_i.
  std::set<Word> reachable(Word const& w);

  // The reachable sets of lhs and rhs intersect.
  bool equal(Word const& lhs, Word const& rhs);

  // Least word among the shortest words in reachable(w).
  Word minimal_key(Word const& w);

  // Every cyclic rotation of w passes the separation test for reduced words.
  bool is_cyclically_reduced(Word const& w);

  // canonical(g^{-1} w g) for every g reachable through single-generator
  // conjugations whose intermediate canonical words have length <= bound.
  std::set<Word> conjugation_orbit(Word const& w, int n, std::size_t bound);

  // All words over s_1..s_{n-1} of length exactly len.
  std::vector<Word> all_words(int n, std::size_t len);

  // F_1 = F_2 = 1.
  BigInt fibonacci(int k);

  // sum_{k=1}^{floor(n/2)} binom(n - k, k)
  BigInt binomial_rho(int n);

  // Every nonempty subset of {1..n-1} with pairwise gaps >= 2, by brute
  // force over all subsets (n <= 24).
  std::vector<std::vector<int>> gap_subsets(int n);

}  // namespace twin::oracle

#endif  // TWIN_VERIFY_ORACLES_HPP_
