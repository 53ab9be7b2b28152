// Cyclic reduction and the conjugacy decision procedure.

#ifndef TWIN_CONJUGACY_HPP_
#define TWIN_CONJUGACY_HPP_

#include <cstddef>
#include <vector>

#include "twin/word.hpp"

namespace twin {

  // core = conjugator^{-1} * w * conjugator, with core cyclically reduced
  // and in normal form.
  struct CyclicReduction {
    Word core;
    Word conjugator;
  };

  // w must be reduced; throws twin::Error otherwise. True iff no sequence of
  // flips turns w into s_i u s_i.
  bool is_cyclically_reduced(Word const& w);

  CyclicReduction cyclically_reduce(Word const& w);

  // All normal forms reachable from the cyclically reduced word `core` by
  // cyclic permutations and flips, sorted. `core` must be cyclically
  // reduced.
  std::vector<Word> cyclic_class(Word const& core);

  // A conjugacy invariant: equal for w1, w2 iff they are conjugate in T_n.
  // The key is the least element of the cyclic class of each connected
  // component of the core, concatenated in increasing support order.
  Word conjugacy_key(Word const& w);

  bool are_conjugate(Word const& lhs, Word const& rhs);

  std::size_t conjugacy_minimal_length(Word const& w);

}  // namespace twin

#endif  // TWIN_CONJUGACY_HPP_
