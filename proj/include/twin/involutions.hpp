// Involutions in T_n: detection, canonical class representatives, the
// enumeration of conjugacy classes and their centralisers.
//
// Every involution is conjugate to exactly one word s_{i_1} ... s_{i_k}
// with i_1 < ... < i_k and consecutive gaps of at least 2. The number of
// such words is rho(n) = F_{n+1} - 1.

#ifndef TWIN_INVOLUTIONS_HPP_
#define TWIN_INVOLUTIONS_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "twin/word.hpp"

namespace twin {

  using BigInt = boost::multiprecision::cpp_int;

  // Largest n for which the involution classes are enumerated explicitly
  // (|A_29| = 832039).
  inline constexpr int enumeration_cap = 29;

  class InvolutionClass {
   public:
    // Throws twin::Error unless indices is nonempty, strictly increasing
    // with gaps >= 2 and starts at 1 or more.
    explicit InvolutionClass(std::vector<int> indices);

    std::vector<int> const& indices() const noexcept {
      return _indices;
    }
    int largest() const noexcept {
      return _indices.back();
    }
    Word word() const {
      return Word(_indices);
    }
    // Bitmask of the indices; only valid when largest() < 64.
    std::uint64_t mask() const noexcept;

    bool operator==(InvolutionClass const&) const = default;
    auto operator<=>(InvolutionClass const&) const = default;

   private:
    std::vector<int> _indices;
  };

  // "(1,3)"
  std::string format_class(InvolutionClass const& c);

  struct CentralizerGens {
    std::vector<int> gens;
    int              rank;

    bool operator==(CentralizerGens const&) const = default;
  };

  // Order exactly 2.
  bool is_involution(Word const& w);

  // Throws twin::Error if w is not an involution.
  InvolutionClass involution_class_rep(Word const& w);

  // All of A_n in lexicographic order.
  std::vector<InvolutionClass> enumerate_involution_classes(GroupContext const& ctx);

  // Throws twin::Error if n < 2.
  BigInt rho(int n);

  // C(w) = < S \ union of the neighbour sets of the letters of w >.
  CentralizerGens centralizer_of_involution(InvolutionClass const& c,
                                            GroupContext const&    ctx);

  // Same as centralizer_of_involution(...).gens as a bitmask; n <= 64.
  std::uint64_t centralizer_mask(std::uint64_t class_mask, GroupContext const& ctx);

  // Calls f(mask) for every element of A_n (as a bitmask of indices, bit i
  // for s_i), in lexicographic order of the index sequences. n <= 64.
  template <typename F>
  void for_each_involution_mask(GroupContext const& ctx, F&& f);

}  // namespace twin

namespace twin {
  namespace detail {
    template <typename F>
    void involution_masks_from(int first, int last, std::uint64_t prefix, F& f) {
      for (int i = first; i <= last; ++i) {
        std::uint64_t const m = prefix | (std::uint64_t{1} << i);
        f(m);
        involution_masks_from(i + 2, last, m, f);
      }
    }
  }  // namespace detail

  template <typename F>
  void for_each_involution_mask(GroupContext const& ctx, F&& f) {
    if (ctx.n() > 64) {
      throw Error("bitmask enumeration supports n <= 64");
    }
    detail::involution_masks_from(1, ctx.rank(), 0, f);
  }
}  // namespace twin

#endif  // TWIN_INVOLUTIONS_HPP_
