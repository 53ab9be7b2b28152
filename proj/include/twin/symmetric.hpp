// The projection T_n -> S_n, s_i |-> (i, i+1), and the pure twin group.

#ifndef TWIN_SYMMETRIC_HPP_
#define TWIN_SYMMETRIC_HPP_

#include <string>
#include <vector>

#include "twin/word.hpp"

namespace twin {

  // A bijection of {1, ..., n} stored in one-line notation: images()[x - 1]
  // is the image of x.
  //
  // Permutations act on the right: (p * q)(x) = q(p(x)), so that the image
  // of a word read left to right is the product of its letters' images.
  class Permutation {
   public:
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);

    // Throws twin::Error if `images` is not a permutation of 1..size.
    explicit Permutation(std::vector<int> images);

    int size() const noexcept {
      return static_cast<int>(_images.size());
    }
    int operator()(int x) const {
      return _images[static_cast<std::size_t>(x - 1)];
    }
    std::vector<int> const& images() const noexcept {
      return _images;
    }
    bool is_identity() const noexcept;

    Permutation inverse() const;

    friend Permutation operator*(Permutation const& lhs, Permutation const& rhs);
    bool               operator==(Permutation const&) const = default;

   private:
    Permutation() = default;
    std::vector<int> _images;
  };

  // "2 1 3"
  std::string format_one_line(Permutation const& p);
  // "(1 2)", "()" for the identity
  std::string format_cycles(Permutation const& p);

  Permutation permutation_image(Word const& w, GroupContext const& ctx);

  bool is_pure(Word const& w, GroupContext const& ctx);

}  // namespace twin

#endif  // TWIN_SYMMETRIC_HPP_
