// Automorphisms of T_n given by the images of the generators.
//
// Composition convention: compose(a, b) applies a first, then b, so
// compose(a, b)(s_i) = b(a(s_i)). With it, compose(inner(g), inner(h)) =
// inner(g * h) where inner(g)(x) = g^{-1} x g.
//
// Up to inner automorphisms every automorphism is one of
//   n = 3:  psi^a               (a < 2)
//   n = 4:  psi^a tau^b         (a < 2, b < 3)
//   n >= 5: psi^a kappa^b       (a < 2, b < 4)
// with psi(s_i) = s_{n-i}; tau(s_1) = s_1 s_3, tau(s_2) = s_2,
// tau(s_3) = s_1; kappa(s_3) = s_{n-3} s_{n-1} and kappa(s_i) = s_{n-i}
// otherwise.

#ifndef TWIN_AUTOMORPHISMS_HPP_
#define TWIN_AUTOMORPHISMS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twin/word.hpp"

namespace twin {

  class TwinAut {
   public:
    // images[i - 1] is the image of s_i. Images are stored in normal form.
    // Only the bounds are checked; see validate_aut for the relations.
    TwinAut(GroupContext const& ctx, std::vector<Word> images);

    static TwinAut identity(GroupContext const& ctx);

    GroupContext const& context() const noexcept {
      return _ctx;
    }
    std::vector<Word> const& images() const noexcept {
      return _images;
    }
    Word const& image(int generator) const {
      return _images.at(static_cast<std::size_t>(generator - 1));
    }

    bool operator==(TwinAut const&) const = default;

   private:
    GroupContext      _ctx;
    std::vector<Word> _images;
  };

  TwinAut aut_inner(Word const& g, GroupContext const& ctx);
  TwinAut aut_psi(GroupContext const& ctx);
  TwinAut aut_tau(GroupContext const& ctx);  // n == 4
  TwinAut aut_tau();
  TwinAut aut_kappa(GroupContext const& ctx);  // n >= 5

  // a first, then b.
  TwinAut compose(TwinAut const& a, TwinAut const& b);
  TwinAut aut_power(TwinAut const& a, std::size_t k);
  // Inverse of an automorphism of finite order at most max_order; throws
  // twin::Error if no power of a up to max_order is the identity.
  TwinAut aut_inverse(TwinAut const& a, std::size_t max_order = 24);

  // Normal form of the image of w.
  Word apply_aut(TwinAut const& a, Word const& w);

  // The images satisfy the defining relations: each squares to the
  // identity and images of commuting generators commute. This does not
  // decide bijectivity.
  bool validate_aut(TwinAut const& a);

  // Requires validate_aut(a) (twin::Error otherwise) and that a is
  // bijective. True iff a(s_i) is conjugate to s_i for every i.
  bool is_inner(TwinAut const& a);

  // Searches for g with aut_inner(g) == a: greedy length descent first,
  // then breadth-first search over elements of length <= max_depth.
  std::optional<Word> find_inner_witness(TwinAut const& a, std::size_t max_depth = 12);

  struct OuterClass {
    int  psi   = 0;
    int  tau   = 0;
    int  kappa = 0;
    bool residual_inner = false;

    bool operator==(OuterClass const&) const = default;
  };

  std::string format_outer_class(OuterClass const& c);

  // The transversal element psi^psi tau^tau kappa^kappa, as a function
  // (the rightmost factor acts first).
  TwinAut transversal_element(OuterClass const& c, GroupContext const& ctx);

  // All transversal elements for T_n, n >= 3.
  std::vector<OuterClass> outer_transversal(GroupContext const& ctx);

  // The unique transversal element r with r o a inner. Throws twin::Error if
  // none (or more than one) is found, which means a is not an automorphism.
  OuterClass outer_class(TwinAut const& a);

  // Some i such that the generator-parity vector of a(s_i) differs from
  // that of s_i, i.e. a acts nontrivially on the abelianisation.
  std::optional<int> non_ia_generator(TwinAut const& a);

  struct WitnessCase {
    std::string label;
    Word        source;
    Word        image;
    Word        expected_image;
    bool        source_pure;
    bool        image_matches;
    bool        image_impure;

    bool passed() const noexcept {
      return source_pure && image_matches && image_impure;
    }
  };

  // Pure elements whose images under tau (n = 4) or kappa, kappa^2
  // (n >= 5) are not pure, so the pure twin group is not characteristic.
  std::vector<WitnessCase> characteristic_witnesses(GroupContext const& ctx);

}  // namespace twin

#endif  // TWIN_AUTOMORPHISMS_HPP_
