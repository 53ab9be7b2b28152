// Words in the free group F_n, endomorphisms given by basis images, and the
// representation mu_n : T_n -> Aut(F_n) with
//   mu(s_i) : x_i -> x_i x_{i+1},  x_{i+1} -> x_{i+1}^{-1},  x_j -> x_j.

#ifndef TWIN_FREE_REP_HPP_
#define TWIN_FREE_REP_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "twin/word.hpp"

namespace twin {

  // Letters are signed basis indices: +k is x_k, -k is x_k^{-1}.
  class FreeWord {
   public:
    FreeWord() = default;
    FreeWord(std::initializer_list<int> letters) : _letters(letters) {}
    explicit FreeWord(std::vector<int> letters);

    std::vector<int> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }

    FreeWord inverse() const;

    bool operator==(FreeWord const&) const = default;

   private:
    std::vector<int> _letters;
  };

  FreeWord free_reduce(FreeWord const& w);

  // "x1 x3^-1"; the empty word is "1".
  std::string format_free_word(FreeWord const& w);
  // Inverse of format_free_word (also accepts "x3^-2"-style powers).
  FreeWord parse_free_word(std::string_view text);

  class FreeEndo {
   public:
    // images[k - 1] is the image of x_k; stored freely reduced.
    explicit FreeEndo(std::vector<FreeWord> images);

    static FreeEndo identity(int rank);

    int rank() const noexcept {
      return static_cast<int>(_images.size());
    }
    std::vector<FreeWord> const& images() const noexcept {
      return _images;
    }
    FreeWord const& image(int k) const {
      return _images.at(static_cast<std::size_t>(k - 1));
    }
    bool is_identity() const;

    bool operator==(FreeEndo const&) const = default;

   private:
    std::vector<FreeWord> _images;
  };

  FreeWord endo_apply(FreeEndo const& e, FreeWord const& w);

  // The endomorphism x |-> outer(inner(x)); as a map this is outer o inner.
  FreeEndo endo_compose(FreeEndo const& outer, FreeEndo const& inner);

  FreeEndo mu_generator(int i, GroupContext const& ctx);

  // mu(w_1 w_2) = mu(w_1) o mu(w_2).
  FreeEndo mu(Word const& w, GroupContext const& ctx);

  // (s2 s3)^{-2} s1 (s2 s3)^2 s1 (s2 s3)^2 s1 (s2 s3)^{-2} s1, a non-trivial
  // element of T_n (n >= 4) in the kernel of mu.
  Word kernel_witness(GroupContext const& ctx);

  struct Mu3Mismatch {
    int         k;
    int         form;
    std::string detail;
  };

  // Compares mu((s1 s2)^{2k}), mu((s1 s2)^{2k} s1) and mu(s2 (s1 s2)^{2k-1})
  // in T_3 with their closed forms for 1 <= k <= k_max. Returns the
  // mismatches (empty when all agree).
  std::vector<Mu3Mismatch> mu3_power_formula_mismatches(int k_max);

  bool mu3_power_formulas_check(int k_max);

  // The closed form for the given form (1, 2 or 3) and k.
  FreeEndo mu3_closed_form(int form, int k);

}  // namespace twin

#endif  // TWIN_FREE_REP_HPP_
