// Words in the twin group T_n.
//
// T_n is generated by involutions s_1, ..., s_{n-1}; s_i and s_j commute
// exactly when |i - j| >= 2 and adjacent generators satisfy no relation.
// A Word is a literal sequence of 1-based generator indices. Nothing here
// reduces implicitly: reduce() and normal_form() are explicit.

#ifndef TWIN_WORD_HPP_
#define TWIN_WORD_HPP_

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twin {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The ambient number of strands.
  class GroupContext {
   public:
    explicit GroupContext(int n);

    int n() const noexcept {
      return _n;
    }
    // Number of generators, n - 1.
    int rank() const noexcept {
      return _n - 1;
    }
    bool contains(int generator) const noexcept {
      return generator >= 1 && generator < _n;
    }

    bool operator==(GroupContext const&) const = default;

   private:
    int _n;
  };

  // s_i and s_j commute (and are distinct).
  constexpr bool commute(int i, int j) noexcept {
    return i - j >= 2 || j - i >= 2;
  }

  // s_j lies in the neighbour set s_i^*, i.e. [s_i, s_j] != 1.
  constexpr bool adjacent(int i, int j) noexcept {
    return i - j == 1 || j - i == 1;
  }

  class Word {
   public:
    using value_type = int;

    Word() = default;
    Word(std::initializer_list<int> letters) : _letters(letters) {}
    explicit Word(std::vector<int> letters) : _letters(std::move(letters)) {}

    std::span<int const> letters() const noexcept {
      return _letters;
    }
    std::vector<int> const& vector() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    int operator[](std::size_t i) const {
      return _letters[i];
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }
    // Largest generator index present, 0 for the identity.
    int max_letter() const noexcept;

    void push_back(int generator) {
      _letters.push_back(generator);
    }

    Word& operator*=(Word const& rhs);
    friend Word operator*(Word lhs, Word const& rhs) {
      return lhs *= rhs;
    }

    // Literal sequence equality. Use twin::equal for group equality.
    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::vector<int> _letters;
  };

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  // Word grammar: tokens separated by whitespace or '.', each either an
  // integer k or "s" followed by k, with 1 <= k <= n - 1. The empty string
  // and the single token "e" denote the identity.
  Word        parse_word(std::string_view text, GroupContext const& ctx);
  // Same grammar without the upper bound check.
  Word        parse_word(std::string_view text);
  std::string format_word(Word const& w);

  // Throws twin::Error if some letter is not a generator of T_n.
  void check_bounds(Word const& w, GroupContext const& ctx);

  // A reduced word equivalent to w.
  Word reduce(Word const& w);

  // Between any two equal letters there is a letter adjacent to them.
  bool is_reduced(Word const& w);

  // The lexicographically least reduced word representing w. Two words
  // represent the same element iff their normal forms coincide.
  Word normal_form(Word const& w);

  // Same as normal_form but skips the reduction step; w must be reduced.
  Word flip_normal_form(Word const& w);

  bool equal(Word const& lhs, Word const& rhs);

  // Number of occurrences of s_i in the literal word.
  std::size_t eta(Word const& w, int i);

  inline std::size_t length(Word const& w) noexcept {
    return w.size();
  }

  // Generators are involutions so the inverse is the reversal.
  Word invert(Word const& w);

  Word power(Word const& w, std::size_t k);

  // s_{i_t} ... s_{i_k} s_{i_1} ... s_{i_{t-1}} for offset t - 1.
  Word rotate(Word const& w, std::size_t offset);

  // Conjugate g^{-1} w g.
  Word conjugate(Word const& w, Word const& g);

}  // namespace twin

#endif  // TWIN_WORD_HPP_
