#include "twin/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>

namespace twin {

  GroupContext::GroupContext(int n) : _n(n) {
    if (n < 2) {
      throw Error("the number of strands must be at least 2, found "
                  + std::to_string(n));
    }
  }

  int Word::max_letter() const noexcept {
    auto it = std::max_element(_letters.begin(), _letters.end());
    return it == _letters.end() ? 0 : *it;
  }

  Word& Word::operator*=(Word const& rhs) {
    _letters.insert(_letters.end(), rhs._letters.begin(), rhs._letters.end());
    return *this;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letters
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : w) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  namespace {
    bool is_separator(char c) {
      return c == '.' || std::isspace(static_cast<unsigned char>(c));
    }

    std::vector<std::string_view> tokenize(std::string_view text) {
      std::vector<std::string_view> tokens;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_separator(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_separator(text[j])) {
          ++j;
        }
        if (j > i) {
          tokens.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return tokens;
    }

    int parse_generator(std::string_view token) {
      std::string_view digits = token;
      if (!digits.empty() && (digits.front() == 's' || digits.front() == 'S')) {
        digits.remove_prefix(1);
      }
      int  value = 0;
      auto first = digits.data();
      auto last  = digits.data() + digits.size();
      if (digits.empty() || !std::isdigit(static_cast<unsigned char>(*first))) {
        throw Error("invalid generator token \"" + std::string(token) + "\"");
      }
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw Error("invalid generator token \"" + std::string(token) + "\"");
      }
      if (value < 1) {
        throw Error("generator index must be positive, found \""
                    + std::string(token) + "\"");
      }
      return value;
    }
  }  // namespace

  Word parse_word(std::string_view text) {
    auto tokens = tokenize(text);
    if (tokens.size() == 1 && tokens.front() == "e") {
      return Word();
    }
    std::vector<int> letters;
    letters.reserve(tokens.size());
    for (auto token : tokens) {
      letters.push_back(parse_generator(token));
    }
    return Word(std::move(letters));
  }

  Word parse_word(std::string_view text, GroupContext const& ctx) {
    Word w = parse_word(text);
    check_bounds(w, ctx);
    return w;
  }

  std::string format_word(Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += 's';
      out += std::to_string(w[i]);
    }
    return out;
  }

  void check_bounds(Word const& w, GroupContext const& ctx) {
    for (int x : w) {
      if (!ctx.contains(x)) {
        throw Error("generator s" + std::to_string(x) + " is out of range for T_"
                    + std::to_string(ctx.n()) + " (expected 1 <= k <= "
                    + std::to_string(ctx.rank()) + ")");
      }
    }
  }

  // Appending s_v to a reduced word u either lengthens it or cancels the
  // last occurrence of s_v that can be flipped to the end of u. Scanning
  // right to left, an adjacent letter blocks the flip.
  Word reduce(Word const& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int v : w) {
      bool cancelled = false;
      for (std::size_t j = out.size(); j-- > 0;) {
        if (out[j] == v) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
          break;
        }
        if (adjacent(out[j], v)) {
          break;
        }
      }
      if (!cancelled) {
        out.push_back(v);
      }
    }
    return Word(std::move(out));
  }

  bool is_reduced(Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (adjacent(w[i], w[j])) {
          break;
        }
        if (w[j] == w[i]) {
          return false;
        }
      }
    }
    return true;
  }

  Word flip_normal_form(Word const& w) {
    std::size_t const len = w.size();
    if (len < 2) {
      return w;
    }
    std::size_t const width = static_cast<std::size_t>(w.max_letter()) + 2;
    std::vector<char> used(len, 0);
    std::vector<char> seen(width, 0);
    std::vector<int>  out;
    out.reserve(len);
    for (std::size_t step = 0; step < len; ++step) {
      std::fill(seen.begin(), seen.end(), 0);
      std::size_t best = len;
      for (std::size_t p = 0; p < len; ++p) {
        if (used[p]) {
          continue;
        }
        int const v = w[p];
        if (!seen[v] && !seen[v - 1] && !seen[v + 1]
            && (best == len || v < w[best])) {
          best = p;
        }
        seen[v] = 1;
      }
      used[best] = 1;
      out.push_back(w[best]);
    }
    return Word(std::move(out));
  }

  Word normal_form(Word const& w) {
    return flip_normal_form(reduce(w));
  }

  bool equal(Word const& lhs, Word const& rhs) {
    if ((lhs.size() - rhs.size()) % 2 != 0) {
      return false;
    }
    return normal_form(lhs) == normal_form(rhs);
  }

  std::size_t eta(Word const& w, int i) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), i));
  }

  Word invert(Word const& w) {
    return Word(std::vector<int>(w.vector().rbegin(), w.vector().rend()));
  }

  Word power(Word const& w, std::size_t k) {
    std::vector<int> out;
    out.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return Word(std::move(out));
  }

  Word rotate(Word const& w, std::size_t offset) {
    if (w.empty()) {
      return w;
    }
    std::vector<int> out(w.vector());
    std::rotate(out.begin(),
                out.begin() + static_cast<std::ptrdiff_t>(offset % w.size()),
                out.end());
    return Word(std::move(out));
  }

  Word conjugate(Word const& w, Word const& g) {
    return invert(g) * w * g;
  }

}  // namespace twin
