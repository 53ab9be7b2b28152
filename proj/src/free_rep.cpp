#include "twin/free_rep.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace twin {

  FreeWord::FreeWord(std::vector<int> letters) : _letters(std::move(letters)) {
    for (int x : _letters) {
      if (x == 0) {
        throw Error("free group letters are nonzero signed basis indices");
      }
    }
  }

  FreeWord FreeWord::inverse() const {
    std::vector<int> out;
    out.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      out.push_back(-*it);
    }
    return FreeWord(std::move(out));
  }

  FreeWord free_reduce(FreeWord const& w) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int x : w.letters()) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return FreeWord(std::move(out));
  }

  std::string format_free_word(FreeWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (int x : w.letters()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += 'x' + std::to_string(std::abs(x));
      if (x < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  FreeWord parse_free_word(std::string_view text) {
    std::vector<int> out;
    std::size_t      i = 0;
    auto             fail = [&text]() {
      throw Error("invalid free group word \"" + std::string(text) + "\"");
    };
    auto read_int = [&](int& value) {
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) {
        fail();
      }
      i = static_cast<std::size_t>(ptr - text.data());
    };
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.') {
        ++i;
        continue;
      }
      if (text[i] == '1' && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
        ++i;
        continue;
      }
      if (text[i] != 'x') {
        fail();
      }
      ++i;
      int index = 0;
      read_int(index);
      if (index < 1) {
        fail();
      }
      int exponent = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        read_int(exponent);
      }
      for (int e = 0; e < std::abs(exponent); ++e) {
        out.push_back(exponent < 0 ? -index : index);
      }
    }
    return FreeWord(std::move(out));
  }

  FreeEndo::FreeEndo(std::vector<FreeWord> images) : _images(std::move(images)) {
    for (auto& w : _images) {
      for (int x : w.letters()) {
        if (std::abs(x) > rank()) {
          throw Error("image letter x" + std::to_string(std::abs(x))
                      + " is out of range for F_" + std::to_string(rank()));
        }
      }
      w = free_reduce(w);
    }
  }

  FreeEndo FreeEndo::identity(int rank) {
    std::vector<FreeWord> images;
    for (int k = 1; k <= rank; ++k) {
      images.push_back(FreeWord{k});
    }
    return FreeEndo(std::move(images));
  }

  bool FreeEndo::is_identity() const {
    for (int k = 1; k <= rank(); ++k) {
      if (!(image(k) == FreeWord{k})) {
        return false;
      }
    }
    return true;
  }

  FreeWord endo_apply(FreeEndo const& e, FreeWord const& w) {
    std::vector<int> out;
    for (int x : w.letters()) {
      if (std::abs(x) > e.rank()) {
        throw Error("letter x" + std::to_string(std::abs(x)) + " is out of range for F_"
                    + std::to_string(e.rank()));
      }
      FreeWord const& image = e.image(std::abs(x));
      if (x > 0) {
        out.insert(out.end(), image.letters().begin(), image.letters().end());
      } else {
        for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
          out.push_back(-*it);
        }
      }
    }
    return free_reduce(FreeWord(std::move(out)));
  }

  FreeEndo endo_compose(FreeEndo const& outer, FreeEndo const& inner) {
    if (outer.rank() != inner.rank()) {
      throw Error("cannot compose endomorphisms of free groups of different rank");
    }
    std::vector<FreeWord> images;
    for (auto const& w : inner.images()) {
      images.push_back(endo_apply(outer, w));
    }
    return FreeEndo(std::move(images));
  }

  FreeEndo mu_generator(int i, GroupContext const& ctx) {
    if (!ctx.contains(i)) {
      throw Error("generator s" + std::to_string(i) + " is out of range for T_"
                  + std::to_string(ctx.n()));
    }
    FreeEndo                e = FreeEndo::identity(ctx.n());
    std::vector<FreeWord> images = e.images();
    images[static_cast<std::size_t>(i - 1)] = FreeWord{i, i + 1};
    images[static_cast<std::size_t>(i)]     = FreeWord{-(i + 1)};
    return FreeEndo(std::move(images));
  }

  FreeEndo mu(Word const& w, GroupContext const& ctx) {
    check_bounds(w, ctx);
    std::vector<FreeEndo> generators;
    for (int i = 1; i <= ctx.rank(); ++i) {
      generators.push_back(mu_generator(i, ctx));
    }
    FreeEndo out = FreeEndo::identity(ctx.n());
    for (int i : w) {
      out = endo_compose(out, generators[static_cast<std::size_t>(i - 1)]);
    }
    return out;
  }

  Word kernel_witness(GroupContext const& ctx) {
    if (ctx.n() < 4) {
      throw Error("the kernel witness needs n >= 4");
    }
    Word const forward  = power(Word{2, 3}, 2);
    Word const backward = invert(forward);  // (s2 s3)^{-2} = (s3 s2)^2
    Word const s1{1};
    return backward * s1 * forward * s1 * forward * s1 * backward * s1;
  }

  namespace {
    void append_power(std::vector<int>& out, int letter, int exponent) {
      for (int e = 0; e < std::abs(exponent); ++e) {
        out.push_back(exponent < 0 ? -letter : letter);
      }
    }

    FreeWord build(std::initializer_list<std::pair<int, int>> factors) {
      std::vector<int> out;
      for (auto [letter, exponent] : factors) {
        append_power(out, letter, exponent);
      }
      return FreeWord(std::move(out));
    }

    Word mu3_source(int form, int k) {
      Word const s1s2{1, 2};
      switch (form) {
        case 1:
          return power(s1s2, static_cast<std::size_t>(2 * k));
        case 2:
          return power(s1s2, static_cast<std::size_t>(2 * k)) * Word{1};
        case 3:
          return Word{2} * power(s1s2, static_cast<std::size_t>(2 * k - 1));
        default:
          throw Error("mu3 closed forms are numbered 1, 2, 3");
      }
    }
  }  // namespace

  FreeEndo mu3_closed_form(int form, int k) {
    switch (form) {
      case 1:
        return FreeEndo({build({{1, 1}, {3, k}}), build({{3, -k}, {2, 1}, {3, -k}}),
                         FreeWord{3}});
      case 2:
        return FreeEndo({build({{1, 1}, {2, 1}, {3, -k}}),
                         build({{3, k}, {2, -1}, {3, k}}), FreeWord{3}});
      case 3:
        return FreeEndo({build({{1, 1}, {2, 1}, {3, k}}),
                         build({{3, -k}, {2, -1}, {3, -k}}), FreeWord{3}});
      default:
        throw Error("mu3 closed forms are numbered 1, 2, 3");
    }
  }

  std::vector<Mu3Mismatch> mu3_power_formula_mismatches(int k_max) {
    GroupContext const       ctx(3);
    std::vector<Mu3Mismatch> out;
    for (int k = 1; k <= k_max; ++k) {
      for (int form = 1; form <= 3; ++form) {
        FreeEndo const actual   = mu(mu3_source(form, k), ctx);
        FreeEndo const expected = mu3_closed_form(form, k);
        for (int x = 1; x <= 3; ++x) {
          if (!(actual.image(x) == expected.image(x))) {
            out.push_back({k, form,
                           "x" + std::to_string(x) + " -> "
                               + format_free_word(actual.image(x)) + ", expected "
                               + format_free_word(expected.image(x))});
          }
        }
      }
    }
    return out;
  }

  bool mu3_power_formulas_check(int k_max) {
    return mu3_power_formula_mismatches(k_max).empty();
  }

}  // namespace twin
