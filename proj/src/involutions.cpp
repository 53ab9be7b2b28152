#include "twin/involutions.hpp"

#include <algorithm>

#include "twin/conjugacy.hpp"

namespace twin {

  InvolutionClass::InvolutionClass(std::vector<int> indices)
      : _indices(std::move(indices)) {
    if (_indices.empty()) {
      throw Error("an involution class needs at least one index");
    }
    if (_indices.front() < 1) {
      throw Error("involution class indices must be positive");
    }
    for (std::size_t t = 1; t < _indices.size(); ++t) {
      if (_indices[t] - _indices[t - 1] < 2) {
        throw Error("involution class indices must increase with gaps >= 2");
      }
    }
  }

  std::uint64_t InvolutionClass::mask() const noexcept {
    std::uint64_t m = 0;
    for (int i : _indices) {
      m |= std::uint64_t{1} << i;
    }
    return m;
  }

  std::string format_class(InvolutionClass const& c) {
    std::string out = "(";
    for (std::size_t t = 0; t < c.indices().size(); ++t) {
      if (t != 0) {
        out += ',';
      }
      out += std::to_string(c.indices()[t]);
    }
    return out + ")";
  }

  bool is_involution(Word const& w) {
    return !reduce(w).empty() && reduce(w * w).empty();
  }

  InvolutionClass involution_class_rep(Word const& w) {
    if (!is_involution(w)) {
      throw Error(format_word(w) + " is not an involution");
    }
    std::vector<int> letters = cyclically_reduce(w).core.vector();
    std::sort(letters.begin(), letters.end());
    return InvolutionClass(std::move(letters));
  }

  std::vector<InvolutionClass> enumerate_involution_classes(GroupContext const& ctx) {
    if (ctx.n() > enumeration_cap) {
      throw Error("refusing to enumerate involution classes for n = "
                  + std::to_string(ctx.n()) + " (cap is "
                  + std::to_string(enumeration_cap) + ")");
    }
    std::vector<InvolutionClass> out;
    for_each_involution_mask(ctx, [&out](std::uint64_t m) {
      std::vector<int> indices;
      for (int i = 1; i < 64; ++i) {
        if (m >> i & 1U) {
          indices.push_back(i);
        }
      }
      out.emplace_back(std::move(indices));
    });
    return out;
  }

  BigInt rho(int n) {
    if (n < 2) {
      throw Error("rho(n) is defined for n >= 2");
    }
    BigInt previous = 1, current = 2;  // rho_2, rho_3
    if (n == 2) {
      return previous;
    }
    for (int k = 4; k <= n; ++k) {
      BigInt next = 1 + current + previous;
      previous    = std::move(current);
      current     = std::move(next);
    }
    return current;
  }

  std::uint64_t centralizer_mask(std::uint64_t class_mask, GroupContext const& ctx) {
    std::uint64_t all = 0;
    for (int i = 1; i <= ctx.rank(); ++i) {
      all |= std::uint64_t{1} << i;
    }
    std::uint64_t const neighbours = (class_mask << 1) | (class_mask >> 1);
    return all & ~neighbours;
  }

  CentralizerGens centralizer_of_involution(InvolutionClass const& c,
                                            GroupContext const&    ctx) {
    if (c.largest() > ctx.rank()) {
      throw Error("class " + format_class(c) + " does not lie in T_"
                  + std::to_string(ctx.n()));
    }
    CentralizerGens out{{}, 0};
    for (int j = 1; j <= ctx.rank(); ++j) {
      bool blocked = std::any_of(c.indices().begin(), c.indices().end(),
                                 [j](int i) { return adjacent(i, j); });
      if (!blocked) {
        out.gens.push_back(j);
      }
    }
    out.rank = static_cast<int>(out.gens.size());
    return out;
  }

}  // namespace twin
