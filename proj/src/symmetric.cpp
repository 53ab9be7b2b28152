#include "twin/symmetric.hpp"

#include <numeric>

namespace twin {

  Permutation Permutation::identity(int n) {
    Permutation p;
    p._images.resize(static_cast<std::size_t>(n));
    std::iota(p._images.begin(), p._images.end(), 1);
    return p;
  }

  Permutation Permutation::transposition(int n, int i, int j) {
    Permutation p = identity(n);
    std::swap(p._images[static_cast<std::size_t>(i - 1)],
              p._images[static_cast<std::size_t>(j - 1)]);
    return p;
  }

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<char> hit(_images.size() + 1, 0);
    for (int v : _images) {
      if (v < 1 || v > size() || hit[static_cast<std::size_t>(v)]) {
        throw Error("not a permutation of 1.." + std::to_string(size()));
      }
      hit[static_cast<std::size_t>(v)] = 1;
    }
  }

  bool Permutation::is_identity() const noexcept {
    for (std::size_t x = 0; x < _images.size(); ++x) {
      if (_images[x] != static_cast<int>(x) + 1) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    Permutation p;
    p._images.resize(_images.size());
    for (std::size_t x = 0; x < _images.size(); ++x) {
      p._images[static_cast<std::size_t>(_images[x] - 1)] = static_cast<int>(x) + 1;
    }
    return p;
  }

  Permutation operator*(Permutation const& lhs, Permutation const& rhs) {
    if (lhs.size() != rhs.size()) {
      throw Error("cannot multiply permutations of different degrees");
    }
    Permutation p;
    p._images.resize(lhs._images.size());
    for (std::size_t x = 0; x < lhs._images.size(); ++x) {
      p._images[x] = rhs(lhs._images[x]);
    }
    return p;
  }

  std::string format_one_line(Permutation const& p) {
    std::string out;
    for (int v : p.images()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += std::to_string(v);
    }
    return out;
  }

  std::string format_cycles(Permutation const& p) {
    std::string       out;
    std::vector<char> done(static_cast<std::size_t>(p.size()) + 1, 0);
    for (int start = 1; start <= p.size(); ++start) {
      if (done[static_cast<std::size_t>(start)] || p(start) == start) {
        continue;
      }
      out += '(';
      int x = start;
      do {
        if (out.back() != '(') {
          out += ' ';
        }
        out += std::to_string(x);
        done[static_cast<std::size_t>(x)] = 1;
        x                                 = p(x);
      } while (x != start);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  // state[x] is the image of x under the prefix read so far; where[v] is
  // its preimage. Right-multiplying by (i, i+1) swaps the values i and i+1.
  Permutation permutation_image(Word const& w, GroupContext const& ctx) {
    check_bounds(w, ctx);
    auto const       n = static_cast<std::size_t>(ctx.n());
    std::vector<int> state(n), where(n + 1);
    for (std::size_t x = 0; x < n; ++x) {
      state[x]     = static_cast<int>(x) + 1;
      where[x + 1] = static_cast<int>(x) + 1;
    }
    for (int i : w) {
      auto const a = static_cast<std::size_t>(i);
      auto const b = a + 1;
      std::swap(state[static_cast<std::size_t>(where[a] - 1)],
                state[static_cast<std::size_t>(where[b] - 1)]);
      std::swap(where[a], where[b]);
    }
    return Permutation(std::move(state));
  }

  bool is_pure(Word const& w, GroupContext const& ctx) {
    return permutation_image(w, ctx).is_identity();
  }

}  // namespace twin
