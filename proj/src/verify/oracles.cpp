#include "twin/verify/oracles.hpp"

#include <algorithm>
#include <deque>

namespace twin::oracle {

  namespace {
    bool separated(int a, int b) {
      return a - b == 1 || b - a == 1;
    }
  }  // namespace

  Word pair_deletion_reduce(Word const& w) {
    std::vector<int> letters(w.begin(), w.end());
    bool             changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < letters.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < letters.size(); ++j) {
          if (separated(letters[i], letters[j])) {
            break;
          }
          if (letters[j] == letters[i]) {
            letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(j));
            letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            break;
          }
        }
      }
    }
    return Word(std::move(letters));
  }

  std::set<Word> flip_class(Word const& w) {
    std::set<Word>   seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
      std::vector<int> u = queue.front().vector();
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        int d = u[i] - u[i + 1];
        if (d >= 2 || d <= -2) {
          std::swap(u[i], u[i + 1]);
          Word next(u);
          if (seen.insert(next).second) {
            queue.push_back(next);
          }
          std::swap(u[i], u[i + 1]);
        }
      }
    }
    return seen;
  }

  Word canonical(Word const& w) {
    return *flip_class(pair_deletion_reduce(w)).begin();
  }

  std::set<Word> reachable(Word const& w) {
    std::set<Word>   seen{w};
    std::deque<Word> queue{w};
    while (!queue.empty()) {
      std::vector<int> u = queue.front().vector();
      queue.pop_front();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        int d = u[i] - u[i + 1];
        if (d == 0) {
          std::vector<int> v(u);
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i),
                  v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          Word next(std::move(v));
          if (seen.insert(next).second) {
            queue.push_back(std::move(next));
          }
        } else if (d >= 2 || d <= -2) {
          std::swap(u[i], u[i + 1]);
          Word next(u);
          if (seen.insert(next).second) {
            queue.push_back(next);
          }
          std::swap(u[i], u[i + 1]);
        }
      }
    }
    return seen;
  }

  bool equal(Word const& lhs, Word const& rhs) {
    auto const a = reachable(lhs);
    auto const b = reachable(rhs);
    auto const& small = a.size() < b.size() ? a : b;
    auto const& large = a.size() < b.size() ? b : a;
    return std::any_of(small.begin(), small.end(),
                       [&large](Word const& u) { return large.count(u) != 0; });
  }

  Word minimal_key(Word const& w) {
    auto const   all  = reachable(w);
    Word const*  best = nullptr;
    for (auto const& u : all) {
      if (best == nullptr || u.size() < best->size()
          || (u.size() == best->size() && u < *best)) {
        best = &u;
      }
    }
    return *best;
  }

  bool is_cyclically_reduced(Word const& w) {
    for (std::size_t t = 0; t < std::max<std::size_t>(w.size(), 1); ++t) {
      std::vector<int> r(w.begin(), w.end());
      if (!r.empty()) {
        std::rotate(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(t), r.end());
      }
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
          if (separated(r[i], r[j])) {
            break;
          }
          if (r[i] == r[j]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::set<Word> conjugation_orbit(Word const& w, int n, std::size_t bound) {
    Word const       start = canonical(w);
    std::set<Word>   seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
      Word u = queue.front();
      queue.pop_front();
      for (int i = 1; i < n; ++i) {
        Word next = canonical(Word{i} * u * Word{i});
        if (next.size() <= bound && seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    return seen;
  }

  std::vector<Word> all_words(int n, std::size_t len) {
    std::vector<Word> out;
    std::vector<int>  digits(len, 1);
    if (n < 2) {
      return out;
    }
    while (true) {
      out.emplace_back(digits);
      std::size_t p = len;
      while (p > 0 && digits[p - 1] == n - 1) {
        digits[p - 1] = 1;
        --p;
      }
      if (p == 0) {
        break;
      }
      ++digits[p - 1];
    }
    return out;
  }

  BigInt fibonacci(int k) {
    BigInt a = 0, b = 1;  // F_0, F_1
    for (int i = 0; i < k; ++i) {
      BigInt c = a + b;
      a        = std::move(b);
      b        = std::move(c);
    }
    return a;
  }

  BigInt binomial_rho(int n) {
    BigInt total = 0;
    for (int k = 1; k <= n / 2; ++k) {
      BigInt c = 1;
      for (int j = 0; j < k; ++j) {
        c = c * (n - k - j) / (j + 1);
      }
      total += c;
    }
    return total;
  }

  std::vector<std::vector<int>> gap_subsets(int n) {
    std::vector<std::vector<int>> out;
    int const                     rank = n - 1;
    for (unsigned long mask = 1; mask < (1UL << rank); ++mask) {
      if (mask & (mask >> 1)) {
        continue;
      }
      std::vector<int> s;
      for (int i = 0; i < rank; ++i) {
        if (mask >> i & 1UL) {
          s.push_back(i + 1);
        }
      }
      out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace twin::oracle
