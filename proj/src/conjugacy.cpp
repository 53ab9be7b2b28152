#include "twin/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace twin {

  namespace {
    // Positions of letters that can be flipped to the front (resp. back).
    std::vector<std::size_t> frontable(Word const& w) {
      std::vector<std::size_t> out;
      std::vector<char>        seen(static_cast<std::size_t>(w.max_letter()) + 2, 0);
      for (std::size_t p = 0; p < w.size(); ++p) {
        int const v = w[p];
        if (!seen[v] && !seen[v - 1] && !seen[v + 1]) {
          out.push_back(p);
        }
        seen[v] = 1;
      }
      return out;
    }

    std::vector<std::size_t> backable(Word const& w) {
      std::vector<std::size_t> out;
      std::vector<char>        seen(static_cast<std::size_t>(w.max_letter()) + 2, 0);
      for (std::size_t p = w.size(); p-- > 0;) {
        int const v = w[p];
        if (!seen[v] && !seen[v - 1] && !seen[v + 1]) {
          out.push_back(p);
        }
        seen[v] = 1;
      }
      return out;
    }

    // A letter value that is simultaneously frontable and backable at two
    // distinct positions, as (front position, back position).
    bool find_exposed_pair(Word const& w, std::size_t& front, std::size_t& back) {
      auto const f = frontable(w);
      auto const b = backable(w);
      for (std::size_t p : f) {
        for (std::size_t q : b) {
          if (p != q && w[p] == w[q]) {
            front = p;
            back  = q;
            return true;
          }
        }
      }
      return false;
    }

    Word erase_positions(Word const& w, std::size_t p, std::size_t q) {
      std::vector<int> out;
      out.reserve(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != p && i != q) {
          out.push_back(w[i]);
        }
      }
      return Word(std::move(out));
    }

    // Moves the letter at position p to the end.
    Word move_to_back(Word const& w, std::size_t p) {
      std::vector<int> out(w.vector());
      std::rotate(out.begin() + static_cast<std::ptrdiff_t>(p),
                  out.begin() + static_cast<std::ptrdiff_t>(p) + 1,
                  out.end());
      return Word(std::move(out));
    }

    // Maximal runs of consecutive generator indices in the support of w.
    // Letters from different runs commute.
    std::vector<std::pair<int, int>> support_components(Word const& w) {
      std::vector<int> support(w.begin(), w.end());
      std::sort(support.begin(), support.end());
      support.erase(std::unique(support.begin(), support.end()), support.end());
      std::vector<std::pair<int, int>> runs;
      for (int v : support) {
        if (!runs.empty() && runs.back().second + 1 == v) {
          runs.back().second = v;
        } else {
          runs.emplace_back(v, v);
        }
      }
      return runs;
    }

    Word project(Word const& w, int lo, int hi) {
      std::vector<int> out;
      for (int v : w) {
        if (v >= lo && v <= hi) {
          out.push_back(v);
        }
      }
      return Word(std::move(out));
    }
  }  // namespace

  bool is_cyclically_reduced(Word const& w) {
    if (!is_reduced(w)) {
      throw Error("is_cyclically_reduced expects a reduced word, found "
                  + format_word(w));
    }
    std::size_t p, q;
    return !find_exposed_pair(w, p, q);
  }

  CyclicReduction cyclically_reduce(Word const& w) {
    Word             core = reduce(w);
    std::vector<int> conjugator;
    std::size_t      p, q;
    while (find_exposed_pair(core, p, q)) {
      conjugator.push_back(core[p]);
      core = erase_positions(core, p, q);
    }
    return {flip_normal_form(core), Word(std::move(conjugator))};
  }

  std::vector<Word> cyclic_class(Word const& core) {
    Word const                              start = flip_normal_form(core);
    std::unordered_set<Word, WordHash> seen{start};
    std::deque<Word>                        queue{start};
    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      for (std::size_t p : frontable(u)) {
        Word next = flip_normal_form(move_to_back(u, p));
        if (seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  Word conjugacy_key(Word const& w) {
    Word const core = cyclically_reduce(w).core;
    Word       key;
    for (auto [lo, hi] : support_components(core)) {
      key *= cyclic_class(project(core, lo, hi)).front();
    }
    return key;
  }

  bool are_conjugate(Word const& lhs, Word const& rhs) {
    Word const a = cyclically_reduce(lhs).core;
    Word const b = cyclically_reduce(rhs).core;
    if (a.size() != b.size()) {
      return false;
    }
    auto const runs = support_components(a);
    if (runs != support_components(b)) {
      return false;
    }
    for (auto [lo, hi] : runs) {
      auto const orbit  = cyclic_class(project(a, lo, hi));
      Word const target = flip_normal_form(project(b, lo, hi));
      if (!std::binary_search(orbit.begin(), orbit.end(), target)) {
        return false;
      }
    }
    return true;
  }

  std::size_t conjugacy_minimal_length(Word const& w) {
    return cyclically_reduce(w).core.size();
  }

}  // namespace twin
