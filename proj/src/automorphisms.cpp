#include "twin/automorphisms.hpp"

#include <deque>
#include <unordered_set>

#include "twin/conjugacy.hpp"
#include "twin/symmetric.hpp"

namespace twin {

  TwinAut::TwinAut(GroupContext const& ctx, std::vector<Word> images)
      : _ctx(ctx), _images(std::move(images)) {
    if (static_cast<int>(_images.size()) != ctx.rank()) {
      throw Error("an automorphism of T_" + std::to_string(ctx.n()) + " needs "
                  + std::to_string(ctx.rank()) + " generator images, found "
                  + std::to_string(_images.size()));
    }
    for (auto& w : _images) {
      check_bounds(w, ctx);
      w = normal_form(w);
    }
  }

  TwinAut TwinAut::identity(GroupContext const& ctx) {
    std::vector<Word> images;
    for (int i = 1; i <= ctx.rank(); ++i) {
      images.push_back(Word{i});
    }
    return TwinAut(ctx, std::move(images));
  }

  TwinAut aut_inner(Word const& g, GroupContext const& ctx) {
    check_bounds(g, ctx);
    std::vector<Word> images;
    for (int i = 1; i <= ctx.rank(); ++i) {
      images.push_back(conjugate(Word{i}, g));
    }
    return TwinAut(ctx, std::move(images));
  }

  TwinAut aut_psi(GroupContext const& ctx) {
    if (ctx.n() < 3) {
      throw Error("psi is defined for n >= 3");
    }
    std::vector<Word> images;
    for (int i = 1; i <= ctx.rank(); ++i) {
      images.push_back(Word{ctx.n() - i});
    }
    return TwinAut(ctx, std::move(images));
  }

  TwinAut aut_tau(GroupContext const& ctx) {
    if (ctx.n() != 4) {
      throw Error("tau is defined only for n = 4");
    }
    return TwinAut(ctx, {Word{1, 3}, Word{2}, Word{1}});
  }

  TwinAut aut_tau() {
    return aut_tau(GroupContext(4));
  }

  TwinAut aut_kappa(GroupContext const& ctx) {
    int const n = ctx.n();
    if (n < 5) {
      throw Error("kappa is defined for n >= 5");
    }
    std::vector<Word> images;
    for (int i = 1; i <= ctx.rank(); ++i) {
      images.push_back(i == 3 ? Word{n - 3, n - 1} : Word{n - i});
    }
    return TwinAut(ctx, std::move(images));
  }

  Word apply_aut(TwinAut const& a, Word const& w) {
    check_bounds(w, a.context());
    Word out;
    for (int i : w) {
      out *= a.image(i);
    }
    return normal_form(out);
  }

  TwinAut compose(TwinAut const& a, TwinAut const& b) {
    if (a.context() != b.context()) {
      throw Error("cannot compose automorphisms of different twin groups");
    }
    std::vector<Word> images;
    for (auto const& w : a.images()) {
      images.push_back(apply_aut(b, w));
    }
    return TwinAut(a.context(), std::move(images));
  }

  TwinAut aut_power(TwinAut const& a, std::size_t k) {
    TwinAut out = TwinAut::identity(a.context());
    for (std::size_t i = 0; i < k; ++i) {
      out = compose(out, a);
    }
    return out;
  }

  TwinAut aut_inverse(TwinAut const& a, std::size_t max_order) {
    TwinAut const id       = TwinAut::identity(a.context());
    TwinAut       previous = id;
    TwinAut       current  = a;
    for (std::size_t k = 1; k <= max_order; ++k) {
      if (current == id) {
        return previous;
      }
      previous = current;
      current  = compose(current, a);
    }
    throw Error("automorphism has no finite order <= " + std::to_string(max_order));
  }

  bool validate_aut(TwinAut const& a) {
    auto const& img = a.images();
    for (auto const& w : img) {
      if (!reduce(w * w).empty()) {
        return false;
      }
    }
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = i + 2; j < img.size(); ++j) {
        if (!equal(img[i] * img[j], img[j] * img[i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_inner(TwinAut const& a) {
    if (!validate_aut(a)) {
      throw Error("generator images do not satisfy the twin group relations");
    }
    for (int i = 1; i <= a.context().rank(); ++i) {
      if (!are_conjugate(a.image(i), Word{i})) {
        return false;
      }
    }
    return true;
  }

  namespace {
    std::size_t total_length(TwinAut const& a) {
      std::size_t sum = 0;
      for (auto const& w : a.images()) {
        sum += w.size();
      }
      return sum;
    }

    std::optional<Word> verified(TwinAut const& a, Word g) {
      g = normal_form(g);
      if (aut_inner(g, a.context()) == a) {
        return g;
      }
      return std::nullopt;
    }
  }  // namespace

  // If a = inner(g) then compose(a, inner(h)) = inner(g h); we look for h
  // with inner(g h) = id, so g = h^{-1}.
  std::optional<Word> find_inner_witness(TwinAut const& a, std::size_t max_depth) {
    GroupContext const& ctx = a.context();
    TwinAut const       id  = TwinAut::identity(ctx);

    TwinAut current = a;
    Word    h;
    while (!(current == id)) {
      std::size_t const length = total_length(current);
      bool              moved  = false;
      for (int j = 1; j <= ctx.rank() && !moved; ++j) {
        TwinAut next = compose(current, aut_inner(Word{j}, ctx));
        if (total_length(next) < length) {
          current = std::move(next);
          h.push_back(j);
          moved = true;
        }
      }
      if (!moved) {
        break;
      }
    }
    if (current == id) {
      if (auto g = verified(a, invert(h))) {
        return g;
      }
    }

    // Bounded breadth-first search over normal forms.
    std::unordered_set<Word, WordHash> seen{Word()};
    std::deque<Word>                   queue{Word()};
    while (!queue.empty()) {
      Word g = std::move(queue.front());
      queue.pop_front();
      if (aut_inner(g, ctx) == a) {
        return g;
      }
      if (g.size() >= max_depth) {
        continue;
      }
      for (int j = 1; j <= ctx.rank(); ++j) {
        Word next = normal_form(g * Word{j});
        if (next.size() > g.size() && seen.insert(next).second) {
          queue.push_back(std::move(next));
        }
      }
    }
    return std::nullopt;
  }

  std::string format_outer_class(OuterClass const& c) {
    return "psi^" + std::to_string(c.psi) + " tau^" + std::to_string(c.tau)
           + " kappa^" + std::to_string(c.kappa);
  }

  TwinAut transversal_element(OuterClass const& c, GroupContext const& ctx) {
    TwinAut out = TwinAut::identity(ctx);
    if (c.kappa != 0) {
      out = aut_power(aut_kappa(ctx), static_cast<std::size_t>(c.kappa));
    }
    if (c.tau != 0) {
      out = aut_power(aut_tau(ctx), static_cast<std::size_t>(c.tau));
    }
    if (c.psi != 0) {
      out = compose(out, aut_power(aut_psi(ctx), static_cast<std::size_t>(c.psi)));
    }
    return out;
  }

  std::vector<OuterClass> outer_transversal(GroupContext const& ctx) {
    int const n = ctx.n();
    if (n < 3) {
      throw Error("the outer automorphism transversal is defined for n >= 3");
    }
    std::vector<OuterClass> out;
    for (int a = 0; a < 2; ++a) {
      if (n == 3) {
        out.push_back({a, 0, 0, false});
      } else if (n == 4) {
        for (int b = 0; b < 3; ++b) {
          out.push_back({a, b, 0, false});
        }
      } else {
        for (int b = 0; b < 4; ++b) {
          out.push_back({a, 0, b, false});
        }
      }
    }
    return out;
  }

  OuterClass outer_class(TwinAut const& a) {
    if (!validate_aut(a)) {
      throw Error("generator images do not satisfy the twin group relations");
    }
    std::vector<OuterClass> found;
    for (auto c : outer_transversal(a.context())) {
      if (is_inner(compose(a, transversal_element(c, a.context())))) {
        c.residual_inner = true;
        found.push_back(c);
      }
    }
    if (found.size() != 1) {
      throw Error(found.empty()
                      ? "no outer class representative found; the map is not an "
                        "automorphism"
                      : "more than one outer class representative found");
    }
    return found.front();
  }

  std::optional<int> non_ia_generator(TwinAut const& a) {
    for (int i = 1; i <= a.context().rank(); ++i) {
      Word const& w = a.image(i);
      for (int j = 1; j <= a.context().rank(); ++j) {
        if (eta(w, j) % 2 != (i == j ? 1U : 0U)) {
          return i;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<WitnessCase> characteristic_witnesses(GroupContext const& ctx) {
    int const n = ctx.n();
    if (n < 4) {
      throw Error("characteristic witnesses need n >= 4");
    }
    auto make_case = [&ctx](std::string label, TwinAut const& a, Word source,
                            Word expected) {
      Word image = apply_aut(a, source);
      return WitnessCase{std::move(label),
                         source,
                         image,
                         expected,
                         is_pure(source, ctx),
                         equal(image, expected),
                         !is_pure(image, ctx)};
    };
    std::vector<WitnessCase> out;
    if (n == 4) {
      out.push_back(make_case("tau((s1 s2)^3)", aut_tau(ctx), power(Word{1, 2}, 3),
                              power(Word{1, 3, 2}, 3)));
      return out;
    }
    TwinAut const kappa = aut_kappa(ctx);
    Word const    source = power(Word{2, 3}, 3);
    out.push_back(make_case("kappa((s2 s3)^3)", kappa, source,
                            power(Word{n - 2, n - 3, n - 1}, 3)));
    Word expected;
    if (n == 5) {
      expected = power(Word{2, 4, 3, 1}, 3);
    } else if (n == 6) {
      expected = power(Word{2, 3, 5, 1}, 3);
    } else {
      expected = power(Word{2, 3, 1}, 3);
    }
    out.push_back(make_case("kappa^2((s2 s3)^3)", compose(kappa, kappa), source,
                            expected));
    return out;
  }

}  // namespace twin
