#include "twin/verify/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "twin/automorphisms.hpp"
#include "twin/conjugacy.hpp"
#include "twin/free_rep.hpp"
#include "twin/involutions.hpp"
#include "twin/symmetric.hpp"
#include "twin/verify/oracles.hpp"
#include "twin/zclasses.hpp"

namespace twin::acceptance {

  namespace {
    using Rng = std::mt19937_64;

    int cap(Options const& o, int upper) {
      return o.max_n > 0 ? std::min(upper, o.max_n) : upper;
    }

    int uniform(Rng& rng, int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    Word random_word(Rng& rng, int n, std::size_t max_len) {
      auto const len = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len)));
      Word       w;
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(uniform(rng, 1, n - 1));
      }
      return w;
    }

    // A word equivalent to w obtained by random flips, deletions and
    // insertions, never longer than max_len.
    Word scramble(Rng& rng, Word const& w, int n, std::size_t max_len) {
      std::vector<int> u(w.begin(), w.end());
      int const        moves = uniform(rng, 1, 8);
      for (int m = 0; m < moves; ++m) {
        int const kind = uniform(rng, 0, 2);
        if (kind == 0 && u.size() >= 2) {
          auto const i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(u.size()) - 2));
          if (commute(u[i], u[i + 1])) {
            std::swap(u[i], u[i + 1]);
          }
        } else if (kind == 1 && u.size() >= 2) {
          auto const i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(u.size()) - 2));
          if (u[i] == u[i + 1]) {
            u.erase(u.begin() + static_cast<std::ptrdiff_t>(i),
                    u.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          }
        } else if (kind == 2 && u.size() + 2 <= max_len) {
          auto const i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(u.size())));
          int const  g = uniform(rng, 1, n - 1);
          u.insert(u.begin() + static_cast<std::ptrdiff_t>(i), {g, g});
        }
      }
      return Word(std::move(u));
    }

    std::string str(BigInt const& x) {
      return x.str();
    }

    // ---------------------------------------------------------------------

    std::string rho_table(Options const& o, bool& ok) {
      int const top = cap(o, 20);
      ok            = rho(2) == 1 && rho(3) == 2;
      for (int n = 2; n <= top; ++n) {
        if (rho(n) != oracle::fibonacci(n + 1) - 1 || rho(n) != oracle::binomial_rho(n)) {
          ok = false;
          return "mismatch at n = " + std::to_string(n) + ": rho = " + str(rho(n))
                 + ", F_{n+1} - 1 = " + str(oracle::fibonacci(n + 1) - 1);
        }
      }
      return "n = 2.." + std::to_string(top) + ", rho_" + std::to_string(top) + " = "
             + str(rho(top));
    }

    std::string rho_enumeration(Options const& o, bool& ok) {
      int const top = cap(o, 20);
      ok            = true;
      for (int n = 2; n <= top; ++n) {
        auto const classes = enumerate_involution_classes(GroupContext(n));
        if (BigInt(classes.size()) != rho(n)) {
          ok = false;
          return "n = " + std::to_string(n) + ": enumerated " + std::to_string(classes.size())
                 + ", rho = " + str(rho(n));
        }
      }
      return "n = 2.." + std::to_string(top) + " enumerated";
    }

    std::string lambda_table(Options const& o, bool& ok) {
      std::vector<int> const known{1, 2, 2, 5, 8};
      ok = true;
      std::ostringstream detail;
      for (int n = 2; n <= cap(o, 6); ++n) {
        if (lambda_direct(n) != known[static_cast<std::size_t>(n - 2)]) {
          ok = false;
          detail << "lambda_direct(" << n << ") = " << lambda_direct(n) << " ";
        }
      }
      for (int n = 7; n <= cap(o, 16); ++n) {
        if (lambda_direct(n) != lambda_recursive(n)) {
          ok = false;
          detail << "n = " << n << ": direct " << lambda_direct(n) << " vs recursive "
                 << lambda_recursive(n) << " ";
        }
      }
      if (ok) {
        detail << "lambda_2..6 = 1 2 2 5 8; direct = recursive up to n = " << cap(o, 16)
               << " (lambda_" << cap(o, 16) << " = " << lambda_recursive(cap(o, 16)) << ")";
      }
      return detail.str();
    }

    std::string alpha_identity(Options const& o, bool& ok) {
      ok = true;
      std::ostringstream detail;
      int const          top = cap(o, 14);
      for (int i = 3; i <= top; ++i) {
        if (alpha(i + 1) != 1 + lambda_direct(i)) {
          ok = false;
          detail << "alpha_" << i + 1 << " = " << alpha(i + 1) << " but 1 + lambda_" << i
                 << " = " << 1 + lambda_direct(i) << " ";
        }
      }
      if (ok) {
        detail << "i = 3.." << top;
      }
      return detail.str();
    }

    std::string word_problem(Options const& o, bool& ok) {
      ok             = true;
      int const top  = cap(o, 5);
      std::size_t pool_words = 0, random_pairs = 0, equal_pairs = 0;
      for (int n = 2; n <= top; ++n) {
        std::map<Word, Word> key_to_nf, nf_to_key;
        for (std::size_t len = 0; len <= 6; ++len) {
          for (auto const& w : oracle::all_words(n, len)) {
            Word const key = oracle::minimal_key(w);
            Word const nf  = normal_form(w);
            auto [a, fresh_a] = key_to_nf.emplace(key, nf);
            auto [b, fresh_b] = nf_to_key.emplace(nf, key);
            if (!(a->second == nf) || !(b->second == key)) {
              ok = false;
              return "partition mismatch in T_" + std::to_string(n) + " at "
                     + format_word(w);
            }
            ++pool_words;
          }
        }
      }
      Rng rng(o.seed);
      for (int t = 0; t < 10000; ++t) {
        int const  n  = 2 + t % (top - 1);
        Word const w1 = random_word(rng, n, 8);
        Word const w2 = (t % 2 == 0) ? scramble(rng, w1, n, 8) : random_word(rng, n, 8);
        bool const expected = oracle::equal(w1, w2);
        if (twin::equal(w1, w2) != expected) {
          ok = false;
          return "disagreement in T_" + std::to_string(n) + " on (" + format_word(w1)
                 + ", " + format_word(w2) + ")";
        }
        equal_pairs += expected ? 1 : 0;
        ++random_pairs;
      }
      return std::to_string(pool_words) + " pool words (all pairs via partition), "
             + std::to_string(random_pairs) + " random pairs (" + std::to_string(equal_pairs)
             + " equal)";
    }

    std::string conjugacy_oracle(Options const& o, bool& ok) {
      ok = true;
      std::size_t pairs = 0, conjugate_pairs = 0;
      Rng         rng(o.seed + 1);
      for (int n = 2; n <= cap(o, 4); ++n) {
        std::set<Word> pool_set;
        for (std::size_t len = 0; len <= 6; ++len) {
          for (auto const& w : oracle::all_words(n, len)) {
            if (oracle::is_cyclically_reduced(w)) {
              pool_set.insert(oracle::canonical(w));
            }
          }
        }
        std::vector<Word> const        pool(pool_set.begin(), pool_set.end());
        std::map<Word, std::set<Word>> orbits;
        auto                           orbit = [&](Word const& w) -> std::set<Word> const& {
          auto it = orbits.find(w);
          if (it == orbits.end()) {
            it = orbits.emplace(w, oracle::conjugation_orbit(w, n, w.size() + 4)).first;
          }
          return it->second;
        };
        auto check = [&](Word const& a, Word const& b) {
          bool const expected = orbit(a).count(b) != 0;
          ++pairs;
          conjugate_pairs += expected ? 1 : 0;
          return are_conjugate(a, b) == expected;
        };
        for (std::size_t i = 0; i < pool.size(); ++i) {
          for (std::size_t j = 0; j < pool.size(); ++j) {
            if (pool[i].size() == pool[j].size() && !check(pool[i], pool[j])) {
              ok = false;
              return "disagreement in T_" + std::to_string(n) + " on (" + format_word(pool[i])
                     + ", " + format_word(pool[j]) + ")";
            }
          }
        }
        for (int t = 0; t < 200 && pool.size() > 1; ++t) {
          auto const& a = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
          auto const& b = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))];
          if (!check(a, b)) {
            ok = false;
            return "disagreement in T_" + std::to_string(n) + " on (" + format_word(a) + ", "
                   + format_word(b) + ")";
          }
        }
      }
      if (pairs < 1000) {
        ok = false;
      }
      return std::to_string(pairs) + " pairs (" + std::to_string(conjugate_pairs)
             + " conjugate)";
    }

    std::string centralizer_soundness(Options const& o, bool& ok) {
      ok                  = true;
      std::size_t classes = 0;
      for (int n = 2; n <= cap(o, 12); ++n) {
        GroupContext const ctx(n);
        for (auto const& c : enumerate_involution_classes(ctx)) {
          auto const gens = centralizer_of_involution(c, ctx);
          Word const w    = c.word();
          for (int g = 1; g <= ctx.rank(); ++g) {
            bool const listed   = std::find(gens.gens.begin(), gens.gens.end(), g) != gens.gens.end();
            bool const commutes = twin::equal(Word{g} * w * Word{g}, w);
            if (listed != commutes) {
              ok = false;
              return "T_" + std::to_string(n) + " class " + format_class(c) + " generator s"
                     + std::to_string(g);
            }
          }
          ++classes;
        }
      }
      return std::to_string(classes) + " classes checked";
    }

    std::string automorphism_relations(Options const& o, bool& ok) {
      ok = true;
      std::ostringstream fail;
      for (int n = 3; n <= cap(o, 8); ++n) {
        GroupContext const ctx(n);
        TwinAut const      id  = TwinAut::identity(ctx);
        TwinAut const      psi = aut_psi(ctx);
        if (!(compose(psi, psi) == id)) {
          fail << "psi^2 != id (n=" << n << ") ";
        }
        if (is_inner(psi)) {
          fail << "psi inner (n=" << n << ") ";
        }
        if (n == 4) {
          TwinAut const tau  = aut_tau(ctx);
          TwinAut const tau2 = compose(tau, tau);
          if (!(compose(tau2, tau) == id)) {
            fail << "tau^3 != id ";
          }
          if (!(compose(compose(psi, tau), psi) == tau2)) {
            fail << "psi tau psi != tau^2 ";
          }
          if (is_inner(tau)) {
            fail << "tau inner ";
          }
        }
        if (n >= 5) {
          TwinAut const kappa = aut_kappa(ctx);
          if (!(aut_power(kappa, 4) == id) || aut_power(kappa, 2) == id) {
            fail << "kappa order != 4 (n=" << n << ") ";
          }
          if (!(compose(compose(compose(psi, kappa), psi), kappa) == id)) {
            fail << "psi kappa psi kappa != id (n=" << n << ") ";
          }
          if (is_inner(kappa)) {
            fail << "kappa inner (n=" << n << ") ";
          }
        }
        Rng rng(o.seed + static_cast<std::uint64_t>(n));
        for (int t = 0; t < 200; ++t) {
          Word const g = random_word(rng, n, 10);
          if (!is_inner(aut_inner(g, ctx))) {
            fail << "inner(" << format_word(g) << ") not recognised (n=" << n << ") ";
            break;
          }
        }
      }
      ok = fail.str().empty();
      return ok ? "n = 3.." + std::to_string(cap(o, 8)) + ", 200 random inner per n"
                : fail.str();
    }

    std::string out_structure(Options const& o, bool& ok) {
      ok = true;
      std::ostringstream detail;
      std::map<int, std::size_t> const expected{{3, 2}, {4, 6}, {5, 8}, {6, 8}};
      for (auto [n, size] : expected) {
        if (n > cap(o, 6)) {
          continue;
        }
        GroupContext const ctx(n);
        auto const         reps = outer_transversal(ctx);
        std::vector<TwinAut> auts;
        for (auto const& r : reps) {
          auts.push_back(transversal_element(r, ctx));
        }
        std::size_t distinct = 0;
        for (std::size_t i = 0; i < auts.size(); ++i) {
          bool fresh = validate_aut(auts[i]);
          for (std::size_t j = 0; j < i; ++j) {
            if (is_inner(compose(auts[i], aut_inverse(auts[j])))) {
              fresh = false;
            }
          }
          distinct += fresh ? 1 : 0;
        }
        detail << "|Out(T_" << n << ")| = " << distinct << "; ";
        if (distinct != size) {
          ok = false;
        }

        Rng rng(o.seed + 100 + static_cast<std::uint64_t>(n));
        std::vector<TwinAut> generators{aut_psi(ctx)};
        if (n == 4) {
          generators.push_back(aut_tau(ctx));
        } else if (n >= 5) {
          generators.push_back(aut_kappa(ctx));
        }
        for (int t = 0; t < 100; ++t) {
          TwinAut    a      = TwinAut::identity(ctx);
          TwinAut    b      = TwinAut::identity(ctx);
          int const  length = uniform(rng, 1, 6);
          for (int f = 0; f < length; ++f) {
            int const pick = uniform(rng, 0, static_cast<int>(generators.size()));
            if (pick == static_cast<int>(generators.size())) {
              a = compose(a, aut_inner(random_word(rng, n, 6), ctx));
            } else {
              a = compose(a, generators[static_cast<std::size_t>(pick)]);
              b = compose(b, generators[static_cast<std::size_t>(pick)]);
            }
          }
          OuterClass const r = outer_class(a);
          bool const round_trip = outer_class(b) == r
                                  && compose(b, transversal_element(r, ctx)) == TwinAut::identity(ctx)
                                  && outer_class(aut_inverse(transversal_element(r, ctx))) == r;
          if (!round_trip) {
            ok = false;
            detail << "round trip failed (n=" << n << ", product " << t << "); ";
            break;
          }
        }
      }
      if (ok) {
        detail << "100 random products round-trip per n";
      }
      return detail.str();
    }

    std::string witnesses(Options const& o, bool& ok) {
      ok = true;
      std::ostringstream detail;
      std::size_t        cases = 0;
      for (int n = 4; n <= cap(o, 8); ++n) {
        for (auto const& c : characteristic_witnesses(GroupContext(n))) {
          ++cases;
          if (!c.passed()) {
            ok = false;
            detail << c.label << " failed (n=" << n << ") ";
          }
        }
      }
      if (ok) {
        detail << cases << " cases impure as expected";
      }
      return detail.str();
    }

    std::string representation(Options const& o, bool& ok) {
      ok = true;
      std::ostringstream fail;
      for (int n = 2; n <= cap(o, 8); ++n) {
        GroupContext const ctx(n);
        for (int i = 1; i <= ctx.rank(); ++i) {
          if (!mu(Word{i, i}, ctx).is_identity()) {
            fail << "mu(s" << i << ")^2 != id (n=" << n << ") ";
          }
          for (int j = i + 2; j <= ctx.rank(); ++j) {
            if (!(mu(Word{i, j}, ctx) == mu(Word{j, i}, ctx))) {
              fail << "mu(s" << i << "), mu(s" << j << ") do not commute (n=" << n << ") ";
            }
          }
        }
      }
      for (auto const& m : mu3_power_formula_mismatches(10)) {
        fail << "closed form " << m.form << " k=" << m.k << ": " << m.detail << " ";
      }
      for (int n = 4; n <= cap(o, 8); ++n) {
        GroupContext const ctx(n);
        Word const         x = kernel_witness(ctx);
        if (!mu(x, ctx).is_identity() || is_pure(x, ctx)) {
          fail << "kernel witness failed (n=" << n << ") ";
        }
      }
      GroupContext const t3(3);
      for (std::size_t len = 1; len <= 12; ++len) {
        for (int first = 1; first <= 2; ++first) {
          Word w;
          for (std::size_t p = 0; p < len; ++p) {
            w.push_back(p % 2 == 0 ? first : 3 - first);
          }
          if (mu(w, t3).is_identity()) {
            fail << "mu(" << format_word(w) << ") = id in T_3 ";
          }
        }
      }
      ok = fail.str().empty();
      return ok ? "relations n <= " + std::to_string(cap(o, 8))
                      + ", closed forms k <= 10, kernel witness, T_3 faithful to length 12"
                : fail.str();
    }
  }  // namespace

  std::vector<Criterion> criteria() {
    return {
        {1, "rho(n) = F_{n+1} - 1 for n = 2..20", 1.0, rho_table},
        {2, "|A_n| = rho(n) for n = 2..20", 5.0, rho_enumeration},
        {3, "lambda table and recursion for n = 2..16", 10.0, lambda_table},
        {4, "alpha(i+1) = 1 + lambda(i) for i = 3..14", 10.0, alpha_identity},
        {5, "word problem agrees with flip/deletion BFS", 60.0, word_problem},
        {6, "conjugacy agrees with conjugation-orbit BFS", 60.0, conjugacy_oracle},
        {7, "involution centraliser generators for n <= 12", 30.0, centralizer_soundness},
        {8, "automorphism relations and inner-ness", 30.0, automorphism_relations},
        {9, "outer automorphism classes", 60.0, out_structure},
        {10, "pure twin group is not characteristic", 5.0, witnesses},
        {11, "free group representation", 30.0, representation},
    };
  }

  Result run_one(Criterion const& c, Options const& options) {
    auto const  start  = std::chrono::steady_clock::now();
    bool        ok     = false;
    std::string detail;
    try {
      detail = c.run(options, ok);
    } catch (std::exception const& e) {
      ok     = false;
      detail = std::string("exception: ") + e.what();
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.time_limit) {
      ok = false;
      detail += " [exceeded time limit]";
    }
    return {c.id, c.name, ok, detail, seconds, c.time_limit};
  }

  std::vector<Result> run_all(Options const& options, std::ostream& out) {
    std::vector<Result> results;
    for (auto const& c : criteria()) {
      results.push_back(run_one(c, options));
      out << format_result(results.back()) << '\n' << std::flush;
    }
    return results;
  }

  std::string format_result(Result const& r) {
    std::ostringstream s;
    s << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.name
      << "  (" << std::fixed << std::setprecision(2) << r.seconds << "s / "
      << std::setprecision(0) << r.time_limit << "s)  " << r.detail;
    return s.str();
  }

}  // namespace twin::acceptance
