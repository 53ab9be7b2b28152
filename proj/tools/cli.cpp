#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <optional>
#include <ostream>

#include "twin/conjugacy.hpp"
#include "twin/free_rep.hpp"
#include "twin/involutions.hpp"
#include "twin/symmetric.hpp"
#include "twin/verify/acceptance.hpp"
#include "twin/zclasses.hpp"

namespace twin::cli {

  using json = nlohmann::ordered_json;

  namespace {
    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    TwinAut parse_factor(std::string_view text, GroupContext const& ctx) {
      text               = trim(text);
      std::size_t  power = 1;
      auto const   caret = text.rfind('^');
      if (caret != std::string_view::npos) {
        auto digits    = trim(text.substr(caret + 1));
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw Error("invalid exponent in automorphism factor \"" + std::string(text) + "\"");
        }
        text = trim(text.substr(0, caret));
      }
      TwinAut base = TwinAut::identity(ctx);
      if (text == "psi") {
        base = aut_psi(ctx);
      } else if (text == "tau") {
        base = aut_tau(ctx);
      } else if (text == "kappa") {
        base = aut_kappa(ctx);
      } else if (text == "id") {
        base = TwinAut::identity(ctx);
      } else if (text.substr(0, 6) == "inner:") {
        base = aut_inner(parse_word(text.substr(6), ctx), ctx);
      } else {
        throw Error("unknown automorphism \"" + std::string(text)
                    + "\" (expected psi, tau, kappa, id or inner:<word>)");
      }
      return aut_power(base, power);
    }

    std::string format_images(TwinAut const& a) {
      std::string out;
      for (int i = 1; i <= a.context().rank(); ++i) {
        out += "s" + std::to_string(i) + " -> " + format_word(a.image(i)) + "\n";
      }
      return out;
    }

    json images_json(TwinAut const& a) {
      json images = json::array();
      for (auto const& w : a.images()) {
        images.push_back(format_word(w));
      }
      return images;
    }

    json endo_json(FreeEndo const& e) {
      json images = json::array();
      for (auto const& w : e.images()) {
        images.push_back(format_free_word(w));
      }
      return images;
    }

    std::string format_endo(FreeEndo const& e) {
      std::string out;
      for (int k = 1; k <= e.rank(); ++k) {
        out += "x" + std::to_string(k) + " -> " + format_free_word(e.image(k)) + "\n";
      }
      return out;
    }

    json class_json(InvolutionClass const& c) {
      return json(c.indices());
    }

    std::string bool_text(bool b) {
      return b ? "true" : "false";
    }

    // Parses the class argument of `centralizer`: "(1,3)", "1 3" or "s1 s3".
    InvolutionClass parse_class(std::string text, GroupContext const& ctx) {
      for (char& c : text) {
        if (c == '(' || c == ')' || c == ',') {
          c = ' ';
        }
      }
      Word const w = parse_word(text, ctx);
      return InvolutionClass(w.vector());
    }

    struct Emitter {
      std::ostream& out;
      bool          as_json = false;

      void operator()(std::string const& op, json n, json input, json result,
                      std::string const& text) const {
        if (as_json) {
          json j;
          j["op"]     = op;
          j["n"]      = std::move(n);
          j["input"]  = std::move(input);
          j["result"] = std::move(result);
          out << j.dump() << '\n';
        } else {
          out << text;
          if (!text.empty() && text.back() != '\n') {
            out << '\n';
          }
        }
      }
    };

    // Uses --n when given, otherwise the smallest n containing every word.
    GroupContext context_for(std::optional<int> n, std::vector<std::string> const& words) {
      if (n) {
        GroupContext ctx(*n);
        for (auto const& w : words) {
          parse_word(w, ctx);
        }
        return ctx;
      }
      int needed = 2;
      for (auto const& w : words) {
        needed = std::max(needed, parse_word(w).max_letter() + 1);
      }
      return GroupContext(needed);
    }
  }  // namespace

  TwinAut parse_automorphism(std::string_view text, GroupContext const& ctx) {
    TwinAut     out   = TwinAut::identity(ctx);
    std::size_t start = 0;
    if (trim(text).empty()) {
      throw Error("empty automorphism literal");
    }
    while (start <= text.size()) {
      auto const stop = std::min(text.find('*', start), text.size());
      out             = compose(out, parse_factor(text.substr(start, stop - start), ctx));
      start           = stop + 1;
    }
    return out;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the twin groups T_n", "twin"};
    app.require_subcommand(1);

    Emitter                  emit{out};
    std::optional<int>       n_opt;
    int                      n_pos = 0;
    std::vector<std::string> words;
    std::function<void()>    action;

    auto with_json = [&](CLI::App* sub) {
      sub->add_flag("--json", emit.as_json, "Emit one JSON object");
    };
    auto with_n = [&](CLI::App* sub) {
      sub->add_option("--n", n_opt, "Number of strands (default: smallest fitting the input)");
    };
    auto word_command = [&](std::string name, std::string help, std::size_t arity) {
      auto* sub = app.add_subcommand(std::move(name), std::move(help));
      with_n(sub);
      with_json(sub);
      sub->add_option("words", words, "Words, e.g. \"1 2 1\" or \"s1.s2.s1\"")
          ->required()
          ->expected(static_cast<int>(arity));
      return sub;
    };

    // Words ---------------------------------------------------------------
    word_command("reduce", "A reduced word equivalent to the input", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        Word const r   = reduce(parse_word(words[0], ctx));
        emit("reduce", ctx.n(), words[0], format_word(r), format_word(r));
      };
    });
    word_command("nf", "Normal form", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        Word const r   = normal_form(parse_word(words[0], ctx));
        emit("nf", ctx.n(), words[0], format_word(r), format_word(r));
      };
    });
    word_command("eq", "Do two words represent the same element?", 2)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        bool const r   = equal(parse_word(words[0], ctx), parse_word(words[1], ctx));
        emit("eq", ctx.n(), words, r, bool_text(r));
      };
    });
    word_command("cyc", "Cyclic reduction: core and conjugator", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        auto const r   = cyclically_reduce(parse_word(words[0], ctx));
        json       j;
        j["core"]       = format_word(r.core);
        j["conjugator"] = format_word(r.conjugator);
        emit("cyc", ctx.n(), words[0], j,
             "core: " + format_word(r.core) + "\nconjugator: " + format_word(r.conjugator));
      };
    });
    word_command("conj", "Are two words conjugate?", 2)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        bool const r = are_conjugate(parse_word(words[0], ctx), parse_word(words[1], ctx));
        emit("conj", ctx.n(), words, r, bool_text(r));
      };
    });
    word_command("inv", "Is the word an involution? Prints its class if so", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        Word const w   = parse_word(words[0], ctx);
        json       j;
        j["involution"] = is_involution(w);
        std::string text = bool_text(is_involution(w));
        if (is_involution(w)) {
          auto const c = involution_class_rep(w);
          j["class"]   = class_json(c);
          text += " " + format_class(c);
        } else {
          j["class"] = nullptr;
        }
        emit("inv", ctx.n(), words[0], j, text);
      };
    });

    // Involutions and z-classes ---------------------------------------------
    auto number_command = [&](std::string name, std::string help) {
      auto* sub = app.add_subcommand(std::move(name), std::move(help));
      sub->add_option("n", n_pos, "Number of strands")->required();
      with_json(sub);
      return sub;
    };
    number_command("rho", "Number of conjugacy classes of involutions")->callback([&] {
      action = [&] {
        auto const r = rho(n_pos);
        emit("rho", n_pos, n_pos, r.str(), r.str());
      };
    });
    number_command("classes", "Canonical involution class representatives")->callback([&] {
      action = [&] {
        auto const classes = enumerate_involution_classes(GroupContext(n_pos));
        json       j       = json::array();
        std::string text;
        for (auto const& c : classes) {
          j.push_back(class_json(c));
          text += format_class(c) + "\n";
        }
        emit("classes", n_pos, n_pos, j, text);
      };
    });
    std::string class_text;
    auto*       centralizer = number_command("centralizer", "Centraliser of an involution class");
    centralizer->add_option("class", class_text, "Class, e.g. \"(1,3)\" or \"1 3\"")->required();
    centralizer->callback([&] {
      action = [&] {
        GroupContext const ctx(n_pos);
        auto const         c = parse_class(class_text, ctx);
        auto const         g = centralizer_of_involution(c, ctx);
        json               j;
        j["gens"] = g.gens;
        j["rank"] = g.rank;
        emit("centralizer", n_pos, format_class(c), j,
             "gens: " + format_word(Word(g.gens)) + "\nrank: " + std::to_string(g.rank));
      };
    });

    bool  direct = false, recursive = false, both = false;
    auto* lambda_cmd = number_command("lambda", "Number of z-classes of involutions");
    lambda_cmd->add_flag("--direct", direct, "Count distinct centralisers directly");
    lambda_cmd->add_flag("--recursive", recursive, "Use the recursion (default)");
    lambda_cmd->add_flag("--both", both, "Compute both and compare");
    lambda_cmd->callback([&] {
      action = [&] {
        if (both || (direct && recursive)) {
          auto const d = lambda_direct(n_pos);
          auto const r = lambda_recursive(n_pos);
          json       j;
          j["direct"]    = d.str();
          j["recursive"] = r.str();
          j["agree"]     = d == r;
          emit("lambda", n_pos, n_pos, j,
               "direct: " + d.str() + "\nrecursive: " + r.str());
        } else {
          auto const v = direct ? lambda_direct(n_pos) : lambda_recursive(n_pos);
          emit("lambda", n_pos, n_pos, v.str(), v.str());
        }
      };
    });
    number_command("alpha", "alpha_1 .. alpha_{n-1} and the lambda values")->callback([&] {
      action = [&] {
        auto const  table = zclass_table(n_pos);
        json        j;
        std::string text;
        j["n"] = table.n;
        j["lambda_direct"]
            = table.lambda_direct ? json(table.lambda_direct->str()) : json(nullptr);
        j["lambda_recursive"] = table.lambda_recursive.str();
        j["alpha"]            = json::array();
        for (std::size_t i = 0; i < table.alpha.size(); ++i) {
          j["alpha"].push_back(table.alpha[i].str());
          text += "alpha_" + std::to_string(i + 1) + " = " + table.alpha[i].str() + "\n";
        }
        text += "lambda_" + std::to_string(n_pos) + " = " + table.lambda_recursive.str() + "\n";
        emit("alpha", n_pos, n_pos, j, text);
      };
    });

    int   x_family = 0;
    auto* zclass   = app.add_subcommand("zclass", "Are two involutions z-equivalent?");
    with_n(zclass);
    with_json(zclass);
    zclass->add_option("words", words, "Two involutions")->expected(0, 2);
    zclass->add_option("--x-family", x_family,
                       "Instead, check that X_1..X_K are pairwise non-conjugate");
    zclass->callback([&] {
      action = [&] {
        if (x_family > 0) {
          int const  n = n_opt.value_or(4);
          bool const r = zclass_spotcheck_X_family(n, x_family);
          emit("zclass", n, json{{"x_family", x_family}}, r, bool_text(r));
          return;
        }
        if (words.size() != 2) {
          throw CLI::ValidationError("zclass", "expected two words or --x-family");
        }
        auto const ctx = context_for(n_opt, words);
        bool const r
            = same_z_class(parse_word(words[0], ctx), parse_word(words[1], ctx), ctx);
        emit("zclass", ctx.n(), words, r, bool_text(r));
      };
    });

    // Symmetric group ---------------------------------------------------------
    word_command("pi", "Image in the symmetric group", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        auto const p   = permutation_image(parse_word(words[0], ctx), ctx);
        json       j;
        j["one_line"] = p.images();
        j["cycles"]   = format_cycles(p);
        emit("pi", ctx.n(), words[0], j, format_one_line(p) + "\n" + format_cycles(p));
      };
    });
    word_command("pure", "Does the word lie in the pure twin group?", 1)->callback([&] {
      action = [&] {
        auto const ctx = context_for(n_opt, words);
        bool const r   = is_pure(parse_word(words[0], ctx), ctx);
        emit("pure", ctx.n(), words[0], r, bool_text(r));
      };
    });

    // Automorphisms -------------------------------------------------------------
    auto* aut = app.add_subcommand("aut", "Automorphisms of T_n");
    aut->require_subcommand(1);
    int         aut_n = 0;
    std::string aut_a, aut_b;
    auto        aut_command = [&](std::string name, std::string help) {
      auto* sub = aut->add_subcommand(std::move(name), std::move(help));
      sub->add_option("--n", aut_n, "Number of strands")->required();
      with_json(sub);
      return sub;
    };
    auto* apply_cmd = aut_command("apply", "Apply an automorphism to a word");
    apply_cmd->add_option("automorphism", aut_a)->required();
    apply_cmd->add_option("word", aut_b)->required();
    apply_cmd->callback([&] {
      action = [&] {
        GroupContext const ctx(aut_n);
        Word const         r = apply_aut(parse_automorphism(aut_a, ctx), parse_word(aut_b, ctx));
        emit("aut apply", aut_n, json::array({aut_a, aut_b}), format_word(r), format_word(r));
      };
    });
    auto* compose_cmd = aut_command("compose", "Generator images of A then B");
    compose_cmd->add_option("a", aut_a)->required();
    compose_cmd->add_option("b", aut_b)->required();
    compose_cmd->callback([&] {
      action = [&] {
        GroupContext const ctx(aut_n);
        auto const c = compose(parse_automorphism(aut_a, ctx), parse_automorphism(aut_b, ctx));
        emit("aut compose", aut_n, json::array({aut_a, aut_b}), images_json(c),
             format_images(c));
      };
    });
    bool        want_witness = false;
    std::size_t depth        = 12;
    auto*       inner_cmd    = aut_command("inner-test", "Is the automorphism inner?");
    inner_cmd->add_option("automorphism", aut_a)->required();
    inner_cmd->add_flag("--witness", want_witness, "Search for a conjugating element");
    inner_cmd->add_option("--depth", depth, "Search depth for --witness");
    inner_cmd->callback([&] {
      action = [&] {
        GroupContext const ctx(aut_n);
        auto const         a = parse_automorphism(aut_a, ctx);
        bool const         r = is_inner(a);
        if (!want_witness || !r) {
          emit("aut inner-test", aut_n, aut_a, r, bool_text(r));
          return;
        }
        auto const g = find_inner_witness(a, depth);
        json       j;
        j["inner"]   = r;
        j["witness"] = g ? json(format_word(*g)) : json(nullptr);
        emit("aut inner-test", aut_n, aut_a, j,
             "true\nwitness: "
                 + (g ? format_word(*g)
                      : "not found within depth " + std::to_string(depth)));
      };
    });
    auto* outer_cmd = aut_command("outer-class", "Outer automorphism class");
    outer_cmd->add_option("automorphism", aut_a)->required();
    outer_cmd->callback([&] {
      action = [&] {
        GroupContext const ctx(aut_n);
        auto const         c = outer_class(parse_automorphism(aut_a, ctx));
        json               j;
        j["psi"]            = c.psi;
        j["tau"]            = c.tau;
        j["kappa"]          = c.kappa;
        j["residual_inner"] = c.residual_inner;
        emit("aut outer-class", aut_n, aut_a, j, format_outer_class(c));
      };
    });
    auto* char_cmd = aut_command("characteristic",
                                 "Pure elements mapped outside the pure twin group");
    char_cmd->callback([&] {
      action = [&] {
        auto const  cases = characteristic_witnesses(GroupContext(aut_n));
        json        j     = json::array();
        std::string text;
        for (auto const& c : cases) {
          j.push_back({{"case", c.label},
                       {"source", format_word(c.source)},
                       {"image", format_word(c.image)},
                       {"source_pure", c.source_pure},
                       {"image_matches", c.image_matches},
                       {"image_impure", c.image_impure}});
          text += c.label + " = " + format_word(c.image) + "  "
                  + (c.passed() ? "impure" : "FAILED") + "\n";
        }
        emit("aut characteristic", aut_n, nullptr, j, text);
      };
    });

    // Free group representation -------------------------------------------------
    int   kernel_n = 0;
    auto* mu_cmd   = app.add_subcommand("mu", "Image of a word in Aut(F_n)");
    with_n(mu_cmd);
    with_json(mu_cmd);
    mu_cmd->add_option("words", words, "Word")->expected(0, 1);
    mu_cmd->add_option("--kernel-witness", kernel_n,
                       "Check the kernel witness in T_N instead");
    mu_cmd->callback([&] {
      action = [&] {
        if (kernel_n != 0) {
          GroupContext const ctx(kernel_n);
          Word const         x        = kernel_witness(ctx);
          bool const         trivial  = mu(x, ctx).is_identity();
          bool const         impure   = !is_pure(x, ctx);
          json               j;
          j["witness"]         = format_word(x);
          j["mu_is_identity"]  = trivial;
          j["pi_nontrivial"]   = impure;
          emit("mu", kernel_n, "kernel-witness", j,
               "witness: " + format_word(x) + "\nmu(x) = id: " + bool_text(trivial)
                   + "\npi(x) != id: " + bool_text(impure));
          return;
        }
        if (words.size() != 1) {
          throw CLI::ValidationError("mu", "expected a word or --kernel-witness N");
        }
        auto const ctx = context_for(n_opt, words);
        auto const e   = mu(parse_word(words[0], ctx), ctx);
        emit("mu", ctx.n(), words[0], endo_json(e), format_endo(e));
      };
    });

    // Acceptance ----------------------------------------------------------------
    int   max_n  = 0;
    auto* verify = app.add_subcommand("verify-all", "Run every acceptance criterion");
    verify->add_option("--max-n", max_n, "Cap the largest n used by each criterion");
    with_json(verify);
    verify->callback([&] {
      action = [&] {
        acceptance::Options options;
        options.max_n = max_n;
        std::vector<acceptance::Result> results;
        if (emit.as_json) {
          for (auto const& c : acceptance::criteria()) {
            results.push_back(acceptance::run_one(c, options));
          }
          json j = json::array();
          for (auto const& r : results) {
            j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                         {"detail", r.detail}});
          }
          emit("verify-all", max_n, nullptr, j, "");
        } else {
          results = acceptance::run_all(options, out);
        }
        bool const all = std::all_of(results.begin(), results.end(),
                                     [](auto const& r) { return r.passed; });
        if (!emit.as_json) {
          out << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
        }
        if (!all) {
          throw Error("acceptance criteria failed");
        }
      };
    });

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
      app.parse(argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "twin: " << e.what() << '\n';
      return 2;
    }
    try {
      action();
    } catch (CLI::ParseError const& e) {
      err << "twin: " << e.what() << '\n';
      return 2;
    } catch (twin::Error const& e) {
      err << "twin: " << e.what() << '\n';
      return 1;
    }
    return 0;
  }

}  // namespace twin::cli
