#include "cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "leavitt/derivation_io.hpp"
#include "leavitt/expression.hpp"
#include "leavitt/inner.hpp"
#include "leavitt/oracle.hpp"
#include "leavitt/printing.hpp"

namespace leavitt::cli {

namespace {

using nlohmann::json;

json word_json(const BasisMonomial& m) {
  json word = json::array();
  if (m.monomial_class() == MonomialClass::Vertex) {
    word.push_back("v");
    return word;
  }
  for (const Generator& g : m.spelling()) word.push_back(to_string(g));
  return word;
}

json rational_json(const Rational& q) {
  return json::array({q.get_num().get_str(), q.get_den().get_str()});
}

json terms_json(const Element& x) {
  json terms = json::array();
  for (const auto& [m, c] : x.terms()) {
    terms.push_back(json::array({word_json(m), c.get_num().get_str(), c.get_den().get_str()}));
  }
  return terms;
}

json violation_json(const Violation& v) {
  json j{{"equation", v.equation}, {"indices", v.indices}};
  if (v.index) j["index"] = to_string(*v.index);
  if (!v.word.empty()) j["word"] = to_string(v.word);
  if (const auto* e = std::get_if<Element>(&v.residual)) {
    j["residual"] = terms_json(*e);
  } else {
    j["residual"] = rational_json(std::get<Rational>(v.residual));
  }
  return j;
}

std::string generator_name(const Generator& g) { return to_string(g); }

struct Options {
  bool json = false;
  int loops = 1;
  std::string deriv_path;
  std::string expr_a;
  std::string expr_b;
  bool strict_omega = false;
  std::size_t max_len = 1;
  std::size_t words = 1000;
  std::size_t max_word_len = 8;
  std::uint64_t seed = 1;
};

class Commands {
 public:
  Commands(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int normalize() {
    const AlgebraConfig cfg(opt_.loops);
    return print_element(parse_element(opt_.expr_a, cfg));
  }

  int mul() {
    const AlgebraConfig cfg(opt_.loops);
    const Element a = parse_element(opt_.expr_a, cfg);
    const Element b = parse_element(opt_.expr_b, cfg);
    return print_element(multiply(cfg, a, b));
  }

  int derive() {
    const DerivationSpec d = load_derivation_file(opt_.deriv_path, Validation::Strict).spec;
    const Element x = parse_element(opt_.expr_a, d.config());
    return print_element(extend(d, x));
  }

  int ad_values() {
    const AlgebraConfig cfg(opt_.loops);
    const DerivationSpec d = ad(cfg, parse_element(opt_.expr_a, cfg));
    print_values(d);
    return kExitOk;
  }

  int check() {
    const DerivationSpec d = load_derivation_file(opt_.deriv_path, Validation::Lenient).spec;
    return print_report(check_relations(d), "all relations hold");
  }

  int genth_check() {
    const DerivationSpec d = load_derivation_file(opt_.deriv_path, Validation::Lenient).spec;
    return print_report(check_genth_equations(d), "all coefficient equations hold");
  }

  int obstructions() {
    const DerivationSpec d = load_derivation_file(opt_.deriv_path, Validation::Strict).spec;
    const bool trivial = !opt_.strict_omega;
    const ObstructionReport report = obstruction_coefficients(d, trivial);
    const Classification cls = classify_by_obstruction(d, trivial);
    if (opt_.json) {
      json entries = json::array();
      for (const ObstructionEntry& e : report.entries) {
        entries.push_back({{"family", to_string(e.family)},
                           {"word", to_string(BasisMonomial::path(e.word))},
                           {"value", rational_json(e.value)}});
      }
      out_ << json{{"include_trivial_p", trivial},
                   {"entries", entries},
                   {"classification", cls == Classification::InnerPerPaper ? "inner-per-paper"
                                                                           : "outer-per-paper"}}
                  .dump()
           << '\n';
    } else {
      for (const ObstructionEntry& e : report.entries) {
        out_ << to_string(e.family) << " at " << to_string(BasisMonomial::path(e.word)) << " = "
             << to_string(e.value) << '\n';
      }
      out_ << "classification: " << to_string(cls) << '\n';
    }
    return report.empty() ? kExitOk : kExitReport;
  }

  int witness() {
    const DerivationSpec d = load_derivation_file(opt_.deriv_path, Validation::Strict).spec;
    const std::optional<Element> lambda = find_inner_witness(d, opt_.max_len);
    if (opt_.json) {
      out_ << json{{"max_len", opt_.max_len},
                   {"witness", lambda ? terms_json(*lambda) : json(nullptr)}}
                  .dump()
           << '\n';
    } else if (lambda) {
      out_ << to_string(*lambda) << '\n';
    } else {
      out_ << "none up to " << opt_.max_len << '\n';
    }
    return lambda ? kExitOk : kExitReport;
  }

  int selfcheck() {
    const AlgebraConfig cfg(opt_.loops);
    const ConfluenceSummary summary =
        confluence_check(cfg, opt_.words, opt_.max_word_len, opt_.seed);
    const std::size_t overlap_count = overlap_words(cfg).size();
    const ViolationReport overlaps = check_overlaps(cfg);
    const bool ok = summary.mismatches.empty() && overlaps.empty();
    if (opt_.json) {
      json mismatches = json::array();
      for (const ConfluenceMismatch& m : summary.mismatches) {
        mismatches.push_back({{"word", to_string(m.word)},
                              {"seed", m.seed},
                              {"reduce_word", terms_json(m.expected)},
                              {"exhaustive_reduce", terms_json(m.actual)}});
      }
      json violations = json::array();
      for (const Violation& v : overlaps.violations) violations.push_back(violation_json(v));
      out_ << json{{"words_checked", summary.words_checked},
                   {"reductions_compared", summary.reductions_compared},
                   {"mismatches", mismatches},
                   {"overlap_words", overlap_count},
                   {"overlap_violations", violations}}
                  .dump()
           << '\n';
    } else {
      out_ << "confluence: " << summary.words_checked << " words, "
           << summary.reductions_compared << " randomized reductions, "
           << summary.mismatches.size() << " mismatches\n";
      for (const ConfluenceMismatch& m : summary.mismatches) {
        out_ << "  " << to_string(m.word) << " (seed " << m.seed << "): " << to_string(m.expected)
             << " vs " << to_string(m.actual) << '\n';
      }
      out_ << "overlaps: " << overlap_count << " words, " << overlaps.size() << " violations\n";
      for (const Violation& v : overlaps.violations) out_ << "  " << describe(v) << '\n';
    }
    return ok ? kExitOk : kExitReport;
  }

 private:
  int print_element(const Element& x) {
    if (opt_.json) {
      out_ << json{{"result", terms_json(x)}}.dump() << '\n';
    } else {
      out_ << to_string(x) << '\n';
    }
    return kExitOk;
  }

  void print_values(const DerivationSpec& d) {
    const std::vector<Generator> gens = edge_generators(d.config());
    if (opt_.json) {
      json values = json::object();
      for (const Generator& g : gens) values[generator_name(g)] = terms_json(d.value(g));
      out_ << json{{"values", values}}.dump() << '\n';
      return;
    }
    for (const Generator& g : gens) {
      out_ << "D(" << generator_name(g) << ") = " << to_string(d.value(g)) << '\n';
    }
  }

  int print_report(const ViolationReport& report, const char* ok_message) {
    if (opt_.json) {
      json violations = json::array();
      for (const Violation& v : report.violations) violations.push_back(violation_json(v));
      out_ << json{{"violations", violations}}.dump() << '\n';
    } else if (report.empty()) {
      out_ << "ok: " << ok_message << '\n';
    } else {
      for (const Violation& v : report.violations) out_ << describe(v) << '\n';
    }
    return report.empty() ? kExitOk : kExitReport;
  }

  const Options& opt_;
  std::ostream& out_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic computation in the Leavitt path algebra W(l)", "leavitt"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");

  auto loops_option = [&](CLI::App* sub) {
    sub->add_option("--loops", opt.loops, "Number of loops l")->required()->check(
        CLI::PositiveNumber);
  };
  auto deriv_option = [&](CLI::App* sub) {
    sub->add_option("--deriv", opt.deriv_path, "Derivation file (JSON)")->required();
  };

  CLI::App* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
  loops_option(normalize);
  normalize->add_option("expr", opt.expr_a)->required();

  CLI::App* mul = app.add_subcommand("mul", "Multiply two expressions");
  loops_option(mul);
  mul->add_option("a", opt.expr_a)->required();
  mul->add_option("b", opt.expr_b)->required();

  CLI::App* derive = app.add_subcommand("derive", "Apply a derivation to an expression");
  deriv_option(derive);
  derive->add_option("expr", opt.expr_a)->required();

  CLI::App* ad_cmd = app.add_subcommand("ad", "Values of the inner derivation ad_lambda");
  loops_option(ad_cmd);
  ad_cmd->add_option("lambda", opt.expr_a)->required();

  CLI::App* check = app.add_subcommand("check", "Check the defining relations");
  deriv_option(check);

  CLI::App* genth = app.add_subcommand("genth-check", "Check the coefficient equations");
  deriv_option(genth);

  CLI::App* obstructions =
      app.add_subcommand("obstructions", "Obstruction coefficients and classification");
  deriv_option(obstructions);
  obstructions->add_flag("--strict-omega", opt.strict_omega,
                         "Exclude the trivial path (index word e1 e1)");

  CLI::App* witness = app.add_subcommand("witness", "Search for lambda with ad_lambda = D");
  deriv_option(witness);
  witness->add_option("--max-len", opt.max_len, "Largest monomial length in lambda")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "Cross-check the rewriting system");
  loops_option(selfcheck);
  selfcheck->add_option("--words", opt.words, "Random words to test");
  selfcheck->add_option("--max-word-len", opt.max_word_len, "Longest random word");
  selfcheck->add_option("--seed", opt.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Commands commands(opt, out);
  try {
    if (*normalize) return commands.normalize();
    if (*mul) return commands.mul();
    if (*derive) return commands.derive();
    if (*ad_cmd) return commands.ad_values();
    if (*check) return commands.check();
    if (*genth) return commands.genth_check();
    if (*obstructions) return commands.obstructions();
    if (*witness) return commands.witness();
    if (*selfcheck) return commands.selfcheck();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidDerivation& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"leavitt"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace leavitt::cli
