#include "leavitt/oracle.hpp"

#include <stdexcept>
#include <string>

#include "leavitt/printing.hpp"

namespace leavitt {

namespace {

bool is_vertex(const Generator& g) { return g.kind == GeneratorKind::Vertex; }
bool is_edge(const Generator& g) { return g.kind == GeneratorKind::Edge; }
bool is_dual(const Generator& g) { return g.kind == GeneratorKind::DualEdge; }

BasisMonomial monomial_of_normal_word(const Word& word) {
  if (word.size() == 1 && is_vertex(word.front())) return BasisMonomial::vertex();
  EdgePath w;
  EdgePath h;
  for (const Generator& g : word) {
    if (is_edge(g) && h.empty()) {
      w.push_back(g.index);
    } else if (is_dual(g)) {
      h.insert(h.begin(), g.index);
    } else {
      throw std::logic_error("irreducible word " + to_string(word) + " is not a basis word");
    }
  }
  return BasisMonomial::from_parts(std::move(w), std::move(h));
}

}  // namespace

std::vector<RuleApplication> applicable_rules(const AlgebraConfig& cfg, const Word& word) {
  constexpr int special = AlgebraConfig::kSpecialIndex;
  std::vector<RuleApplication> apps;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const Generator& a = word[k];
    const Generator& b = word[k + 1];
    if (is_vertex(a) && is_vertex(b)) {
      apps.push_back({RuleId::VertexVertex, k, {{Word{a}, 1}}});
    } else if (is_vertex(a) || is_vertex(b)) {
      const Generator& other = is_vertex(a) ? b : a;
      const RuleId id = is_edge(other) ? RuleId::VertexEdge : RuleId::VertexDual;
      apps.push_back({id, k, {{Word{other}, 1}}});
    } else if (is_dual(a) && is_edge(b)) {
      RuleApplication app{RuleId::DualEdge, k, {}};
      if (a.index == b.index) app.replacement.emplace_back(Word{Generator::vertex()}, 1);
      apps.push_back(std::move(app));
    } else if (is_edge(a) && is_dual(b) && a.index == special && b.index == special) {
      RuleApplication app{RuleId::SumOfSquares, k, {{Word{Generator::vertex()}, 1}}};
      for (int e = special + 1; e <= cfg.loops(); ++e) {
        app.replacement.emplace_back(Word{Generator::edge(e), Generator::dual(e)}, -1);
      }
      apps.push_back(std::move(app));
    }
  }
  return apps;
}

std::vector<std::pair<Word, Rational>> apply_rule(const Word& word, const RuleApplication& app) {
  std::vector<std::pair<Word, Rational>> out;
  const auto pos = static_cast<std::ptrdiff_t>(app.position);
  for (const auto& [middle, c] : app.replacement) {
    Word next(word.begin(), word.begin() + pos);
    next.insert(next.end(), middle.begin(), middle.end());
    next.insert(next.end(), word.begin() + pos + 2, word.end());
    out.emplace_back(std::move(next), c);
  }
  return out;
}

Element exhaustive_reduce(const AlgebraConfig& cfg, const Word& word, std::uint64_t rng_seed,
                          std::uint64_t step_budget) {
  for (const Generator& g : word) {
    if (!is_vertex(g)) cfg.require_index(g.index);
  }
  std::mt19937_64 rng(rng_seed);
  std::vector<std::pair<Word, Rational>> pending;
  pending.emplace_back(word.empty() ? Word{Generator::vertex()} : word, 1);
  Element result;
  std::uint64_t steps = 0;
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
    const std::size_t k = pick(rng);
    std::swap(pending[k], pending.back());
    auto [current, coeff] = std::move(pending.back());
    pending.pop_back();

    const std::vector<RuleApplication> apps = applicable_rules(cfg, current);
    if (apps.empty()) {
      result.add_term(monomial_of_normal_word(current), coeff);
      continue;
    }
    if (++steps > step_budget) {
      throw TerminationDefect("rewriting " + to_string(word) + " exceeded " +
                              std::to_string(step_budget) + " steps");
    }
    std::uniform_int_distribution<std::size_t> choose(0, apps.size() - 1);
    for (auto& [next, c] : apply_rule(current, apps[choose(rng)])) {
      pending.emplace_back(std::move(next), coeff * c);
    }
  }
  return result;
}

namespace {

std::vector<Generator> alphabet(const AlgebraConfig& cfg) {
  std::vector<Generator> letters{Generator::vertex()};
  for (const Generator& g : edge_generators(cfg)) letters.push_back(g);
  return letters;
}

Element normalize_after(const AlgebraConfig& cfg, const Word& word, const RuleApplication& app) {
  Element out;
  for (const auto& [next, c] : apply_rule(word, app)) out += c * reduce_word(cfg, next);
  return out;
}

}  // namespace

std::vector<Word> overlap_words(const AlgebraConfig& cfg) {
  const std::vector<Generator> letters = alphabet(cfg);
  std::vector<Word> words;
  for (const Generator& a : letters) {
    for (const Generator& b : letters) {
      for (const Generator& c : letters) {
        Word word{a, b, c};
        bool left = false;
        bool right = false;
        for (const RuleApplication& app : applicable_rules(cfg, word)) {
          (app.position == 0 ? left : right) = true;
        }
        if (left && right) words.push_back(std::move(word));
      }
    }
  }
  return words;
}

ViolationReport check_overlaps(const AlgebraConfig& cfg) {
  ViolationReport report;
  for (const Word& word : overlap_words(cfg)) {
    const std::vector<RuleApplication> apps = applicable_rules(cfg, word);
    const Element via_left = normalize_after(cfg, word, apps.front());
    const Element via_right = normalize_after(cfg, word, apps.back());
    if (!(via_left == via_right)) {
      report.violations.push_back({"overlap", {}, std::nullopt, word, via_left - via_right});
    }
  }
  return report;
}

Word random_word(const AlgebraConfig& cfg, std::size_t max_len, std::mt19937_64& rng) {
  const std::vector<Generator> letters = alphabet(cfg);
  std::uniform_int_distribution<std::size_t> length(0, max_len);
  std::uniform_int_distribution<std::size_t> letter(0, letters.size() - 1);
  Word word(length(rng));
  for (Generator& g : word) g = letters[letter(rng)];
  return word;
}

ConfluenceSummary confluence_check(const AlgebraConfig& cfg, std::size_t words,
                                   std::size_t max_word_len, std::uint64_t seed,
                                   std::size_t seeds_per_word) {
  std::mt19937_64 rng(seed);
  ConfluenceSummary summary;
  for (std::size_t n = 0; n < words; ++n) {
    const Word word = random_word(cfg, max_word_len, rng);
    const Element expected = reduce_word(cfg, word);
    for (std::size_t s = 0; s < seeds_per_word; ++s) {
      const std::uint64_t reduce_seed = rng();
      Element actual = exhaustive_reduce(cfg, word, reduce_seed);
      ++summary.reductions_compared;
      if (!(actual == expected)) {
        summary.mismatches.push_back({word, reduce_seed, expected, std::move(actual)});
      }
    }
    ++summary.words_checked;
  }
  return summary;
}

}  // namespace leavitt
