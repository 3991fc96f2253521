#pragma once

// Brute-force cross-checks for the rewriting system: reduction in random
// order, and the overlap (composition) check on short words.

#include <cstdint>
#include <random>
#include <vector>

#include "leavitt/algebra.hpp"
#include "leavitt/derivation.hpp"

namespace leavitt {

enum class RuleId : std::uint8_t {
  VertexVertex = 1,  // vv = v
  VertexEdge = 2,    // ve = ev = e
  VertexDual = 3,    // ve* = e*v = e*
  DualEdge = 4,      // e_i* e_j = delta_ij v
  SumOfSquares = 5,  // e_1 e_1* = v - sum_{k>=2} e_k e_k*
};

struct RuleApplication {
  RuleId rule;
  std::size_t position;  // rewrites word[position], word[position + 1]
  std::vector<std::pair<Word, Rational>> replacement;
};

/// Every rule application that matches somewhere in `word`.
std::vector<RuleApplication> applicable_rules(const AlgebraConfig& cfg, const Word& word);

/// Linear combination of words obtained by applying `app` to `word`.
std::vector<std::pair<Word, Rational>> apply_rule(const Word& word, const RuleApplication& app);

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

/// Rewrites in a seed-determined random order (random summand, random
/// applicable rule) until no rule applies. Throws TerminationDefect if more
/// than `step_budget` rewrites are needed.
Element exhaustive_reduce(const AlgebraConfig& cfg, const Word& word, std::uint64_t rng_seed,
                          std::uint64_t step_budget = kDefaultStepBudget);

/// Length-3 words on which two rule left-hand sides overlap.
std::vector<Word> overlap_words(const AlgebraConfig& cfg);

/// For each overlap word, rewrites at the left and at the right site first,
/// normalizes both, and reports disagreements (equation id "overlap").
ViolationReport check_overlaps(const AlgebraConfig& cfg);

/// Uniform random word over {v, e_i, e_i*} with length in [0, max_len].
Word random_word(const AlgebraConfig& cfg, std::size_t max_len, std::mt19937_64& rng);

struct ConfluenceMismatch {
  Word word;
  std::uint64_t seed;
  Element expected;  // reduce_word
  Element actual;    // exhaustive_reduce
};

struct ConfluenceSummary {
  std::size_t words_checked = 0;
  std::size_t reductions_compared = 0;
  std::vector<ConfluenceMismatch> mismatches;
};

/// `words` random words (lengths <= max_word_len) drawn from `seed`, each
/// reduced by exhaustive_reduce under `seeds_per_word` seeds and compared
/// with reduce_word.
ConfluenceSummary confluence_check(const AlgebraConfig& cfg, std::size_t words,
                                   std::size_t max_word_len, std::uint64_t seed,
                                   std::size_t seeds_per_word = 5);

}  // namespace leavitt
