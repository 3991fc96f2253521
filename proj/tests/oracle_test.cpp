#include <gtest/gtest.h>

#include <random>

#include "leavitt/expression.hpp"
#include "leavitt/oracle.hpp"
#include "leavitt/printing.hpp"

namespace leavitt {
namespace {

constexpr Generator v = Generator::vertex();
Generator e(int i) { return Generator::edge(i); }
Generator s(int i) { return Generator::dual(i); }

TEST(Rules, ApplicabilityAndReplacement) {
  const AlgebraConfig two(2);
  const Word word{s(1), e(1), s(1)};
  const auto apps = applicable_rules(two, word);
  ASSERT_EQ(apps.size(), 2u);
  EXPECT_EQ(apps[0].rule, RuleId::DualEdge);
  EXPECT_EQ(apps[0].position, 0u);
  EXPECT_EQ(apps[1].rule, RuleId::SumOfSquares);
  EXPECT_EQ(apps[1].position, 1u);
  const auto left = apply_rule(word, apps[0]);
  ASSERT_EQ(left.size(), 1u);
  EXPECT_EQ(left[0].first, (Word{v, s(1)}));
  EXPECT_EQ(apply_rule(word, apps[1]).size(), 2u);
  EXPECT_TRUE(applicable_rules(two, {e(1), e(2), s(2)}).empty());
  EXPECT_TRUE(applicable_rules(two, {v}).empty());
}

TEST(ExhaustiveReduce, Examples) {
  const AlgebraConfig two(2);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(exhaustive_reduce(two, {e(1), s(1)}, seed), parse_element("v - e2 e2'", two));
    EXPECT_EQ(exhaustive_reduce(two, {s(1), e(1), s(1)}, seed), parse_element("e1'", two));
    EXPECT_EQ(exhaustive_reduce(AlgebraConfig(1), {s(1), e(1), s(1)}, seed),
              parse_element("e1'", AlgebraConfig(1)));
    EXPECT_EQ(exhaustive_reduce(two, {v, v, v}, seed), Element::unit());
  }
  for (const auto& m : enumerate_basis(two, 3)) {
    ASSERT_EQ(exhaustive_reduce(two, m.spelling(), 3), Element(m));
  }
}

TEST(ExhaustiveReduce, BudgetOverflowIsReported) {
  const Word word{e(1), e(1), e(1), s(1), s(1), s(1)};
  EXPECT_THROW(exhaustive_reduce(AlgebraConfig(3), word, 1, 2), TerminationDefect);
}

TEST(Overlaps, WordsAndReport) {
  EXPECT_EQ(overlap_words(AlgebraConfig(3)).size(), 81u);
  for (int l = 1; l <= 4; ++l) EXPECT_TRUE(check_overlaps(AlgebraConfig(l)).empty()) << l;
  for (const auto& w : overlap_words(AlgebraConfig(2))) {
    ASSERT_EQ(w.size(), 3u);
    bool left = false;
    bool right = false;
    for (const auto& a : applicable_rules(AlgebraConfig(2), w)) {
      left = left || a.position == 0;
      right = right || a.position == 1;
    }
    ASSERT_TRUE(left && right) << to_string(w);
  }
}

TEST(Confluence, RandomWordsAgreeWithReduction) {
  for (int l = 1; l <= 3; ++l) {
    const ConfluenceSummary summary = confluence_check(AlgebraConfig(l), 200, 8, 40 + l);
    EXPECT_EQ(summary.words_checked, 200u);
    EXPECT_EQ(summary.reductions_compared, 1000u);
    EXPECT_TRUE(summary.mismatches.empty());
  }
}

TEST(RandomWord, RespectsBounds) {
  std::mt19937_64 rng(5);
  const AlgebraConfig two(2);
  bool saw_empty = false;
  for (int n = 0; n < 500; ++n) {
    const Word w = random_word(two, 4, rng);
    ASSERT_LE(w.size(), 4u);
    saw_empty = saw_empty || w.empty();
    for (const auto& g : w) ASSERT_TRUE(g.kind == GeneratorKind::Vertex || two.valid_index(g.index));
  }
  EXPECT_TRUE(saw_empty);
}

}  // namespace
}  // namespace leavitt
