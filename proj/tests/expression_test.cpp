#include <gtest/gtest.h>

#include <random>

#include "leavitt/expression.hpp"
#include "leavitt/printing.hpp"
#include "support/random_elements.hpp"

namespace leavitt {
namespace {

const AlgebraConfig kTwo(2);

Element mono(EdgePath w, EdgePath h, const Rational& c = 1) {
  return Element(BasisMonomial::from_parts(std::move(w), std::move(h)), c);
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_element("v", kTwo), Element::unit());
  EXPECT_EQ(parse_element("e1*e1'", kTwo), Element::unit() - mono({2}, {2}));
  EXPECT_EQ(parse_element("3/2*e2 e1' - v", kTwo), mono({2}, {1}, Rational(3, 2)) - Element::unit());
  EXPECT_TRUE(parse_element("0", kTwo).is_zero());
}

TEST(Parse, SurfaceForms) {
  EXPECT_EQ(parse_element("  -e1  ", kTwo), mono({1}, {}, -1));
  EXPECT_EQ(parse_element("2 e1 + e1", kTwo), mono({1}, {}, 3));
  EXPECT_EQ(parse_element("4/6 v", kTwo), Element(BasisMonomial::vertex(), Rational(2, 3)));
  EXPECT_EQ(parse_element("2", kTwo), Element(BasisMonomial::vertex(), 2));
  EXPECT_EQ(parse_element("e1 v e2", kTwo), mono({1, 2}, {}));
  EXPECT_EQ(parse_element("e2'\n  e1'", kTwo), mono({}, {1, 2}));
  EXPECT_TRUE(parse_element("e1' e2", kTwo).is_zero());
}

TEST(Parse, TermStructure) {
  const Expression expr = parse("3/2*e2 e1' - v", kTwo);
  ASSERT_EQ(expr.terms.size(), 2u);
  EXPECT_EQ(expr.terms[0].coefficient, Rational(3, 2));
  EXPECT_EQ(expr.terms[0].factors, (Word{Generator::edge(2), Generator::dual(1)}));
  EXPECT_EQ(expr.terms[1].coefficient, -1);
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse("e1 +\n  * e2", kTwo);
    FAIL() << "expected ParseError";
  } catch (const ParseError& err) {
    EXPECT_EQ(err.line(), 2u);
    EXPECT_EQ(err.column(), 3u);
  }
  EXPECT_THROW(parse("", kTwo), ParseError);
  EXPECT_THROW(parse("e", kTwo), ParseError);
  EXPECT_THROW(parse("1/0 v", kTwo), ParseError);
  EXPECT_THROW(parse("e1 +", kTwo), ParseError);
  EXPECT_THROW(parse("x", kTwo), ParseError);
  EXPECT_THROW(parse("e1 2", kTwo), ParseError);
  EXPECT_THROW(parse("3 *", kTwo), ParseError);
}

TEST(Parse, IndexOutOfRange) {
  EXPECT_THROW(parse("e5", kTwo), ConfigError);
  EXPECT_THROW(parse("e0'", kTwo), ConfigError);
  EXPECT_NO_THROW(parse("e5", AlgebraConfig(5)));
}

TEST(Print, Examples) {
  EXPECT_EQ(to_string(Element{}), "0");
  EXPECT_EQ(to_string(Element::unit() - mono({2}, {2})), "v - e2 e2'");
  EXPECT_EQ(to_string(mono({}, {1, 1})), "e1' e1'");
  EXPECT_EQ(to_string(mono({2, 2}, {1, 2})), "e2 e2 e2' e1'");
  EXPECT_EQ(to_string(mono({1}, {}, Rational(-3, 2))), "-3/2 e1");
  EXPECT_EQ(to_string(Element(BasisMonomial::vertex(), 2)), "2 v");
}

TEST(Print, RationalFormatting) {
  Rational q(6, -4);
  q.canonicalize();
  EXPECT_EQ(to_string(q), "-3/2");
  Rational r(8, 4);
  r.canonicalize();
  EXPECT_EQ(to_string(r), "2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Print, CanonicalOrder) {
  // Shorter first, then class (v, paths, dual paths, mixed), e1 before e2.
  const Element x = mono({2}, {1}) + mono({}, {2}) + mono({2}, {}) + mono({1}, {}) +
                    Element::unit() + mono({}, {1});
  EXPECT_EQ(to_string(x), "v + e1 + e2 + e1' + e2' + e2 e1'");
}

TEST(ParsePrint, RoundTripOnCanonicalElements) {
  std::mt19937_64 rng(99);
  for (int l = 1; l <= 3; ++l) {
    const AlgebraConfig cfg(l);
    for (int n = 0; n < 200; ++n) {
      const Element x = testing::random_element(cfg, 5, rng, 5);
      ASSERT_EQ(parse_element(to_string(x), cfg), x) << to_string(x);
    }
  }
}

TEST(ParsePrint, PrintLowerParseIsIdempotent) {
  for (const char* src : {"e1 e1' e1 e1' + 2/4 e2' e2", "e2 e1 e1' e1' - 3", "v v v - e1'e1"}) {
    const std::string once = to_string(parse_element(src, kTwo));
    EXPECT_EQ(to_string(parse_element(once, kTwo)), once);
  }
}

}  // namespace
}  // namespace leavitt
