#pragma once

// Surface syntax for elements of W(l):
//
//   expr     := [sign] term (('+' | '-') term)*
//   term     := rational ['*'] factor {['*'] factor}
//             | factor {['*'] factor}
//             | rational                      (a multiple of v; "0" is zero)
//   rational := digits ['/' digits]           (denominator > 0)
//   factor   := 'v' | 'e' digits ['\'']       (apostrophe marks the dual edge)
//
// Whitespace is insignificant. "e1*e1'" is the product e1 e1*.

#include <string_view>
#include <vector>

#include "leavitt/algebra.hpp"

namespace leavitt {

struct ExpressionTerm {
  Rational coefficient{1};
  Word factors;  // empty for a bare scalar, which means coefficient * v
};

struct Expression {
  std::vector<ExpressionTerm> terms;
};

/// Throws ParseError (with line/column) on bad syntax and ConfigError when an
/// edge index falls outside 1..loops.
Expression parse(std::string_view source, const AlgebraConfig& cfg);

/// Reduces each term's word and sums the results.
Element lower(const AlgebraConfig& cfg, const Expression& expr);

inline Element parse_element(std::string_view source, const AlgebraConfig& cfg) {
  return lower(cfg, parse(source, cfg));
}

}  // namespace leavitt
