#pragma once

#include <ostream>
#include <string>

#include "leavitt/algebra.hpp"

namespace leavitt {

/// "p/q" in lowest terms with q > 0; integers without "/1".
std::string to_string(const Rational& q);

/// "v", "e3" or "e3'".
std::string to_string(const Generator& g);

/// Factors separated by single spaces; the empty word prints as "v".
std::string to_string(const Word& word);

/// Spelling of w h* with h* reversed and primed, e.g. "e2 e2 e2' e1'" for
/// w = e2e2, h = e1e2.
std::string to_string(const BasisMonomial& m);

/// Canonical form, e.g. "v - e2 e2'", "3/2 e2 e1'", or "0". Parses back to the
/// same element.
std::string to_string(const Element& x);

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const BasisMonomial& m) {
  return os << to_string(m);
}

}  // namespace leavitt
