#include "leavitt/printing.hpp"

namespace leavitt {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Vertex:
      return "v";
    case GeneratorKind::Edge:
      return "e" + std::to_string(g.index);
    case GeneratorKind::DualEdge:
      return "e" + std::to_string(g.index) + "'";
  }
  return "?";
}

std::string to_string(const Word& word) {
  if (word.empty()) return "v";
  std::string out;
  for (const Generator& g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const BasisMonomial& m) { return to_string(m.spelling()); }

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      out += to_string(magnitude);
      out += ' ';
    }
    out += to_string(m);
    first = false;
  }
  return out;
}

}  // namespace leavitt
