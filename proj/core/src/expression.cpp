#include "leavitt/expression.hpp"

#include <cctype>
#include <string>

namespace leavitt {

namespace {

class Parser {
 public:
  Parser(std::string_view src, const AlgebraConfig& cfg) : src_(src), cfg_(cfg) {}

  Expression run() {
    Expression expr;
    skip_space();
    if (at_end()) fail("empty expression");
    Rational sign = 1;
    if (peek() == '+' || peek() == '-') {
      if (peek() == '-') sign = -1;
      advance();
    }
    expr.terms.push_back(term(sign));
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail(std::string("unexpected '") + peek() + "'");
      sign = peek() == '-' ? -1 : 1;
      advance();
      expr.terms.push_back(term(sign));
    }
    return expr;
  }

 private:
  ExpressionTerm term(const Rational& sign) {
    ExpressionTerm t;
    t.coefficient = sign;
    skip_space();
    if (at_end()) fail("expected a term");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coefficient *= rational();
      skip_space();
      if (!at_end() && peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !starts_factor()) fail("expected a factor after '*'");
      }
      if (at_end() || !starts_factor()) return t;
    } else if (!starts_factor()) {
      fail(std::string("unexpected '") + peek() + "'");
    }
    t.factors.push_back(factor());
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '*') {
        advance();
        skip_space();
        if (at_end() || !starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      t.factors.push_back(factor());
    }
    return t;
  }

  Rational rational() {
    mpz_class num(digits());
    mpz_class den = 1;
    skip_space();
    if (!at_end() && peek() == '/') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected a denominator");
      }
      const std::size_t where = pos_;
      den = mpz_class(digits());
      if (den == 0) fail_at("zero denominator", where);
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  Generator factor() {
    const std::size_t where = pos_;
    if (peek() == 'v') {
      advance();
      return Generator::vertex();
    }
    advance();  // 'e'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an edge index after 'e'");
    }
    const std::string idx = digits();
    if (idx.size() > 9 || !cfg_.valid_index(std::stoi(idx))) {
      const auto [line, col] = location(where);
      throw ConfigError("edge index e" + idx + " outside 1.." + std::to_string(cfg_.loops()) +
                        " at line " + std::to_string(line) + ", column " +
                        std::to_string(col));
    }
    const int index = std::stoi(idx);
    if (!at_end() && peek() == '\'') {
      advance();
      return Generator::dual(index);
    }
    return Generator::edge(index);
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      out += peek();
      advance();
    }
    return out;
  }

  bool starts_factor() const { return peek() == 'v' || peek() == 'e'; }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void advance() { ++pos_; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  std::pair<std::size_t, std::size_t> location(std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    const auto [line, col] = location(at);
    throw ParseError("syntax error: " + msg, line, col);
  }

  std::string_view src_;
  const AlgebraConfig& cfg_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view source, const AlgebraConfig& cfg) {
  return Parser(source, cfg).run();
}

Element lower(const AlgebraConfig& cfg, const Expression& expr) {
  Element out;
  for (const ExpressionTerm& t : expr.terms) {
    out += t.coefficient * reduce_word(cfg, t.factors);
  }
  return out;
}

}  // namespace leavitt
