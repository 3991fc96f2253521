#pragma once

// Elements of W(l), the Leavitt path algebra of the one-vertex graph with l
// loops e_1..e_l, kept in normal form with respect to the rewriting system
//
//   vv = v,  ve = ev = e,  ve* = e*v = e*,
//   e_i* e_j = delta_ij v,
//   e_1 e_1* = v - sum_{k>=2} e_k e_k*.
//
// Irreducible words are v, paths p, dual paths p*, and mixed words w h* whose
// junction e_n f_m* is not e_1 e_1*. e_1 is always the special edge.

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "leavitt/errors.hpp"

namespace leavitt {

using Rational = mpq_class;

/// Sequence of edge indices, each in 1..loops, read left to right.
using EdgePath = std::vector<int>;

class AlgebraConfig {
 public:
  static constexpr int kSpecialIndex = 1;

  explicit AlgebraConfig(int loops) : loops_(loops) {
    if (loops < 1) throw ConfigError("loops must be >= 1");
  }

  int loops() const noexcept { return loops_; }
  int special_index() const noexcept { return kSpecialIndex; }
  bool valid_index(int i) const noexcept { return i >= 1 && i <= loops_; }
  void require_index(int i) const;

  friend bool operator==(const AlgebraConfig&, const AlgebraConfig&) = default;

 private:
  int loops_;
};

enum class GeneratorKind : std::uint8_t { Vertex, Edge, DualEdge };

struct Generator {
  GeneratorKind kind = GeneratorKind::Vertex;
  int index = 0;  // 0 for the vertex

  static constexpr Generator vertex() { return {GeneratorKind::Vertex, 0}; }
  static constexpr Generator edge(int i) { return {GeneratorKind::Edge, i}; }
  static constexpr Generator dual(int i) { return {GeneratorKind::DualEdge, i}; }

  friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
};

/// Unreduced free-monoid word; the empty word stands for v.
using Word = std::vector<Generator>;

/// The 2l generators other than v, in the order e_1..e_l, e_1*..e_l*.
std::vector<Generator> edge_generators(const AlgebraConfig& cfg);

enum class MonomialClass : std::uint8_t { Vertex = 0, Path = 1, DualPath = 2, Mixed = 3 };

/// A normal-form basis word w h*. The class is determined by which halves are
/// empty: (empty, empty) is v, (p, empty) a path, (empty, p) the dual path p*
/// and (w, h) the mixed word w h*. h is stored forward, so h* spells
/// e_{h_m}* ... e_{h_1}*.
class BasisMonomial {
 public:
  BasisMonomial() = default;

  static BasisMonomial vertex() { return {}; }
  static BasisMonomial path(EdgePath p);
  static BasisMonomial dual_path(EdgePath p);
  static BasisMonomial mixed(EdgePath w, EdgePath h);
  /// Builds whichever class (w, h) describes; throws on the excluded junction.
  static BasisMonomial from_parts(EdgePath w, EdgePath h);

  MonomialClass monomial_class() const noexcept;
  const EdgePath& w() const noexcept { return w_; }
  const EdgePath& h() const noexcept { return h_; }
  std::size_t length() const noexcept { return w_.size() + h_.size(); }

  /// The word w h* letter by letter.
  Word spelling() const;

  /// Canonical order: length, then class, then (w, h) lexicographically with
  /// e_1 first.
  friend std::strong_ordering operator<=>(const BasisMonomial& a, const BasisMonomial& b);
  friend bool operator==(const BasisMonomial&, const BasisMonomial&) = default;

 private:
  BasisMonomial(EdgePath w, EdgePath h) : w_(std::move(w)), h_(std::move(h)) {}

  EdgePath w_;
  EdgePath h_;
};

/// Finite exact-rational combination of basis monomials with no zero entries.
class Element {
 public:
  using Terms = std::map<BasisMonomial, Rational>;

  Element() = default;
  explicit Element(const BasisMonomial& m, const Rational& c = 1);

  static Element zero() { return {}; }
  static Element unit() { return Element(BasisMonomial::vertex()); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coefficient(const BasisMonomial& m) const;
  /// Longest monomial, 0 for the zero element.
  std::size_t max_length() const noexcept;

  /// this += c * m
  void add_term(const BasisMonomial& m, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element scale(const Rational& c, const Element& a) { return c * a; }

/// Normal form of a word. Throws ConfigError on an index outside 1..loops.
Element reduce_word(const AlgebraConfig& cfg, const Word& word);

Element multiply(const AlgebraConfig& cfg, const BasisMonomial& a, const BasisMonomial& b);
Element multiply(const AlgebraConfig& cfg, const Element& a, const Element& b);
Element multiply(const AlgebraConfig& cfg, const Element& a, const Generator& g);
Element multiply(const AlgebraConfig& cfg, const Generator& g, const Element& a);

/// True iff the word, read literally, is one of the basis words.
bool is_basis_monomial(const AlgebraConfig& cfg, const Word& word);

/// All basis monomials of letter length <= max_len in canonical order.
std::vector<BasisMonomial> enumerate_basis(const AlgebraConfig& cfg, std::size_t max_len);

/// Throws ConfigError unless every index used by the element is in range.
void require_in_algebra(const AlgebraConfig& cfg, const Element& x);

}  // namespace leavitt
