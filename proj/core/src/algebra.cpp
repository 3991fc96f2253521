#include "leavitt/algebra.hpp"

#include <algorithm>
#include <string>

namespace leavitt {

void AlgebraConfig::require_index(int i) const {
  if (!valid_index(i)) {
    throw ConfigError("edge index " + std::to_string(i) + " outside 1.." +
                      std::to_string(loops_));
  }
}

std::vector<Generator> edge_generators(const AlgebraConfig& cfg) {
  std::vector<Generator> gens;
  gens.reserve(2 * static_cast<std::size_t>(cfg.loops()));
  for (int i = 1; i <= cfg.loops(); ++i) gens.push_back(Generator::edge(i));
  for (int i = 1; i <= cfg.loops(); ++i) gens.push_back(Generator::dual(i));
  return gens;
}

// ---------------------------------------------------------------------------
// BasisMonomial

namespace {

bool special_junction(const EdgePath& w, const EdgePath& h) {
  return !w.empty() && !h.empty() && w.back() == AlgebraConfig::kSpecialIndex &&
         h.back() == AlgebraConfig::kSpecialIndex;
}

}  // namespace

BasisMonomial BasisMonomial::path(EdgePath p) {
  if (p.empty()) throw std::invalid_argument("path must be nonempty");
  return {std::move(p), {}};
}

BasisMonomial BasisMonomial::dual_path(EdgePath p) {
  if (p.empty()) throw std::invalid_argument("dual path must be nonempty");
  return {{}, std::move(p)};
}

BasisMonomial BasisMonomial::mixed(EdgePath w, EdgePath h) {
  if (w.empty() || h.empty()) throw std::invalid_argument("mixed word needs both halves");
  return from_parts(std::move(w), std::move(h));
}

BasisMonomial BasisMonomial::from_parts(EdgePath w, EdgePath h) {
  if (special_junction(w, h)) {
    throw std::invalid_argument("w h* with junction e1 e1* is not a basis word");
  }
  return {std::move(w), std::move(h)};
}

MonomialClass BasisMonomial::monomial_class() const noexcept {
  if (w_.empty()) return h_.empty() ? MonomialClass::Vertex : MonomialClass::DualPath;
  return h_.empty() ? MonomialClass::Path : MonomialClass::Mixed;
}

Word BasisMonomial::spelling() const {
  Word word;
  word.reserve(length());
  for (int e : w_) word.push_back(Generator::edge(e));
  for (auto it = h_.rbegin(); it != h_.rend(); ++it) word.push_back(Generator::dual(*it));
  return word;
}

std::strong_ordering operator<=>(const BasisMonomial& a, const BasisMonomial& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.monomial_class() <=> b.monomial_class(); c != 0) return c;
  if (auto c = a.w_ <=> b.w_; c != 0) return c;
  return a.h_ <=> b.h_;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(const BasisMonomial& m, const Rational& c) { add_term(m, c); }

Rational Element::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Element::max_length() const noexcept {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.length());
  return n;
}

void Element::add_term(const BasisMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Element& Element::operator+=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Reduction

namespace {

// Adds coeff * w h* to out, where w is a path and h* a dual path, expanding
// every e_1 e_1* junction via e_1 e_1* = v - sum_{k>=2} e_k e_k*.
void accumulate_edges_duals(const AlgebraConfig& cfg, EdgePath w, EdgePath h,
                            const Rational& coeff, Element& out) {
  constexpr int special = AlgebraConfig::kSpecialIndex;
  while (special_junction(w, h)) {
    w.pop_back();
    h.pop_back();
    for (int k = special + 1; k <= cfg.loops(); ++k) {
      EdgePath wk = w;
      EdgePath hk = h;
      wk.push_back(k);
      hk.push_back(k);
      out.add_term(BasisMonomial::from_parts(std::move(wk), std::move(hk)), -coeff);
    }
  }
  out.add_term(BasisMonomial::from_parts(std::move(w), std::move(h)), coeff);
}

// Product of w1 h1* and w2 h2*: the inner h1* w2 cancels letter by letter.
void accumulate_product(const AlgebraConfig& cfg, const BasisMonomial& a,
                        const BasisMonomial& b, const Rational& coeff, Element& out) {
  const EdgePath& h1 = a.h();
  const EdgePath& w2 = b.w();
  const std::size_t common = std::min(h1.size(), w2.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (h1[k] != w2[k]) return;
  }
  EdgePath w = a.w();
  EdgePath h = b.h();
  if (h1.size() > common) {
    h.insert(h.end(), h1.begin() + static_cast<std::ptrdiff_t>(common), h1.end());
  } else {
    w.insert(w.end(), w2.begin() + static_cast<std::ptrdiff_t>(common), w2.end());
  }
  accumulate_edges_duals(cfg, std::move(w), std::move(h), coeff, out);
}

void require_word(const AlgebraConfig& cfg, const Word& word) {
  for (const Generator& g : word) {
    if (g.kind != GeneratorKind::Vertex) cfg.require_index(g.index);
  }
}

}  // namespace

Element reduce_word(const AlgebraConfig& cfg, const Word& word) {
  require_word(cfg, word);
  // Stack pass: v letters vanish, e_i* e_j cancels to delta_ij.
  EdgePath edges;
  EdgePath duals;  // dual letters in reading order
  for (const Generator& g : word) {
    switch (g.kind) {
      case GeneratorKind::Vertex:
        break;
      case GeneratorKind::DualEdge:
        duals.push_back(g.index);
        break;
      case GeneratorKind::Edge:
        if (duals.empty()) {
          edges.push_back(g.index);
        } else {
          if (duals.back() != g.index) return Element::zero();
          duals.pop_back();
        }
        break;
    }
  }
  // duals holds h* read left to right, i.e. h reversed.
  std::reverse(duals.begin(), duals.end());
  Element out;
  accumulate_edges_duals(cfg, std::move(edges), std::move(duals), 1, out);
  return out;
}

Element multiply(const AlgebraConfig& cfg, const BasisMonomial& a, const BasisMonomial& b) {
  Element out;
  accumulate_product(cfg, a, b, 1, out);
  return out;
}

Element multiply(const AlgebraConfig& cfg, const Element& a, const Element& b) {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      accumulate_product(cfg, ma, mb, ca * cb, out);
    }
  }
  return out;
}

namespace {

BasisMonomial generator_monomial(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::Edge:
      return BasisMonomial::path({g.index});
    case GeneratorKind::DualEdge:
      return BasisMonomial::dual_path({g.index});
    case GeneratorKind::Vertex:
      break;
  }
  return BasisMonomial::vertex();
}

}  // namespace

Element multiply(const AlgebraConfig& cfg, const Element& a, const Generator& g) {
  return multiply(cfg, a, Element(generator_monomial(g)));
}

Element multiply(const AlgebraConfig& cfg, const Generator& g, const Element& a) {
  return multiply(cfg, Element(generator_monomial(g)), a);
}

bool is_basis_monomial(const AlgebraConfig& cfg, const Word& word) {
  require_word(cfg, word);
  if (word.size() == 1 && word.front().kind == GeneratorKind::Vertex) return true;
  EdgePath w;
  EdgePath h;
  bool in_duals = false;
  for (const Generator& g : word) {
    switch (g.kind) {
      case GeneratorKind::Vertex:
        return false;
      case GeneratorKind::Edge:
        if (in_duals) return false;
        w.push_back(g.index);
        break;
      case GeneratorKind::DualEdge:
        in_duals = true;
        h.insert(h.begin(), g.index);
        break;
    }
  }
  // The empty word is v, which is basic.
  return !special_junction(w, h);
}

namespace {

// All paths of the given length over 1..loops in lexicographic order.
std::vector<EdgePath> all_paths(int loops, std::size_t length) {
  std::vector<EdgePath> out{EdgePath{}};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<EdgePath> next;
    next.reserve(out.size() * static_cast<std::size_t>(loops));
    for (const EdgePath& p : out) {
      for (int e = 1; e <= loops; ++e) {
        EdgePath q = p;
        q.push_back(e);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<BasisMonomial> enumerate_basis(const AlgebraConfig& cfg, std::size_t max_len) {
  std::vector<BasisMonomial> basis{BasisMonomial::vertex()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const EdgePath& p : all_paths(cfg.loops(), len)) basis.push_back(BasisMonomial::path(p));
    for (const EdgePath& p : all_paths(cfg.loops(), len)) {
      basis.push_back(BasisMonomial::dual_path(p));
    }
    for (std::size_t wl = 1; wl < len; ++wl) {
      const auto hs = all_paths(cfg.loops(), len - wl);
      for (const EdgePath& w : all_paths(cfg.loops(), wl)) {
        for (const EdgePath& h : hs) {
          if (!special_junction(w, h)) basis.push_back(BasisMonomial::mixed(w, h));
        }
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

void require_in_algebra(const AlgebraConfig& cfg, const Element& x) {
  for (const auto& [m, c] : x.terms()) {
    for (int e : m.w()) cfg.require_index(e);
    for (int e : m.h()) cfg.require_index(e);
  }
}

}  // namespace leavitt
