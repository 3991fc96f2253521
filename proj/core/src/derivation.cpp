#include "leavitt/derivation.hpp"

#include <set>

#include "leavitt/printing.hpp"

namespace leavitt {

// ---------------------------------------------------------------------------
// DerivationSpec

DerivationSpec::DerivationSpec(AlgebraConfig cfg, std::vector<Element> edge_values,
                               std::vector<Element> dual_values)
    : cfg_(cfg), edges_(std::move(edge_values)), duals_(std::move(dual_values)) {
  const auto l = static_cast<std::size_t>(cfg_.loops());
  if (edges_.size() != l || duals_.size() != l) {
    throw ConfigError("derivation needs " + std::to_string(l) + " edge and dual values");
  }
  for (const Element& x : edges_) require_in_algebra(cfg_, x);
  for (const Element& x : duals_) require_in_algebra(cfg_, x);
}

DerivationSpec DerivationSpec::with_vertex_value(AlgebraConfig cfg,
                                                 std::vector<Element> edge_values,
                                                 std::vector<Element> dual_values,
                                                 const Element& vertex_value) {
  if (!vertex_value.is_zero()) {
    throw InvalidDerivation("D(v) must be 0, got " + to_string(vertex_value));
  }
  return {cfg, std::move(edge_values), std::move(dual_values)};
}

DerivationSpec DerivationSpec::zero(const AlgebraConfig& cfg) {
  const auto l = static_cast<std::size_t>(cfg.loops());
  return {cfg, std::vector<Element>(l), std::vector<Element>(l)};
}

const Element& DerivationSpec::value(const Generator& g) const {
  static const Element kZero;
  switch (g.kind) {
    case GeneratorKind::Edge:
      return edge_value(g.index);
    case GeneratorKind::DualEdge:
      return dual_value(g.index);
    case GeneratorKind::Vertex:
      break;
  }
  return kZero;
}

std::vector<const Violation*> ViolationReport::find(const std::string& equation) const {
  std::vector<const Violation*> out;
  for (const Violation& v : violations) {
    if (v.equation == equation) out.push_back(&v);
  }
  return out;
}

std::string describe(const Violation& v) {
  std::string out = v.equation;
  if (!v.indices.empty()) {
    out += " (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) {
      if (k) out += ", ";
      out += std::to_string(v.indices[k]);
    }
    out += ")";
  }
  if (v.index) out += " at " + to_string(*v.index);
  if (!v.word.empty()) out += " on word " + to_string(v.word);
  out += ": residual ";
  out += std::visit([](const auto& r) { return to_string(r); }, v.residual);
  return out;
}

// ---------------------------------------------------------------------------
// Leibniz extension

Element extend(const DerivationSpec& d, const Element& x, ExtendMode mode) {
  if (mode == ExtendMode::Checked) {
    const ViolationReport report = check_relations(d);
    if (!report.empty()) {
      throw InvalidDerivation("generator values violate the relations: " +
                              describe(report.violations.front()));
    }
  }
  const AlgebraConfig& cfg = d.config();
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element prefix = Element::unit();
    Element derived;
    for (const Generator& g : m.spelling()) {
      derived = multiply(cfg, derived, g) + multiply(cfg, prefix, d.value(g));
      prefix = multiply(cfg, prefix, g);
    }
    out += c * derived;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Completion

DerivationSpec complete_from_edge_values(const AlgebraConfig& cfg,
                                         std::vector<Element> edge_values) {
  std::vector<Element> duals;
  for (int i = 1; i <= cfg.loops(); ++i) {
    Element di;
    for (int j = 1; j <= cfg.loops(); ++j) {
      const Element& dj = edge_values.at(static_cast<std::size_t>(j - 1));
      di -= multiply(cfg, multiply(cfg, Generator::dual(i), dj), Generator::dual(j));
    }
    duals.push_back(std::move(di));
  }
  return {cfg, std::move(edge_values), std::move(duals)};
}

DerivationSpec complete_from_dual_values(const AlgebraConfig& cfg,
                                         std::vector<Element> dual_values) {
  std::vector<Element> edges;
  for (int j = 1; j <= cfg.loops(); ++j) {
    Element dj;
    for (int i = 1; i <= cfg.loops(); ++i) {
      const Element& di = dual_values.at(static_cast<std::size_t>(i - 1));
      dj -= multiply(cfg, multiply(cfg, Generator::edge(i), di), Generator::edge(j));
    }
    edges.push_back(std::move(dj));
  }
  return {cfg, std::move(edges), std::move(dual_values)};
}

// ---------------------------------------------------------------------------
// Relation checks

ViolationReport check_relations(const DerivationSpec& d) {
  const AlgebraConfig& cfg = d.config();
  const Element v = Element::unit();
  ViolationReport report;
  auto record = [&](std::string id, std::vector<int> idx, Element residual) {
    if (!residual.is_zero()) {
      report.violations.push_back({std::move(id), std::move(idx), std::nullopt, {}, std::move(residual)});
    }
  };

  for (int i = 1; i <= cfg.loops(); ++i) {
    const Element& de = d.edge_value(i);
    record("rel-unit-edge", {i}, multiply(cfg, multiply(cfg, v, de), v) - de);
  }
  for (int i = 1; i <= cfg.loops(); ++i) {
    const Element& de = d.dual_value(i);
    record("rel-unit-dual", {i}, multiply(cfg, multiply(cfg, v, de), v) - de);
  }
  for (int i = 1; i <= cfg.loops(); ++i) {
    for (int j = 1; j <= cfg.loops(); ++j) {
      record("rel-dual-edge", {i, j},
             multiply(cfg, d.dual_value(i), Generator::edge(j)) +
                 multiply(cfg, Generator::dual(i), d.edge_value(j)));
    }
  }
  Element sum;
  for (int i = 1; i <= cfg.loops(); ++i) {
    sum += multiply(cfg, d.edge_value(i), Generator::dual(i));
    sum += multiply(cfg, Generator::edge(i), d.dual_value(i));
  }
  record("rel-sum", {}, std::move(sum));
  return report;
}

// ---------------------------------------------------------------------------
// Coefficients

namespace {

template <typename Map, typename Key>
Rational lookup(const Map& m, const Key& k) {
  auto it = m.find(k);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

Rational GeneratorCoefficients::beta_at(const EdgePath& p) const { return lookup(beta, p); }
Rational GeneratorCoefficients::gamma_at(const EdgePath& p) const { return lookup(gamma, p); }
Rational GeneratorCoefficients::rho_at(const EdgePath& w, const EdgePath& h) const {
  return lookup(rho, std::make_pair(w, h));
}

GeneratorCoefficients GeneratorCoefficients::of(const Element& x) {
  GeneratorCoefficients out;
  for (const auto& [m, c] : x.terms()) {
    switch (m.monomial_class()) {
      case MonomialClass::Vertex:
        out.alpha = c;
        break;
      case MonomialClass::Path:
        out.beta.emplace(m.w(), c);
        break;
      case MonomialClass::DualPath:
        out.gamma.emplace(m.h(), c);
        break;
      case MonomialClass::Mixed:
        out.rho.emplace(std::make_pair(m.w(), m.h()), c);
        break;
    }
  }
  return out;
}

Element GeneratorCoefficients::to_element() const {
  Element x;
  x.add_term(BasisMonomial::vertex(), alpha);
  for (const auto& [p, c] : beta) x.add_term(BasisMonomial::path(p), c);
  for (const auto& [p, c] : gamma) x.add_term(BasisMonomial::dual_path(p), c);
  for (const auto& [wh, c] : rho) x.add_term(BasisMonomial::mixed(wh.first, wh.second), c);
  return x;
}

CoefficientTable coefficients(const DerivationSpec& d) {
  CoefficientTable table;
  for (const Element& x : d.edge_values()) table.edges.push_back(GeneratorCoefficients::of(x));
  for (const Element& x : d.dual_values()) table.duals.push_back(GeneratorCoefficients::of(x));
  return table;
}

// ---------------------------------------------------------------------------
// Coefficient equations

namespace {

EdgePath cat(std::initializer_list<const EdgePath*> parts) {
  EdgePath out;
  for (const EdgePath* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

EdgePath drop_front(const EdgePath& p) { return {p.begin() + 1, p.end()}; }
EdgePath drop_back(const EdgePath& p) { return {p.begin(), p.end() - 1}; }
EdgePath middle(const EdgePath& p) { return {p.begin() + 1, p.end() - 1}; }

Rational kronecker_complement(int a, int b) { return a == b ? 0 : 1; }

bool basic_mixed(const EdgePath& w, const EdgePath& h) {
  return !w.empty() && !h.empty() &&
         !(w.back() == AlgebraConfig::kSpecialIndex && h.back() == AlgebraConfig::kSpecialIndex);
}

// Instances for one ordered pair (i, j): E = coefficients of D(e_j),
// S = coefficients of D(e_i*).
void check_pair(int i, int j, const GeneratorCoefficients& S, const GeneratorCoefficients& E,
                ViolationReport& report) {
  const EdgePath ei{i};
  const EdgePath ej{j};
  auto record = [&](int eq, std::optional<BasisMonomial> index, const Rational& value) {
    if (value != 0) {
      report.violations.push_back(
          {"genth-" + std::to_string(eq), {i, j}, std::move(index), {}, value});
    }
  };

  // (1) gamma_{e_j}(e_i*) + beta_{e_i}(e_j) = 0
  record(1, std::nullopt, S.gamma_at(ej) + E.beta_at(ei));

  // (2) beta_p(e_i*) + (1 - d_{1j}) rho_{p e_j e_j*}(e_i*) + beta_{e_i p e_j}(e_j) = 0
  {
    std::set<EdgePath> ps;
    for (const auto& [p, c] : S.beta) ps.insert(p);
    for (const auto& [wh, c] : S.rho) {
      const auto& [w, h] = wh;
      if (h == ej && w.size() >= 2 && w.back() == j) ps.insert(drop_back(w));
    }
    for (const auto& [q, c] : E.beta) {
      if (q.size() >= 3 && q.front() == i && q.back() == j) ps.insert(middle(q));
    }
    for (const EdgePath& p : ps) {
      record(2, BasisMonomial::path(p),
             S.beta_at(p) + kronecker_complement(1, j) * S.rho_at(cat({&p, &ej}), ej) +
                 E.beta_at(cat({&ei, &p, &ej})));
    }
  }

  // (3) rho_{p e_j*}(e_i*) + beta_{e_i p}(e_j) = 0, p_z != e_j
  {
    std::set<EdgePath> ps;
    for (const auto& [wh, c] : S.rho) {
      const auto& [w, h] = wh;
      if (h == ej && w.back() != j) ps.insert(w);
    }
    for (const auto& [q, c] : E.beta) {
      if (q.size() >= 2 && q.front() == i && q.back() != j) ps.insert(drop_front(q));
    }
    for (const EdgePath& p : ps) {
      record(3, BasisMonomial::path(p), S.rho_at(p, ej) + E.beta_at(cat({&ei, &p})));
    }
  }

  // (4) alpha_v(e_i*) + (1 - d_{1j}) rho_{e_j e_j*}(e_i*) + beta_{e_i e_j}(e_j) = 0
  record(4, std::nullopt,
         S.alpha + kronecker_complement(1, j) * S.rho_at(ej, ej) + E.beta_at(cat({&ei, &ej})));

  // (5) gamma_{e_j p e_i}(e_i*) + gamma_p(e_j) + (1 - d_{1i}) rho_{e_i (p e_i)*}(e_j) = 0
  {
    std::set<EdgePath> ps;
    for (const auto& [q, c] : S.gamma) {
      if (q.size() >= 3 && q.front() == j && q.back() == i) ps.insert(middle(q));
    }
    for (const auto& [p, c] : E.gamma) ps.insert(p);
    for (const auto& [wh, c] : E.rho) {
      const auto& [w, h] = wh;
      if (w == ei && h.size() >= 2 && h.back() == i) ps.insert(drop_back(h));
    }
    for (const EdgePath& p : ps) {
      record(5, BasisMonomial::path(p),
             S.gamma_at(cat({&ej, &p, &ei})) + E.gamma_at(p) +
                 kronecker_complement(1, i) * E.rho_at(ei, cat({&p, &ei})));
    }
  }

  // (6) gamma_{e_j p}(e_i*) + rho_{e_i p*}(e_j) = 0, p_z != e_i
  {
    std::set<EdgePath> ps;
    for (const auto& [q, c] : S.gamma) {
      if (q.size() >= 2 && q.front() == j && q.back() != i) ps.insert(drop_front(q));
    }
    for (const auto& [wh, c] : E.rho) {
      const auto& [w, h] = wh;
      if (w == ei && h.back() != i) ps.insert(h);
    }
    for (const EdgePath& p : ps) {
      record(6, BasisMonomial::path(p), S.gamma_at(cat({&ej, &p})) + E.rho_at(ei, p));
    }
  }

  // (7) alpha_v(e_j) + gamma_{e_j e_i}(e_i*) + (1 - d_{1i}) rho_{e_i e_i*}(e_j) = 0
  record(7, std::nullopt,
         E.alpha + S.gamma_at(cat({&ej, &ei})) + kronecker_complement(1, i) * E.rho_at(ei, ei));

  // (8) rho_{w (e_j h)*}(e_i*) + rho_{e_i w h*}(e_j) = 0, w h* in M
  {
    std::set<std::pair<EdgePath, EdgePath>> whs;
    for (const auto& [wh, c] : S.rho) {
      const auto& [w, h] = wh;
      if (h.size() >= 2 && h.front() == j) whs.emplace(w, drop_front(h));
    }
    for (const auto& [wh, c] : E.rho) {
      const auto& [w, h] = wh;
      if (w.size() >= 2 && w.front() == i) whs.emplace(drop_front(w), h);
    }
    for (const auto& [w, h] : whs) {
      if (!basic_mixed(w, h)) continue;
      record(8, BasisMonomial::mixed(w, h), S.rho_at(w, cat({&ej, &h})) + E.rho_at(cat({&ei, &w}), h));
    }
  }
}

}  // namespace

ViolationReport check_genth_equations(const DerivationSpec& d) {
  const CoefficientTable table = coefficients(d);
  ViolationReport report;
  const int l = d.config().loops();
  for (int i = 1; i <= l; ++i) {
    for (int j = 1; j <= l; ++j) check_pair(i, j, table.dual(i), table.edge(j), report);
  }
  return report;
}

}  // namespace leavitt
