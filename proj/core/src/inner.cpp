#include "leavitt/inner.hpp"

#include <map>
#include <stdexcept>

namespace leavitt {

DerivationSpec ad(const AlgebraConfig& cfg, const Element& lambda) {
  require_in_algebra(cfg, lambda);
  std::vector<Element> edges;
  std::vector<Element> duals;
  for (int i = 1; i <= cfg.loops(); ++i) {
    const Generator e = Generator::edge(i);
    edges.push_back(multiply(cfg, lambda, e) - multiply(cfg, e, lambda));
  }
  for (int i = 1; i <= cfg.loops(); ++i) {
    const Generator e = Generator::dual(i);
    duals.push_back(multiply(cfg, lambda, e) - multiply(cfg, e, lambda));
  }
  return {cfg, std::move(edges), std::move(duals)};
}

std::string to_string(ObstructionFamily f) {
  switch (f) {
    case ObstructionFamily::BetaOfEdge:
      return "beta(e1)";
    case ObstructionFamily::BetaOfDual:
      return "beta(e1')";
    case ObstructionFamily::GammaOfEdge:
      return "gamma(e1)";
    case ObstructionFamily::GammaOfDual:
      return "gamma(e1')";
  }
  return "?";
}

std::string to_string(Classification c) {
  return c == Classification::InnerPerPaper ? "inner (per paper)" : "outer (per paper)";
}

ObstructionReport obstruction_coefficients(const DerivationSpec& d, bool include_trivial_p) {
  constexpr int special = AlgebraConfig::kSpecialIndex;
  const std::size_t min_len = include_trivial_p ? 2 : 3;
  auto qualifies = [&](const EdgePath& q) {
    return q.size() >= min_len && q.front() == special && q.back() == special;
  };

  const CoefficientTable table = coefficients(d);
  ObstructionReport report;
  report.include_trivial_p = include_trivial_p;
  auto scan = [&](const std::map<EdgePath, Rational>& coeffs, ObstructionFamily family) {
    for (const auto& [q, c] : coeffs) {
      if (qualifies(q)) report.entries.push_back({family, q, c});
    }
  };
  scan(table.edge(special).beta, ObstructionFamily::BetaOfEdge);
  scan(table.dual(special).beta, ObstructionFamily::BetaOfDual);
  scan(table.edge(special).gamma, ObstructionFamily::GammaOfEdge);
  scan(table.dual(special).gamma, ObstructionFamily::GammaOfDual);
  return report;
}

namespace {

void require_derivation(const DerivationSpec& d) {
  const ViolationReport report = check_relations(d);
  if (!report.empty()) {
    throw InvalidDerivation("not a derivation: " + describe(report.violations.front()));
  }
}

}  // namespace

Classification classify_by_obstruction(const DerivationSpec& d, bool include_trivial_p) {
  require_derivation(d);
  return obstruction_coefficients(d, include_trivial_p).empty() ? Classification::InnerPerPaper
                                                                : Classification::OuterPerPaper;
}

WitnessProblem build_witness_problem(const DerivationSpec& d, std::size_t max_len) {
  const AlgebraConfig& cfg = d.config();
  WitnessProblem problem;
  for (BasisMonomial& m : enumerate_basis(cfg, max_len)) {
    if (m.monomial_class() != MonomialClass::Vertex) problem.columns.push_back(std::move(m));
  }

  const std::vector<Generator> gens = edge_generators(cfg);
  // (generator, monomial) -> column -> coefficient
  std::map<std::pair<Generator, BasisMonomial>, std::map<std::size_t, Rational>> entries;
  std::map<std::pair<Generator, BasisMonomial>, Rational> targets;

  for (std::size_t col = 0; col < problem.columns.size(); ++col) {
    const Element lambda(problem.columns[col]);
    for (const Generator& g : gens) {
      const Element value = multiply(cfg, lambda, g) - multiply(cfg, g, lambda);
      for (const auto& [m, c] : value.terms()) entries[{g, m}][col] = c;
    }
  }
  for (const Generator& g : gens) {
    for (const auto& [m, c] : d.value(g).terms()) {
      targets[{g, m}] = c;
      entries.try_emplace({g, m});
    }
  }

  problem.system.columns = problem.columns.size();
  for (auto& [key, row] : entries) {
    problem.row_keys.push_back(key);
    problem.system.rows.emplace_back(row.begin(), row.end());
    auto t = targets.find(key);
    problem.system.rhs.push_back(t == targets.end() ? Rational(0) : t->second);
  }
  return problem;
}

std::optional<Element> find_inner_witness(const DerivationSpec& d, std::size_t max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  require_derivation(d);
  WitnessProblem problem = build_witness_problem(d, max_len);
  const auto solution = solve_exact(std::move(problem.system));
  if (!solution) return std::nullopt;

  Element lambda;
  for (std::size_t col = 0; col < problem.columns.size(); ++col) {
    lambda.add_term(problem.columns[col], (*solution)[col]);
  }
  if (!(ad(d.config(), lambda) == d)) {
    throw std::logic_error("witness solver returned a lambda with ad(lambda) != D");
  }
  return lambda;
}

}  // namespace leavitt
