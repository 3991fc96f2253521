#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "leavitt/algebra.hpp"

namespace leavitt {

/// A derivation of W(l) given by its values on e_1..e_l and e_1*..e_l*.
/// D(v) is always zero and never stored.
class DerivationSpec {
 public:
  DerivationSpec(AlgebraConfig cfg, std::vector<Element> edge_values,
                 std::vector<Element> dual_values);

  /// Same, but also takes an explicit value for v (e.g. read from a file),
  /// which must be zero.
  static DerivationSpec with_vertex_value(AlgebraConfig cfg, std::vector<Element> edge_values,
                                          std::vector<Element> dual_values,
                                          const Element& vertex_value);

  static DerivationSpec zero(const AlgebraConfig& cfg);

  const AlgebraConfig& config() const noexcept { return cfg_; }
  const std::vector<Element>& edge_values() const noexcept { return edges_; }
  const std::vector<Element>& dual_values() const noexcept { return duals_; }

  const Element& edge_value(int i) const { return edges_.at(static_cast<std::size_t>(i - 1)); }
  const Element& dual_value(int i) const { return duals_.at(static_cast<std::size_t>(i - 1)); }
  /// D(g) for any generator; zero for v.
  const Element& value(const Generator& g) const;

  friend bool operator==(const DerivationSpec&, const DerivationSpec&) = default;

 private:
  AlgebraConfig cfg_;
  std::vector<Element> edges_;
  std::vector<Element> duals_;
};

/// One failed equation. `indices` carries (i, j) or (i) as the equation
/// needs; `index` is the p or w h* the equation is instantiated at;
/// `word` is the rewritten word for overlap checks.
struct Violation {
  std::string equation;
  std::vector<int> indices;
  std::optional<BasisMonomial> index;
  Word word;
  std::variant<Element, Rational> residual;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool empty() const noexcept { return violations.empty(); }
  std::size_t size() const noexcept { return violations.size(); }
  /// Violations whose equation id equals `equation`.
  std::vector<const Violation*> find(const std::string& equation) const;
};

std::string describe(const Violation& v);

enum class ExtendMode { Checked, Unchecked };

/// Extends D to an arbitrary element by the Leibniz rule along each
/// monomial's canonical spelling. In Checked mode, throws InvalidDerivation
/// unless check_relations(D) is empty.
Element extend(const DerivationSpec& d, const Element& x, ExtendMode mode = ExtendMode::Checked);

/// D(e_i*) := -sum_j e_i* D(e_j) e_j*, which satisfies every relation for any
/// choice of edge values.
DerivationSpec complete_from_edge_values(const AlgebraConfig& cfg,
                                         std::vector<Element> edge_values);

/// Mirror image: D(e_j) := -sum_i e_i D(e_i*) e_j.
DerivationSpec complete_from_dual_values(const AlgebraConfig& cfg,
                                         std::vector<Element> dual_values);

/// Evaluates vD(x)v = D(x), D(e_i*)e_j + e_i*D(e_j) = 0 and
/// sum_i (D(e_i)e_i* + e_i D(e_i*)) = 0. Equation ids: "rel-unit-edge" (i),
/// "rel-unit-dual" (i), "rel-dual-edge" (i, j), "rel-sum".
ViolationReport check_relations(const DerivationSpec& d);

/// Coefficients of one value D(x) split by basis class.
struct GeneratorCoefficients {
  Rational alpha;                                  // coefficient of v
  std::map<EdgePath, Rational> beta;               // p
  std::map<EdgePath, Rational> gamma;              // p*
  std::map<std::pair<EdgePath, EdgePath>, Rational> rho;  // w h*

  Rational beta_at(const EdgePath& p) const;
  Rational gamma_at(const EdgePath& p) const;
  Rational rho_at(const EdgePath& w, const EdgePath& h) const;

  static GeneratorCoefficients of(const Element& x);
  Element to_element() const;
  friend bool operator==(const GeneratorCoefficients&, const GeneratorCoefficients&) = default;
};

struct CoefficientTable {
  std::vector<GeneratorCoefficients> edges;  // x = e_1..e_l
  std::vector<GeneratorCoefficients> duals;  // x = e_1*..e_l*

  const GeneratorCoefficients& edge(int i) const { return edges.at(static_cast<std::size_t>(i - 1)); }
  const GeneratorCoefficients& dual(int i) const { return duals.at(static_cast<std::size_t>(i - 1)); }
};

CoefficientTable coefficients(const DerivationSpec& d);

/// Evaluates the eight coefficient families (ids "genth-1".."genth-8", with
/// indices (i, j) and, where the family is indexed, the p or w h* instance)
/// obtained by expanding D(e_i*)e_j + e_i*D(e_j) = 0 in the basis. Only the
/// instances touching the support of D can be nonzero, so exactly those are
/// evaluated.
ViolationReport check_genth_equations(const DerivationSpec& d);

}  // namespace leavitt
