#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leavitt/derivation.hpp"
#include "leavitt/exact_solver.hpp"

namespace leavitt {

/// The inner derivation x -> lambda x - x lambda.
DerivationSpec ad(const AlgebraConfig& cfg, const Element& lambda);

enum class ObstructionFamily {
  BetaOfEdge,   // beta_{e1 p e1}(e1)
  BetaOfDual,   // beta_{e1 p e1}(e1*)
  GammaOfEdge,  // gamma_{e1 p e1}(e1)
  GammaOfDual,  // gamma_{e1 p e1}(e1*)
};

std::string to_string(ObstructionFamily f);

struct ObstructionEntry {
  ObstructionFamily family;
  EdgePath word;  // e1 p e1
  Rational value;
};

struct ObstructionReport {
  std::vector<ObstructionEntry> entries;  // nonzero values only
  bool include_trivial_p = true;

  bool empty() const noexcept { return entries.empty(); }
};

/// Collects the nonzero beta/gamma coefficients of D(e1) and D(e1*) indexed
/// by words that start and end with e1. Words of length 2 (p trivial) are
/// included only when include_trivial_p is set.
ObstructionReport obstruction_coefficients(const DerivationSpec& d, bool include_trivial_p = true);

enum class Classification { InnerPerPaper, OuterPerPaper };

std::string to_string(Classification c);

/// OuterPerPaper iff some obstruction coefficient is nonzero. Vanishing is
/// only a necessary condition for innerness, hence the label; use
/// find_inner_witness for a certificate. Throws InvalidDerivation if D fails
/// check_relations.
Classification classify_by_obstruction(const DerivationSpec& d, bool include_trivial_p = true);

/// The linear system ad(lambda) = D with lambda ranging over the span of
/// `columns`. Row k is the coefficient of row_keys[k].second in the value on
/// generator row_keys[k].first.
struct WitnessProblem {
  std::vector<BasisMonomial> columns;
  std::vector<std::pair<Generator, BasisMonomial>> row_keys;
  SparseSystem system;
};

/// Columns: enumerate_basis(cfg, max_len) without v (ad_v = 0).
WitnessProblem build_witness_problem(const DerivationSpec& d, std::size_t max_len);

/// Some lambda supported on basis words of length <= max_len with
/// ad(lambda) = D, or nullopt if none exists over that support. Any witness
/// returned has been re-checked against D. Throws InvalidDerivation if D fails
/// check_relations.
std::optional<Element> find_inner_witness(const DerivationSpec& d, std::size_t max_len);

}  // namespace leavitt
