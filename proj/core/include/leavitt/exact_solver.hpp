#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "leavitt/algebra.hpp"

namespace leavitt {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

struct SparseSystem {
  std::size_t columns = 0;
  std::vector<SparseRow> rows;
  std::vector<Rational> rhs;  // one entry per row
};

/// Exact Gauss-Jordan elimination over the rationals. Pivots are chosen per
/// column as the row whose entry has the smallest numerator+denominator bit
/// size, lowest row index on ties, so the result is deterministic. Free
/// variables are set to zero. Returns nullopt iff the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(SparseSystem system);

}  // namespace leavitt
