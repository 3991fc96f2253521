#include "leavitt/exact_solver.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace leavitt {

namespace {

std::size_t bit_size(const Rational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

const Rational* entry(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return it != row.end() && it->first == col ? &it->second : nullptr;
}

// row -= factor * pivot, returning the columns whose nonzero status changed
// as (column, now_nonzero).
std::vector<std::pair<std::size_t, bool>> subtract_multiple(SparseRow& row, const SparseRow& pivot,
                                                            const Rational& factor) {
  std::vector<std::pair<std::size_t, bool>> changed;
  SparseRow merged;
  merged.reserve(row.size() + pivot.size());
  auto a = row.begin();
  auto b = pivot.begin();
  while (a != row.end() || b != pivot.end()) {
    if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      merged.emplace_back(b->first, -factor * b->second);
      changed.emplace_back(b->first, true);
      ++b;
    } else {
      Rational value = a->second - factor * b->second;
      if (value != 0) {
        merged.emplace_back(a->first, std::move(value));
      } else {
        changed.emplace_back(a->first, false);
      }
      ++a;
      ++b;
    }
  }
  row = std::move(merged);
  return changed;
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(SparseSystem system) {
  auto& rows = system.rows;
  auto& rhs = system.rhs;
  if (rhs.size() != rows.size()) throw std::invalid_argument("rhs size must match row count");

  std::vector<std::set<std::size_t>> rows_in_column(system.columns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [c, value] : rows[r]) {
      if (c >= system.columns) throw std::invalid_argument("column index out of range");
      rows_in_column[c].insert(r);
    }
  }

  std::vector<bool> used(rows.size(), false);
  std::vector<std::optional<std::size_t>> pivot_row(system.columns);

  for (std::size_t col = 0; col < system.columns; ++col) {
    std::optional<std::size_t> best;
    std::size_t best_size = 0;
    for (std::size_t r : rows_in_column[col]) {
      if (used[r]) continue;
      const std::size_t size = bit_size(*entry(rows[r], col));
      if (!best || size < best_size) {
        best = r;
        best_size = size;
      }
    }
    if (!best) continue;
    const std::size_t p = *best;
    used[p] = true;
    pivot_row[col] = p;

    const Rational inv = 1 / *entry(rows[p], col);
    if (inv != 1) {
      for (auto& [c, value] : rows[p]) value *= inv;
      rhs[p] *= inv;
    }

    const std::vector<std::size_t> targets(rows_in_column[col].begin(), rows_in_column[col].end());
    for (std::size_t r : targets) {
      if (r == p) continue;
      const Rational factor = *entry(rows[r], col);
      for (const auto& [c, nonzero] : subtract_multiple(rows[r], rows[p], factor)) {
        if (nonzero) {
          rows_in_column[c].insert(r);
        } else {
          rows_in_column[c].erase(r);
        }
      }
      rhs[r] -= factor * rhs[p];
    }
  }

  // Unused rows are now identically zero; a nonzero right-hand side there is
  // the inconsistency 0 = c.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r] && rhs[r] != 0) return std::nullopt;
  }

  std::vector<Rational> solution(system.columns);
  for (std::size_t col = 0; col < system.columns; ++col) {
    if (pivot_row[col]) solution[col] = rhs[*pivot_row[col]];
  }
  return solution;
}

}  // namespace leavitt
