#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "presentation.hpp"
#include "todd_coxeter.hpp"

namespace seifert_lens {

using BigInt = boost::multiprecision::cpp_int;
using IntegerMatrix = std::vector<std::vector<BigInt>>;

/// Z^rank + Z/d1 + ... + Z/dk with d1 | d2 | ... | dk, each di >= 2.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;

  /// Group order when finite.
  std::optional<BigInt> order() const {
    if (rank > 0) return std::nullopt;
    BigInt prod = 1;
    for (auto const& d : torsion) prod *= d;
    return prod;
  }

  friend bool operator==(AbelianInvariants const&, AbelianInvariants const&) = default;
};

inline std::string to_string(AbelianInvariants const& inv) {
  std::string out;
  for (std::size_t i = 0; i < inv.rank; ++i) out += (out.empty() ? "" : " + ") + std::string("Z");
  for (auto const& d : inv.torsion) out += (out.empty() ? "" : " + ") + ("Z/" + d.str());
  return out.empty() ? "0" : out;
}

/// Diagonal of the Smith normal form of `m` (absolute values, length min(rows, cols)).
inline std::vector<BigInt> smith_diagonal(IntegerMatrix m) {
  std::size_t const rows = m.size();
  std::size_t const cols = rows == 0 ? 0 : m[0].size();
  std::size_t const diag = std::min(rows, cols);

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    // Pivot: the smallest non-zero entry of the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 &&
            (!pivot || abs(m[i][j]) < abs(m[pivot->first][pivot->second]))) {
          pivot = {i, j};
        }
      }
    }
    if (!pivot) break;
    std::swap(m[t], m[pivot->first]);
    swap_cols(t, pivot->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt const q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt const q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        for (std::size_t j = t; j < cols; ++j) m[t][j] += m[*bad_row][j];
      }
      // Move the smallest non-zero entry of row t / column t to the pivot.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t; i < rows; ++i) {
        if (m[i][t] != 0 && (m[bi][bj] == 0 || abs(m[i][t]) < abs(m[bi][bj]))) bi = i, bj = t;
      }
      for (std::size_t j = t; j < cols; ++j) {
        if (m[t][j] != 0 && (m[bi][bj] == 0 || abs(m[t][j]) < abs(m[bi][bj]))) bi = t, bj = j;
      }
      std::swap(m[t], m[bi]);
      swap_cols(t, bj);
    }
  }

  std::vector<BigInt> out;
  out.reserve(diag);
  for (std::size_t t = 0; t < diag; ++t) out.push_back(abs(m[t][t]));
  return out;
}

/// Exponent-sum matrix: one row per relator, one column per generator.
inline IntegerMatrix relation_matrix(GroupPresentation const& p) {
  IntegerMatrix m;
  for (auto const& r : p.relators()) {
    std::vector<BigInt> row;
    for (std::size_t g = 0; g < p.generator_count(); ++g) row.emplace_back(r.exponent_sum(g));
    m.push_back(std::move(row));
  }
  return m;
}

inline AbelianInvariants abelianization(GroupPresentation const& p) {
  AbelianInvariants inv;
  std::size_t matrix_rank = 0;
  for (auto const& d : smith_diagonal(relation_matrix(p))) {
    if (d == 0) continue;
    ++matrix_rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.rank = p.generator_count() - matrix_rank;
  return inv;
}

/// True iff the group is finite cyclic: |G| equals the order of its
/// abelianization and that abelianization has at most one invariant factor.
/// Throws CosetLimitExceeded when |G| cannot be settled within `limit`.
inline bool is_cyclic(GroupPresentation const& p, std::size_t limit = kDefaultCosetLimit) {
  auto const order = group_order(p, limit);
  if (!order) throw CosetLimitExceeded(limit);
  auto const ab = abelianization(p);
  auto const ab_order = ab.order();
  return ab_order && *ab_order == *order && ab.torsion.size() <= 1;
}

}  // namespace seifert_lens
