#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "presentation.hpp"

namespace seifert_lens {

inline constexpr std::size_t kDefaultCosetLimit = 100000;

enum class EnumerationStatus { Complete, ExceededLimit };

/// Result of a coset enumeration.
///
/// Rows are live cosets numbered from 0; row 0 is the coset of the subgroup.
/// There is one column per generator and one per inverse (column 2g is g,
/// column 2g+1 is g^-1). Entries are -1 only when the status is ExceededLimit.
class CosetTable {
 public:
  static constexpr std::int64_t kUndefined = -1;

  CosetTable(std::size_t generator_count, std::vector<std::int64_t> entries,
             EnumerationStatus status, std::size_t coset_limit,
             std::size_t total_defined)
      : columns_(2 * generator_count),
        entries_(std::move(entries)),
        status_(status),
        coset_limit_(coset_limit),
        total_defined_(total_defined) {}

  EnumerationStatus status() const noexcept { return status_; }
  bool complete() const noexcept { return status_ == EnumerationStatus::Complete; }
  std::size_t coset_limit() const noexcept { return coset_limit_; }
  /// Cosets ever created during enumeration, including ones later identified.
  std::size_t total_defined() const noexcept { return total_defined_; }

  std::size_t size() const noexcept { return columns_ == 0 ? 1 : entries_.size() / columns_; }
  std::size_t columns() const noexcept { return columns_; }

  std::int64_t image(std::size_t coset, std::size_t column) const {
    return entries_.at(coset * columns_ + column);
  }
  std::int64_t image(std::size_t coset, Letter l) const { return image(coset, l.column()); }

  /// Coset reached by reading w from `coset`, or kUndefined if the path breaks.
  std::int64_t act(std::size_t coset, Word const& w) const {
    std::int64_t c = static_cast<std::int64_t>(coset);
    for (auto const& l : w.letters()) {
      c = image(static_cast<std::size_t>(c), l);
      if (c == kUndefined) return kUndefined;
    }
    return c;
  }

  /// Length of the cycle of the letter's permutation through `coset`.
  std::size_t cycle_length(std::size_t coset, Letter l) const {
    if (!complete()) throw std::logic_error("cycle_length on an incomplete coset table");
    std::size_t len = 1;
    for (auto c = image(coset, l); static_cast<std::size_t>(c) != coset; c = image(c, l)) {
      ++len;
    }
    return len;
  }

  /// Replays every relator at every coset and every subgroup generator at
  /// coset 0, and checks that each column pair is a mutually inverse
  /// permutation. A table passing this is a certificate for the index.
  bool verify(GroupPresentation const& p, std::span<Word const> subgroup) const {
    if (!complete() || columns_ != 2 * p.generator_count()) return false;
    std::size_t const n = size();
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t x = 0; x < columns_; ++x) {
        auto const d = image(c, x);
        if (d < 0 || static_cast<std::size_t>(d) >= n) return false;
        if (image(static_cast<std::size_t>(d), x ^ 1u) != static_cast<std::int64_t>(c)) return false;
      }
      for (auto const& r : p.relators()) {
        if (act(c, r) != static_cast<std::int64_t>(c)) return false;
      }
    }
    for (auto const& w : subgroup) {
      if (act(0, w) != 0) return false;
    }
    return true;
  }

 private:
  std::size_t columns_;
  std::vector<std::int64_t> entries_;
  EnumerationStatus status_;
  std::size_t coset_limit_;
  std::size_t total_defined_;
};

namespace detail {

// HLT coset enumeration with union-find coincidence processing.
class CosetEnumerator {
 public:
  CosetEnumerator(GroupPresentation const& p, std::size_t limit)
      : columns_(2 * p.generator_count()), limit_(limit) {
    for (auto const& r : p.relators()) relators_.push_back(columns_of(r));
    new_coset();
  }

  CosetTable run(std::span<Word const> subgroup) {
    try {
      for (auto const& w : subgroup) scan_and_fill(0, columns_of(w));
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (auto const& r : relators_) {
          if (!live(c)) break;
          scan_and_fill(c, r);
        }
        for (std::size_t x = 0; x < columns_ && live(c); ++x) {
          if (at(c, x) < 0) define(c, x);
        }
      }
    } catch (Overflow const&) {
      return compact(EnumerationStatus::ExceededLimit);
    }
    return compact(EnumerationStatus::Complete);
  }

 private:
  struct Overflow {};

  static std::vector<std::size_t> columns_of(Word const& w) {
    std::vector<std::size_t> cols;
    cols.reserve(w.size());
    for (auto const& l : w.letters()) cols.push_back(l.column());
    return cols;
  }

  std::int64_t& at(std::size_t c, std::size_t x) { return table_[c * columns_ + x]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int64_t>(c); }

  std::int64_t new_coset() {
    if (live_count_ >= limit_) throw Overflow{};
    auto const id = static_cast<std::int64_t>(parent_.size());
    parent_.push_back(id);
    table_.resize(table_.size() + columns_, -1);
    ++live_count_;
    return id;
  }

  void define(std::size_t c, std::size_t x) {
    auto const d = new_coset();
    at(c, x) = d;
    at(static_cast<std::size_t>(d), x ^ 1u) = static_cast<std::int64_t>(c);
  }

  std::int64_t rep(std::int64_t c) {
    std::int64_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      auto const next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int64_t k, std::int64_t l) {
    auto const a = rep(k);
    auto const b = rep(l);
    if (a == b) return;
    auto const keep = std::min(a, b);
    auto const drop = std::max(a, b);
    parent_[drop] = keep;
    --live_count_;
    queue_.push_back(drop);
  }

  void coincidence(std::int64_t a, std::int64_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      auto const dead = static_cast<std::size_t>(queue_[i]);
      for (std::size_t x = 0; x < columns_; ++x) {
        auto const d = at(dead, x);
        if (d < 0) continue;
        at(static_cast<std::size_t>(d), x ^ 1u) = -1;
        auto const mu = rep(static_cast<std::int64_t>(dead));
        auto const nu = rep(d);
        auto const mu_x = at(static_cast<std::size_t>(mu), x);
        auto const nu_inv = at(static_cast<std::size_t>(nu), x ^ 1u);
        if (mu_x >= 0) {
          merge(nu, mu_x);
        } else if (nu_inv >= 0) {
          merge(mu, nu_inv);
        } else {
          at(static_cast<std::size_t>(mu), x) = nu;
          at(static_cast<std::size_t>(nu), x ^ 1u) = mu;
        }
      }
    }
  }

  void scan_and_fill(std::size_t coset, std::vector<std::size_t> const& w) {
    if (w.empty()) return;
    auto f = static_cast<std::int64_t>(coset);
    auto b = f;
    std::size_t i = 0;
    std::size_t j = w.size();  // the unscanned part is w[i, j)
    for (;;) {
      while (i < j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1] ^ 1u) >= 0) b = at(b, w[--j] ^ 1u);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // deduction closes the relator cycle
        at(f, w[i]) = b;
        at(b, w[i] ^ 1u) = f;
        return;
      }
      define(static_cast<std::size_t>(f), w[i]);
    }
  }

  CosetTable compact(EnumerationStatus status) {
    std::vector<std::int64_t> renumber(parent_.size(), -1);
    std::size_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(c)) renumber[c] = static_cast<std::int64_t>(next++);
    }
    std::vector<std::int64_t> entries;
    entries.reserve(next * columns_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        auto const d = at(c, x);
        entries.push_back(d < 0 ? -1 : renumber[rep(d)]);
      }
    }
    return CosetTable(columns_ / 2, std::move(entries), status, limit_, parent_.size());
  }

  std::size_t columns_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> parent_;
  std::vector<std::int64_t> queue_;
  std::size_t live_count_ = 0;
};

}  // namespace detail

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`. With an empty subgroup the number of cosets is |G|.
/// Hitting `limit` live cosets yields a table with status ExceededLimit.
inline CosetTable todd_coxeter(GroupPresentation const& p, std::span<Word const> subgroup,
                               std::size_t limit = kDefaultCosetLimit) {
  if (limit < 1) throw std::invalid_argument("coset limit must be at least 1");
  for (auto const& w : subgroup) p.validate(w);
  return detail::CosetEnumerator(p, limit).run(subgroup);
}

inline CosetTable todd_coxeter(GroupPresentation const& p,
                               std::initializer_list<Word> subgroup,
                               std::size_t limit = kDefaultCosetLimit) {
  std::vector<Word> const gens(subgroup);
  return todd_coxeter(p, std::span<Word const>(gens), limit);
}

/// |G|, or nullopt when enumeration exceeds `limit`.
inline std::optional<std::size_t> group_order(GroupPresentation const& p,
                                              std::size_t limit = kDefaultCosetLimit) {
  auto const table = todd_coxeter(p, std::span<Word const>{}, limit);
  if (!table.complete()) return std::nullopt;
  return table.size();
}

}  // namespace seifert_lens
