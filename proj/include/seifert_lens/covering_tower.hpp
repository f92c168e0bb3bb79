#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbifold.hpp"
#include "rational.hpp"

namespace seifert_lens {

/// How the cover's cone points sit over the base's.
struct BranchDatum {
  enum class Kind {
    Antipodal,      // S^2 -> RP^2, every cone point has two preimages
    PolarRotation,  // rotation of order `order` about two poles of that order
  };
  Kind kind = Kind::Antipodal;
  std::int64_t order = 2;

  friend bool operator==(BranchDatum const&, BranchDatum const&) = default;
};

inline std::string to_string(BranchDatum const& b) {
  return b.kind == BranchDatum::Kind::Antipodal
             ? std::string("antipodal-quotient")
             : "polar-rotation(" + std::to_string(b.order) + ")";
}

struct CoveringStep {
  Orbifold2D cover;
  Orbifold2D base;
  std::int64_t degree = 2;
  BranchDatum branch;
};

namespace detail {

inline std::map<std::int64_t, std::int64_t> multiset(std::vector<std::int64_t> const& orders) {
  std::map<std::int64_t, std::int64_t> m;
  for (auto n : orders) ++m[n];
  return m;
}

}  // namespace detail

/// Checks chi(cover) = degree * chi(base) exactly and the cone-point
/// bookkeeping of the branch datum: for an antipodal quotient every base
/// order appears twice as often in the cover; for a polar rotation of order
/// d two base points of order d are branch points (smooth upstairs) and each
/// remaining base point has d preimages.
inline bool certify_step(CoveringStep const& s) {
  if (s.degree < 2) return false;
  if (euler_characteristic(s.cover) != Rational(s.degree) * euler_characteristic(s.base)) {
    return false;
  }
  if (!s.cover.is_sphere()) return false;
  auto base = detail::multiset(s.base.cone_orders());
  auto const cover = detail::multiset(s.cover.cone_orders());
  switch (s.branch.kind) {
    case BranchDatum::Kind::Antipodal:
      if (!s.base.is_projective_plane() || s.degree != 2) return false;
      for (auto& [order, count] : base) count *= 2;
      return base == cover;
    case BranchDatum::Kind::PolarRotation: {
      std::int64_t const d = s.branch.order;
      if (!s.base.is_sphere() || s.degree != d) return false;
      auto it = base.find(d);
      if (it == base.end() || it->second < 2) return false;
      it->second -= 2;
      if (it->second == 0) base.erase(it);
      for (auto& [order, count] : base) count *= d;
      return base == cover;
    }
  }
  return false;
}

/// The first `depth` steps of the tower of proper coverings over RP^2(n1, n2):
///
///   S^2(n1, n1, n2, n2)           -> RP^2(n1, n2)          degree 2
///   S^2(n2 x 2 n1)                -> S^2(n1, n1, n2, n2)   degree n1
///   S^2(n2 x n2 (m - 2))          -> S^2(n2 x m)           degree n2, repeated
///
/// The number m of cone points follows m -> n2 (m - 2) starting at 2 n1 and
/// never drops below 4.
inline std::vector<CoveringStep> build_tower(std::int64_t n1, std::int64_t n2, std::int64_t depth) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("tower needs n1, n2 >= 2");
  if (depth < 1) throw std::invalid_argument("tower depth must be >= 1");

  std::vector<CoveringStep> steps;
  Orbifold2D base = Orbifold2D::projective_plane({n1, n2});
  Orbifold2D cover = Orbifold2D::sphere({n1, n1, n2, n2});
  steps.push_back({cover, base, 2, {BranchDatum::Kind::Antipodal, 2}});

  std::int64_t m = 2 * n1;
  if (depth >= 2) {
    base = cover;
    cover = Orbifold2D::sphere(std::vector<std::int64_t>(static_cast<std::size_t>(m), n2));
    steps.push_back({cover, base, n1, {BranchDatum::Kind::PolarRotation, n1}});
  }
  for (std::int64_t level = 3; level <= depth; ++level) {
    std::int64_t const next = n2 * (m - 2);
    base = cover;
    cover = Orbifold2D::sphere(std::vector<std::int64_t>(static_cast<std::size_t>(next), n2));
    steps.push_back({cover, base, n2, {BranchDatum::Kind::PolarRotation, n2}});
    m = next;
  }
  return steps;
}

/// Cone-point counts m_0 = 2 n1, m_{k+1} = n2 (m_k - 2) of the sphere covers.
inline std::vector<std::int64_t> tower_cone_counts(std::int64_t n1, std::int64_t n2,
                                                   std::size_t count) {
  std::vector<std::int64_t> out;
  std::int64_t m = 2 * n1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(m);
    m = n2 * (m - 2);
  }
  return out;
}

}  // namespace seifert_lens
