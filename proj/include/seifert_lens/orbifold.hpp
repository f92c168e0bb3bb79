#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"
#include "rational.hpp"
#include "text.hpp"

namespace seifert_lens {

/// Closed 2-orbifold: a closed surface with finitely many cone points.
///
/// Genus is the orientable genus for orientable surfaces and the
/// non-orientable genus (number of cross-caps) otherwise, so S^2 is
/// (true, 0) and RP^2 is (false, 1). Cone orders are kept sorted ascending;
/// orders equal to 1 are allowed until normalization erases them.
class Orbifold2D {
 public:
  Orbifold2D(bool orientable, std::int64_t genus, std::vector<std::int64_t> cone_orders)
      : orientable_(orientable), genus_(genus), cone_orders_(std::move(cone_orders)) {
    if (genus_ < 0) throw std::invalid_argument("genus must be non-negative");
    if (!orientable_ && genus_ < 1) {
      throw std::invalid_argument("non-orientable genus must be at least 1");
    }
    for (auto n : cone_orders_) {
      if (n < 1) throw std::invalid_argument("cone orders must be at least 1");
    }
    std::sort(cone_orders_.begin(), cone_orders_.end());
  }

  static Orbifold2D sphere(std::vector<std::int64_t> cone_orders = {}) {
    return Orbifold2D(true, 0, std::move(cone_orders));
  }
  static Orbifold2D projective_plane(std::vector<std::int64_t> cone_orders = {}) {
    return Orbifold2D(false, 1, std::move(cone_orders));
  }

  bool orientable() const noexcept { return orientable_; }
  std::int64_t genus() const noexcept { return genus_; }
  std::vector<std::int64_t> const& cone_orders() const noexcept { return cone_orders_; }

  bool is_projective_plane() const noexcept { return !orientable_ && genus_ == 1; }
  bool is_sphere() const noexcept { return orientable_ && genus_ == 0; }

  /// Euler characteristic of the underlying surface.
  std::int64_t surface_euler_characteristic() const noexcept {
    return orientable_ ? 2 - 2 * genus_ : 2 - genus_;
  }

  friend bool operator==(Orbifold2D const&, Orbifold2D const&) = default;

 private:
  bool orientable_;
  std::int64_t genus_;
  std::vector<std::int64_t> cone_orders_;
};

/// Drops cone points of order 1, which are smooth points.
inline Orbifold2D normalize_orbifold(Orbifold2D const& o) {
  std::vector<std::int64_t> orders;
  std::copy_if(o.cone_orders().begin(), o.cone_orders().end(), std::back_inserter(orders),
               [](std::int64_t n) { return n > 1; });
  return Orbifold2D(o.orientable(), o.genus(), std::move(orders));
}

/// chi(|Sigma|) - sum_i (1 - 1/n_i), exact.
inline Rational euler_characteristic(Orbifold2D const& o) {
  Rational chi(o.surface_euler_characteristic());
  for (auto n : o.cone_orders()) chi -= Rational(1) - Rational(1, n);
  return chi;
}

/// Orbifold fundamental group of RP^2(n_1, ..., n_k):
/// < a, q_1, ..., q_k | q_1^n_1, ..., q_k^n_k, q_1 ... q_k a^2 >.
/// A single cone point's generator is named q.
inline GroupPresentation pi1orb_presentation_rp2(std::span<std::int64_t const> cone_orders) {
  std::vector<std::string> names{"a"};
  for (std::size_t i = 0; i < cone_orders.size(); ++i) {
    if (cone_orders[i] < 2) {
      throw std::invalid_argument("cone orders must be >= 2; normalize the orbifold first");
    }
    names.push_back(cone_orders.size() == 1 ? "q" : "q" + std::to_string(i + 1));
  }
  GroupPresentation p(names, {});
  Word product;
  for (std::size_t i = 0; i < cone_orders.size(); ++i) {
    p.add_relator(Word::power(i + 1, cone_orders[i]));
    product = product * Word::power(i + 1, 1);
  }
  p.add_relator(product * Word::power(0, 2));
  return p;
}

/// Finiteness of pi_1^orb(RP^2(n_1, ..., n_k)).
///
/// When finite the group is cyclic of order 2n (n the single cone order, or 1).
/// When infinite, chi_witness holds chi(RP^2(n_1, n_2)) <= 0 for the first two orders.
struct FinitenessVerdict {
  bool finite = false;
  std::int64_t cyclic_order = 0;
  Rational chi_witness{0};
};

inline FinitenessVerdict is_finite_pi1orb_rp2(std::span<std::int64_t const> cone_orders) {
  for (auto n : cone_orders) {
    if (n < 2) throw std::invalid_argument("cone orders must be >= 2; normalize the orbifold first");
  }
  FinitenessVerdict v;
  if (cone_orders.size() <= 1) {
    v.finite = true;
    v.cyclic_order = 2 * (cone_orders.empty() ? 1 : cone_orders[0]);
    return v;
  }
  v.chi_witness = euler_characteristic(Orbifold2D::projective_plane({cone_orders[0], cone_orders[1]}));
  return v;
}

/// Same decision for an orbifold value; only RP^2 bases are supported.
inline FinitenessVerdict is_finite_pi1orb(Orbifold2D const& o) {
  if (!o.is_projective_plane()) {
    throw UnsupportedBase("finiteness is decided only for RP^2 bases");
  }
  auto const n = normalize_orbifold(o);
  return is_finite_pi1orb_rp2(n.cone_orders());
}

/// Text form: S2(...), RP2(...), Sg<g>(...) for orientable genus g >= 1,
/// N<g>(...) for non-orientable genus g >= 2.
inline std::string to_string(Orbifold2D const& o) {
  std::string out;
  if (o.orientable()) {
    out = o.genus() == 0 ? "S2" : "Sg" + std::to_string(o.genus());
  } else {
    out = o.genus() == 1 ? "RP2" : "N" + std::to_string(o.genus());
  }
  out += '(';
  for (std::size_t i = 0; i < o.cone_orders().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(o.cone_orders()[i]);
  }
  return out + ')';
}

namespace detail {

inline Orbifold2D parse_orbifold(Cursor& cur) {
  bool orientable = true;
  std::int64_t genus = 0;
  std::size_t const at = cur.position();
  if (cur.consume("RP2")) {
    orientable = false;
    genus = 1;
  } else if (cur.consume("S2")) {
  } else if (cur.consume("Sg")) {
    genus = cur.integer();
    if (genus < 1) {
      cur.seek(at);
      cur.fail("orientable genus >= 1 after 'Sg'");
    }
  } else if (cur.consume('N')) {
    orientable = false;
    genus = cur.integer();
    if (genus < 2) {
      cur.seek(at);
      cur.fail("non-orientable genus >= 2 after 'N'");
    }
  } else {
    cur.fail("'S2', 'RP2', 'Sg<g>' or 'N<g>'");
  }
  std::vector<std::int64_t> orders;
  if (cur.consume('(')) {
    if (!cur.consume(')')) {
      do {
        std::size_t const num_at = cur.position();
        auto const n = cur.integer();
        if (n < 1) {
          cur.seek(num_at);
          cur.fail("cone order >= 1");
        }
        orders.push_back(n);
      } while (cur.consume(','));
      cur.expect(')');
    }
  }
  return Orbifold2D(orientable, genus, std::move(orders));
}

}  // namespace detail

inline Orbifold2D parse_orbifold(std::string_view text) {
  detail::Cursor cur(text);
  auto o = detail::parse_orbifold(cur);
  cur.expect_end();
  return o;
}

}  // namespace seifert_lens
