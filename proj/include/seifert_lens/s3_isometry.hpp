#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rational.hpp"
#include "seifert.hpp"
#include "text.hpp"

namespace seifert_lens {

// ---------------------------------------------------------------------------
// Exact phase maps
// ---------------------------------------------------------------------------

/// Isometry of S^3 in C^2 of the form
///
///   (z1, z2) -> (e^{i pi alpha} C(z_s(1)), e^{i pi beta} C(z_s(2)))
///
/// where s swaps the coordinates or not, and C is complex conjugation or the
/// identity. Angles are exact rationals in units of pi, reduced into [0, 2).
///
///   Diagonal               (e^{i pi a} z1,  e^{i pi b} z2)
///   DiagonalConjugate      (e^{i pi a} ~z1, e^{i pi b} ~z2)
///   Swap                   (e^{i pi a} z2,  e^{i pi b} z1)
///   AntidiagonalConjugate  (e^{i pi a} ~z2, e^{i pi b} ~z1)
///
/// All four kinds lie in SO(4), and the set is closed under composition and
/// under conjugation by the reflection (z1, z2) -> (z1, ~z2).
class PhaseMap {
 public:
  enum class Kind { Diagonal, DiagonalConjugate, Swap, AntidiagonalConjugate };

  PhaseMap(Kind kind, Rational alpha, Rational beta)
      : kind_(kind), alpha_(mod_rational(alpha, 2)), beta_(mod_rational(beta, 2)) {}

  static PhaseMap identity() { return diagonal(0, 0); }
  static PhaseMap diagonal(Rational a, Rational b) { return {Kind::Diagonal, a, b}; }
  static PhaseMap antidiagonal_conjugate(Rational a, Rational b) {
    return {Kind::AntidiagonalConjugate, a, b};
  }
  static PhaseMap swap(Rational a, Rational b) { return {Kind::Swap, a, b}; }
  static PhaseMap diagonal_conjugate(Rational a, Rational b) {
    return {Kind::DiagonalConjugate, a, b};
  }

  Kind kind() const noexcept { return kind_; }
  Rational const& alpha() const noexcept { return alpha_; }
  Rational const& beta() const noexcept { return beta_; }

  bool swaps() const noexcept {
    return kind_ == Kind::Swap || kind_ == Kind::AntidiagonalConjugate;
  }
  bool conjugates() const noexcept {
    return kind_ == Kind::DiagonalConjugate || kind_ == Kind::AntidiagonalConjugate;
  }
  bool is_identity() const noexcept {
    return kind_ == Kind::Diagonal && alpha_.numerator() == 0 && beta_.numerator() == 0;
  }

  static Kind kind_of(bool swaps, bool conjugates) {
    if (swaps) return conjugates ? Kind::AntidiagonalConjugate : Kind::Swap;
    return conjugates ? Kind::DiagonalConjugate : Kind::Diagonal;
  }

  /// Numerical action on a point of C^2.
  std::pair<std::complex<double>, std::complex<double>> apply(std::complex<double> z1,
                                                              std::complex<double> z2) const {
    if (swaps()) std::swap(z1, z2);
    if (conjugates()) {
      z1 = std::conj(z1);
      z2 = std::conj(z2);
    }
    return {phase(alpha_) * z1, phase(beta_) * z2};
  }

  static std::complex<double> phase(Rational const& r) {
    double const t = std::numbers::pi * static_cast<double>(r.numerator()) /
                     static_cast<double>(r.denominator());
    return {std::cos(t), std::sin(t)};
  }

  friend bool operator==(PhaseMap const&, PhaseMap const&) = default;

 private:
  Kind kind_;
  Rational alpha_;
  Rational beta_;
};

/// f o g (g applied first).
inline PhaseMap compose(PhaseMap const& f, PhaseMap const& g) {
  // Output coordinate i of f reads coordinate s_f(i) of g's output.
  Rational const& g_first = f.swaps() ? g.beta() : g.alpha();
  Rational const& g_second = f.swaps() ? g.alpha() : g.beta();
  Rational const sign = f.conjugates() ? -1 : 1;
  return PhaseMap(PhaseMap::kind_of(f.swaps() != g.swaps(), f.conjugates() != g.conjugates()),
                  f.alpha() + sign * g_first, f.beta() + sign * g_second);
}

inline PhaseMap power(PhaseMap const& f, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative powers are not supported");
  PhaseMap result = PhaseMap::identity();
  PhaseMap base = f;
  while (k > 0) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

/// c o f o c with c(z1, z2) = (z1, ~z2), an orientation-reversing reflection.
inline PhaseMap conjugate_by_reflection(PhaseMap const& f) {
  // c o f o c flips the sign of the second phase and toggles conjugation
  // exactly when f swaps coordinates.
  bool const conj = f.swaps() ? !f.conjugates() : f.conjugates();
  return PhaseMap(PhaseMap::kind_of(f.swaps(), conj), f.alpha(), -f.beta());
}

/// Least k in [1, max] with f^k = id, or nullopt.
inline std::optional<std::int64_t> order_of(PhaseMap const& f, std::int64_t max = 1'000'000) {
  if (max < 1) throw std::invalid_argument("order_of needs max >= 1");
  PhaseMap g = f;
  for (std::int64_t k = 1; k <= max; ++k) {
    if (g.is_identity()) return k;
    g = compose(f, g);
  }
  return std::nullopt;
}

/// Whether f has a fixed point on S^3, from the closed-form conditions:
/// Diagonal needs a trivial phase; Swap needs alpha + beta = 0 (mod 2);
/// AntidiagonalConjugate needs alpha = beta (mod 2); DiagonalConjugate
/// always fixes (e^{i pi alpha / 2}, 0).
inline bool has_fixed_point(PhaseMap const& f) {
  switch (f.kind()) {
    case PhaseMap::Kind::Diagonal: return f.alpha().numerator() == 0 || f.beta().numerator() == 0;
    case PhaseMap::Kind::DiagonalConjugate: return true;
    case PhaseMap::Kind::Swap: return mod_rational(f.alpha() + f.beta(), 2).numerator() == 0;
    case PhaseMap::Kind::AntidiagonalConjugate: return f.alpha() == f.beta();
  }
  return true;
}

struct FreenessResult {
  bool free = true;
  std::optional<std::int64_t> first_fixed_power;
};

/// Checks that f^k has no fixed point for every k in [1, order - 1].
inline FreenessResult is_free_action(PhaseMap const& f, std::int64_t order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  PhaseMap g = f;
  for (std::int64_t k = 1; k < order; ++k) {
    if (has_fixed_point(g)) return {false, k};
    g = compose(f, g);
  }
  return {};
}

/// S^3 / <f> for a free diagonal f of order p.
///
/// Writing f = diag(2a/p, 2b/p), the power f^j with j a = 1 (mod p) is the
/// standard generator diag(2/p, 2q/p), so the quotient is L(p, q) with
/// q = b a^-1 (mod p).
inline LensSpace quotient_lens(PhaseMap const& f) {
  if (f.kind() != PhaseMap::Kind::Diagonal) {
    throw std::invalid_argument("quotient_lens needs a diagonal phase map");
  }
  auto const order = order_of(f);
  if (!order) throw std::invalid_argument("phase map has no finite order");
  std::int64_t const p = *order;
  if (!is_free_action(f, p).free) throw std::invalid_argument("action is not free");
  if (p == 1) return normalize_lens(1, 0);
  Rational const a = f.alpha() * Rational(p, 2);
  Rational const b = f.beta() * Rational(p, 2);
  if (!is_integer(a) || !is_integer(b)) throw std::logic_error("phase is not a p-th root of unity");
  std::int64_t const q = (b.numerator() % p) * inverse_mod(a.numerator(), p) % p;
  return normalize_lens(p, q);
}

inline Rational half_turn_over(std::int64_t n) { return Rational(1, 2 * n); }

/// A_+ (z1, z2) = (e^{i pi / 2n} ~z2, e^{-i pi / 2n} ~z1).
inline PhaseMap a_plus(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return PhaseMap::antidiagonal_conjugate(half_turn_over(n), -half_turn_over(n));
}

/// A_qtilde (z1, z2) = (e^{i pi / 2n} z1, e^{i pi qtilde / 2n} z2).
inline PhaseMap a_qtilde(std::int64_t n, std::int64_t qtilde) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return PhaseMap::diagonal(half_turn_over(n), Rational(qtilde, 2 * n));
}

/// A_- = c o A_+ o c, the conjugate of A_+ by (z1, z2) -> (z1, ~z2).
inline PhaseMap a_minus(std::int64_t n) { return conjugate_by_reflection(a_plus(n)); }

/// Diagonal model of A_-: c o A_{2n-1} o c = diag(1/2n, (2n+1)/2n). It is
/// conjugate to A_- through c o Phi o c.
inline PhaseMap a_minus_diagonal_model(std::int64_t n) {
  return conjugate_by_reflection(a_qtilde(n, 2 * n - 1));
}

inline std::string to_string(PhaseMap const& f) {
  std::string name;
  switch (f.kind()) {
    case PhaseMap::Kind::Diagonal: name = "diag"; break;
    case PhaseMap::Kind::DiagonalConjugate: name = "diagc"; break;
    case PhaseMap::Kind::Swap: name = "antidiag"; break;
    case PhaseMap::Kind::AntidiagonalConjugate: name = "antidiagc"; break;
  }
  return name + "(" + to_string(f.alpha()) + ", " + to_string(f.beta()) + ")";
}

namespace detail {

inline Rational parse_rational(Cursor& cur) {
  std::int64_t const num = cur.integer();
  std::int64_t den = 1;
  if (cur.consume('/')) {
    std::size_t const at = cur.position();
    den = cur.integer();
    if (den <= 0) {
      cur.seek(at);
      cur.fail("positive denominator");
    }
  }
  return Rational(num, den);
}

}  // namespace detail

/// Parses `diag(a/b, c/d)`, `diagc(...)`, `antidiag(...)`, `antidiagc(...)`.
inline PhaseMap parse_phase_map(std::string_view text) {
  detail::Cursor cur(text);
  PhaseMap::Kind kind;
  if (cur.consume("antidiagc")) {
    kind = PhaseMap::Kind::AntidiagonalConjugate;
  } else if (cur.consume("antidiag")) {
    kind = PhaseMap::Kind::Swap;
  } else if (cur.consume("diagc")) {
    kind = PhaseMap::Kind::DiagonalConjugate;
  } else if (cur.consume("diag")) {
    kind = PhaseMap::Kind::Diagonal;
  } else {
    cur.fail("'diag', 'diagc', 'antidiag' or 'antidiagc'");
  }
  cur.expect('(');
  Rational const a = detail::parse_rational(cur);
  cur.expect(',');
  Rational const b = detail::parse_rational(cur);
  cur.expect(')');
  cur.expect_end();
  return PhaseMap(kind, a, b);
}

// ---------------------------------------------------------------------------
// Quaternions and SO(4)
// ---------------------------------------------------------------------------

/// a0 + a1 i + a2 j + a3 k, with i j = k.
struct Quaternion {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;

  Quaternion operator*(Quaternion const& b) const {
    return {a0 * b.a0 - a1 * b.a1 - a2 * b.a2 - a3 * b.a3,
            a0 * b.a1 + a1 * b.a0 + a2 * b.a3 - a3 * b.a2,
            a0 * b.a2 - a1 * b.a3 + a2 * b.a0 + a3 * b.a1,
            a0 * b.a3 + a1 * b.a2 - a2 * b.a1 + a3 * b.a0};
  }
  Quaternion operator*(double s) const { return {a0 * s, a1 * s, a2 * s, a3 * s}; }
  Quaternion operator+(Quaternion const& b) const {
    return {a0 + b.a0, a1 + b.a1, a2 + b.a2, a3 + b.a3};
  }
  double norm() const { return std::sqrt(a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3); }

  Eigen::Vector4d vector() const { return {a0, a1, a2, a3}; }
  static Quaternion from_vector(Eigen::Vector4d const& v) { return {v[0], v[1], v[2], v[3]}; }

  /// z1 + z2 j with z1 = a0 + a1 i, z2 = a2 + a3 i.
  static Quaternion from_complex(std::complex<double> z1, std::complex<double> z2) {
    return {z1.real(), z1.imag(), z2.real(), z2.imag()};
  }
  std::pair<std::complex<double>, std::complex<double>> to_complex() const {
    return {{a0, a1}, {a2, a3}};
  }

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
};

/// Real 4x4 matrix acting on column vectors in the basis (1, i, j, k).
using Isometry4 = Eigen::Matrix4d;

inline constexpr double kMatrixTolerance = 1e-9;

/// Matrix of x -> u x.
inline Isometry4 left_multiplication(Quaternion const& u) {
  Isometry4 m;
  Quaternion const basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  for (int c = 0; c < 4; ++c) m.col(c) = (u * basis[c]).vector();
  return m;
}

/// Matrix of x -> x u.
inline Isometry4 right_multiplication(Quaternion const& u) {
  Isometry4 m;
  Quaternion const basis[4] = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                               Quaternion::k()};
  for (int c = 0; c < 4; ++c) m.col(c) = (basis[c] * u).vector();
  return m;
}

/// Realization of a phase map under the identification z1 + z2 j.
inline Isometry4 to_matrix(PhaseMap const& f) {
  Isometry4 m;
  for (int c = 0; c < 4; ++c) {
    auto const [z1, z2] = Quaternion::from_vector(Eigen::Vector4d::Unit(c)).to_complex();
    auto const [w1, w2] = f.apply(z1, z2);
    m.col(c) = Quaternion::from_complex(w1, w2).vector();
  }
  return m;
}

/// The reflection c(z1, z2) = (z1, ~z2); determinant -1.
inline Isometry4 reflection_matrix() { return Eigen::Vector4d(1, 1, 1, -1).asDiagonal(); }

inline bool is_special_orthogonal(Isometry4 const& m, double tol = kMatrixTolerance) {
  return (m.transpose() * m - Isometry4::Identity()).cwiseAbs().maxCoeff() < tol &&
         std::abs(m.determinant() - 1.0) < tol;
}

inline double max_deviation(Isometry4 const& a, Isometry4 const& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Phi(a) = ((1 + i - j - k) / 2) a.
inline Isometry4 phi_matrix() { return left_multiplication({0.5, 0.5, -0.5, -0.5}); }

/// A_+(a) = -sin(pi/2n) k a + cos(pi/2n) k a i.
inline Isometry4 a_plus_matrix(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double const t = std::numbers::pi / static_cast<double>(2 * n);
  Isometry4 const lk = left_multiplication(Quaternion::k());
  return -std::sin(t) * lk + std::cos(t) * lk * right_multiplication(Quaternion::i());
}

/// A_{2n-1}(a) = sin(pi/2n) i a - cos(pi/2n) i a i.
inline Isometry4 a_2n_minus_1_matrix(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double const t = std::numbers::pi / static_cast<double>(2 * n);
  Isometry4 const li = left_multiplication(Quaternion::i());
  return std::sin(t) * li - std::cos(t) * li * right_multiplication(Quaternion::i());
}

inline Isometry4 a_qtilde_matrix(std::int64_t n, std::int64_t qtilde) {
  if (qtilde % 2 == 0) throw std::invalid_argument("qtilde must be odd");
  return to_matrix(a_qtilde(n, qtilde));
}

/// max |Phi A_+ - A_{2n-1} Phi|.
inline double verify_conjugation(std::int64_t n) {
  Isometry4 const phi = phi_matrix();
  return max_deviation(phi * a_plus_matrix(n), a_2n_minus_1_matrix(n) * phi);
}

/// Same identity transported by the reflection c: with Phi' = c Phi c,
/// returns max |Phi' A_- - (c A_{2n-1} c) Phi'|, where A_- comes from its
/// exact phase map.
inline double verify_conjugation_minus(std::int64_t n) {
  Isometry4 const c = reflection_matrix();
  Isometry4 const phi = c * phi_matrix() * c;
  return max_deviation(phi * to_matrix(a_minus(n)), to_matrix(a_minus_diagonal_model(n)) * phi);
}

/// qtilde in [1, 4n-1] coprime to 4n with trace(A_qtilde) = 2cos(pi/2n) + 2cos(pi qtilde/2n) = 0.
inline std::vector<std::int64_t> trace_scan(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<std::int64_t> out;
  double const base = std::numbers::pi / static_cast<double>(2 * n);
  for (std::int64_t q = 1; q < 4 * n; ++q) {
    if (std::gcd(q, 4 * n) != 1) continue;
    double const trace = 2 * std::cos(base) + 2 * std::cos(base * static_cast<double>(q));
    if (std::abs(trace) < kMatrixTolerance) out.push_back(q);
  }
  return out;
}

}  // namespace seifert_lens
