#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "metacyclic.hpp"
#include "orbifold.hpp"
#include "presentation.hpp"
#include "text.hpp"

namespace seifert_lens {

/// Inverse of a modulo m (m >= 1, gcd(a, m) = 1), in [0, m).
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = ((a % m) + m) % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t const q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) throw std::invalid_argument("no inverse: arguments are not coprime");
  return ((old_s % m) + m) % m;
}

/// Oriented lens space L(p, q).
///
/// `q` is the canonical representative min(q mod p, q^-1 mod p) of the
/// oriented class; `q_oriented` keeps q mod p as supplied.
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t q_oriented = 0;

  friend bool operator==(LensSpace const& a, LensSpace const& b) {
    return a.p == b.p && a.q == b.q;
  }
};

inline LensSpace normalize_lens(std::int64_t p, std::int64_t q) {
  if (p <= 0) throw std::invalid_argument("lens space needs p >= 1");
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("lens space needs gcd(p, q) = 1, got L(" + std::to_string(p) +
                                "," + std::to_string(q) + ")");
  }
  std::int64_t const r = ((q % p) + p) % p;
  return LensSpace{p, std::min(r, inverse_mod(r, p)), r};
}

inline std::string to_string(LensSpace const& l) {
  return "L(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
}

inline LensSpace parse_lens(std::string_view text) {
  detail::Cursor cur(text);
  cur.expect('L');
  cur.expect('(');
  std::size_t const at = cur.position();
  auto const p = cur.integer();
  cur.expect(',');
  auto const q = cur.integer();
  cur.expect(')');
  cur.expect_end();
  if (p <= 0 || std::gcd(p, q) != 1) {
    cur.seek(at);
    cur.fail("coprime p >= 1 and q");
  }
  return normalize_lens(p, q);
}

/// Canonical oriented classes L(p, q) for one p, in increasing q.
inline std::vector<LensSpace> lens_classes(std::int64_t p) {
  std::vector<LensSpace> out;
  if (p == 1) return {normalize_lens(1, 0)};
  for (std::int64_t q = 1; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    auto const l = normalize_lens(p, q);
    if (l.q == q) out.push_back(l);
  }
  return out;
}

struct Fiber {
  std::int64_t alpha = 1;
  std::int64_t beta = 0;
  friend bool operator==(Fiber const&, Fiber const&) = default;
};

/// Seifert invariants M(-1; b; (alpha_1, beta_1), ..., (alpha_k, beta_k))
/// over the non-orientable base RP^2 (base genus -1).
struct SeifertInvariants {
  std::int64_t base_genus = -1;
  std::int64_t euler_term = 0;
  std::vector<Fiber> fibers;

  void validate() const {
    if (base_genus != -1) {
      throw UnsupportedBase("only the non-orientable base RP^2 (genus -1) is supported");
    }
    for (auto const& f : fibers) {
      if (f.alpha < 1) throw std::invalid_argument("fiber multiplicity must be >= 1");
      if (std::gcd(f.alpha, f.beta) != 1) {
        throw std::invalid_argument("fiber invariants (" + std::to_string(f.alpha) + "," +
                                    std::to_string(f.beta) + ") are not coprime");
      }
    }
  }

  friend bool operator==(SeifertInvariants const&, SeifertInvariants const&) = default;
};

inline std::string to_string(SeifertInvariants const& s) {
  std::string out = "M(" + std::to_string(s.base_genus) + ";";
  if (s.euler_term != 0 || s.fibers.empty()) out += " " + std::to_string(s.euler_term) + ";";
  for (std::size_t i = 0; i < s.fibers.size(); ++i) {
    out += i ? ", " : " ";
    out += "(" + std::to_string(s.fibers[i].alpha) + "," + std::to_string(s.fibers[i].beta) + ")";
  }
  if (out.back() == ';') out.pop_back();
  return out + ")";
}

/// Parses `M(-1; b; (a1,b1), (a2,b2), ...)`; the `b;` part is optional.
inline SeifertInvariants parse_seifert(std::string_view text) {
  detail::Cursor cur(text);
  SeifertInvariants s;
  cur.expect('M');
  cur.expect('(');
  std::size_t const genus_at = cur.position();
  s.base_genus = cur.integer();
  if (s.base_genus != -1) {
    cur.seek(genus_at);
    cur.fail("base genus -1 (RP^2)");
  }
  cur.expect(';');
  bool fibers_allowed = true;
  if (cur.peek() != '(' && cur.peek() != ')') {
    s.euler_term = cur.integer();
    fibers_allowed = cur.consume(';');
  }
  if (fibers_allowed && cur.peek() == '(') {
    do {
      std::size_t const at = cur.position();
      cur.expect('(');
      Fiber f;
      f.alpha = cur.integer();
      cur.expect(',');
      f.beta = cur.integer();
      cur.expect(')');
      if (f.alpha < 1 || std::gcd(f.alpha, f.beta) != 1) {
        cur.seek(at);
        cur.fail("fiber (alpha,beta) with alpha >= 1 and gcd(alpha,beta) = 1");
      }
      s.fibers.push_back(f);
    } while (cur.consume(','));
  }
  cur.expect(')');
  cur.expect_end();
  return s;
}

/// Absorbs the Euler term and every (1, c) fiber into a genuine singular
/// fiber via beta -> beta + b alpha. With no genuine fiber the result is the
/// single fiber (1, b). With several genuine fibers, the absorption goes into
/// the first one and the rest are kept.
inline SeifertInvariants normalize_seifert(SeifertInvariants const& s) {
  s.validate();
  std::int64_t b = s.euler_term;
  std::vector<Fiber> genuine;
  for (auto const& f : s.fibers) {
    if (f.alpha == 1) {
      b += f.beta;
    } else {
      genuine.push_back(f);
    }
  }
  SeifertInvariants out;
  if (genuine.empty()) {
    out.fibers = {Fiber{1, b}};
  } else {
    genuine.front().beta += b * genuine.front().alpha;
    out.fibers = std::move(genuine);
  }
  return out;
}

/// Both presentations of pi_1(M(-1; (n, beta))), with beta made positive.
///
/// three_generator: < a, q, h | a^-1 h a h, h^-1 q^-1 h q, q^n h^beta, q a^2 >
/// two_generator:   < a, h | a^-1 h a h, a^(2n) h^-beta >
/// generator_inverted records the substitution h -> h^-1 used when the input
/// beta was negative.
struct Pi1Presentations {
  GroupPresentation three_generator;
  GroupPresentation two_generator;
  std::int64_t n = 1;
  std::int64_t beta = 0;
  bool generator_inverted = false;
};

inline Pi1Presentations pi1_presentation(std::int64_t n, std::int64_t beta) {
  if (n < 1) throw std::invalid_argument("fiber multiplicity must be >= 1");
  if (std::gcd(n, beta) != 1) throw std::invalid_argument("fiber invariants are not coprime");
  Pi1Presentations out;
  out.n = n;
  out.generator_inverted = beta < 0;
  out.beta = beta < 0 ? -beta : beta;

  GroupPresentation three({"a", "q", "h"}, {});
  Word const a = Word::power(0, 1);
  Word const q = Word::power(1, 1);
  Word const h = Word::power(2, 1);
  three.add_relation(a.inverse() * h * a, h.inverse());
  three.add_relator(h.inverse() * q.inverse() * h * q);
  three.add_relator(Word::power(1, n) * Word::power(2, out.beta));
  three.add_relator(q * Word::power(0, 2));
  out.three_generator = std::move(three);
  out.two_generator = twisted_presentation(n, out.beta);
  return out;
}

/// Presentations for a normalized single-fiber datum M(-1; (n, beta)).
inline Pi1Presentations pi1_presentation(SeifertInvariants const& s) {
  s.validate();
  if (s.euler_term != 0 || s.fibers.size() != 1) {
    throw std::invalid_argument("pi1_presentation needs a normalized single-fiber datum");
  }
  return pi1_presentation(s.fibers[0].alpha, s.fibers[0].beta);
}

enum class NotLensReason {
  None,
  InfiniteBaseGroup,  // at least two singular fibers: pi_1^orb of the base is infinite
  InfinitePi1,        // beta = 0
  NonCyclicPi1,       // |beta| > 1: metacyclic, non-abelian
};

inline std::string to_string(NotLensReason r) {
  switch (r) {
    case NotLensReason::None: return "none";
    case NotLensReason::InfiniteBaseGroup: return "infinite-base-group";
    case NotLensReason::InfinitePi1: return "infinite-pi1";
    case NotLensReason::NonCyclicPi1: return "non-cyclic-pi1";
  }
  return "unknown";
}

struct Recognition {
  SeifertInvariants normalized;
  std::optional<LensSpace> lens;
  NotLensReason reason = NotLensReason::None;
  /// |pi_1| = 4 n |beta| when finite.
  std::optional<std::int64_t> pi1_order;

  bool is_lens() const noexcept { return lens.has_value(); }
};

/// Decides whether M(-1; ...) is a lens space. M(-1; (n, +1)) is L(4n, 2n-1)
/// and M(-1; (n, -1)) is L(4n, 2n+1); every other datum is not a lens space.
inline Recognition recognize_lens(SeifertInvariants const& s) {
  Recognition r;
  r.normalized = normalize_seifert(s);
  if (r.normalized.fibers.size() >= 2) {
    r.reason = NotLensReason::InfiniteBaseGroup;
    return r;
  }
  auto const [n, beta] = r.normalized.fibers.front();
  if (beta == 0) {
    r.reason = NotLensReason::InfinitePi1;
    return r;
  }
  std::int64_t const abs_beta = beta < 0 ? -beta : beta;
  r.pi1_order = 4 * n * abs_beta;
  if (abs_beta != 1) {
    r.reason = NotLensReason::NonCyclicPi1;
    return r;
  }
  r.lens = normalize_lens(4 * n, beta > 0 ? 2 * n - 1 : 2 * n + 1);
  return r;
}

struct Fibration {
  SeifertInvariants invariants;
  Orbifold2D base = Orbifold2D::projective_plane();
  LensSpace total_space;
};

/// All Seifert fibrations of L over a base RP^2(n). Non-empty exactly for
/// L(4n, 2n-1) and L(4n, 2n+1), each of which has one.
inline std::vector<Fibration> classify_fibrations(LensSpace const& lens) {
  if (lens.p % 4 != 0) return {};
  std::int64_t const n = lens.p / 4;
  auto const canonical = normalize_lens(lens.p, lens.q);
  std::int64_t beta = 0;
  if (canonical.q == normalize_lens(lens.p, 2 * n - 1).q) {
    beta = 1;
  } else if (canonical.q == normalize_lens(lens.p, 2 * n + 1).q) {
    beta = -1;
  } else {
    return {};
  }
  Fibration f;
  f.invariants.fibers = {Fiber{n, beta}};
  f.base = normalize_orbifold(Orbifold2D::projective_plane({n}));
  f.total_space = normalize_lens(lens.p, beta > 0 ? 2 * n - 1 : 2 * n + 1);
  return {f};
}

}  // namespace seifert_lens
