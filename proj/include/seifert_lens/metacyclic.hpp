#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "error.hpp"
#include "presentation.hpp"
#include "todd_coxeter.hpp"

namespace seifert_lens {

/// < a, h | a^-1 h a h, a^(2n) h^-beta >, the two-generator form of
/// pi_1 of M(-1; (n, beta)). Generator 0 is a, generator 1 is h.
inline GroupPresentation twisted_presentation(std::int64_t n, std::int64_t beta) {
  GroupPresentation p({"a", "h"}, {});
  Word const a = Word::power(0, 1);
  Word const h = Word::power(1, 1);
  p.add_relation(a.inverse() * h * a, h.inverse());
  p.add_relation(Word::power(0, 2 * n), Word::power(1, beta));
  return p;
}

/// Data of the extension Z_m >-> G ->> Z_k with G = < x, y | x^k = y^l, x^-1 y x = y^twist >.
struct MetacyclicCertificate {
  Word normal_generator;
  std::int64_t normal_order = 0;    // m
  std::int64_t quotient_order = 0;  // k
  std::int64_t twist = 0;           // n_H
  std::int64_t l = 0;
  std::size_t group_order = 0;
  std::size_t normal_index = 0;
  std::size_t normal_generator_order = 0;
};

namespace detail {

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  __int128 result = 1;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

}  // namespace detail

/// Certifies that pi_1(M(-1; (n, beta))) is the metacyclic extension
/// Z_(2 beta) >-> G ->> Z_(2n) with normal subgroup generated by h.
///
/// Sets m = 2 beta, k = 2n, twist = 2 beta - 1, l = beta and checks
///   * m | twist^k - 1 and m | l (twist - 1),
///   * [G : <h>] = 2n by coset enumeration,
///   * |G| = 4 n beta, and h has order 2 beta in the regular representation,
///   * |G| = k m, so every element is uniquely a^i h^j with 0 <= i < k, 0 <= j < m.
///
/// Throws CosetLimitExceeded when an enumeration does not finish, and
/// CertificateFailure if any check fails.
inline MetacyclicCertificate verify_metacyclic(std::int64_t n, std::int64_t beta,
                                               std::size_t limit = kDefaultCosetLimit) {
  if (n < 1 || beta < 1) throw std::invalid_argument("verify_metacyclic needs n, beta >= 1");
  if (std::gcd(n, beta) != 1) throw std::invalid_argument("verify_metacyclic needs gcd(n, beta) = 1");

  MetacyclicCertificate cert;
  cert.normal_generator = Word::power(1, 1);
  cert.normal_order = 2 * beta;
  cert.quotient_order = 2 * n;
  cert.twist = 2 * beta - 1;
  cert.l = beta;

  auto fail = [&](std::string const& what) {
    throw CertificateFailure("metacyclic certificate failed for n=" + std::to_string(n) +
                             ", beta=" + std::to_string(beta) + ": " + what);
  };

  if (detail::pow_mod(cert.twist, cert.quotient_order, cert.normal_order) != 1 % cert.normal_order) {
    fail("m does not divide twist^k - 1");
  }
  if ((cert.l * (cert.twist - 1)) % cert.normal_order != 0) fail("m does not divide l (twist - 1)");

  auto const p = twisted_presentation(n, beta);

  auto const coset_table = todd_coxeter(p, {cert.normal_generator}, limit);
  if (!coset_table.complete()) throw CosetLimitExceeded(limit);
  cert.normal_index = coset_table.size();
  if (cert.normal_index != static_cast<std::size_t>(cert.quotient_order)) {
    fail("[G : <h>] = " + std::to_string(cert.normal_index));
  }

  auto const regular = todd_coxeter(p, std::span<Word const>{}, limit);
  if (!regular.complete()) throw CosetLimitExceeded(limit);
  if (!regular.verify(p, {})) fail("regular coset table does not verify");
  cert.group_order = regular.size();
  if (cert.group_order != static_cast<std::size_t>(4 * n * beta)) {
    fail("|G| = " + std::to_string(cert.group_order));
  }
  cert.normal_generator_order = regular.cycle_length(0, Letter{1, 1});
  if (cert.normal_generator_order != static_cast<std::size_t>(cert.normal_order)) {
    fail("h has order " + std::to_string(cert.normal_generator_order));
  }
  if (cert.group_order !=
      static_cast<std::size_t>(cert.quotient_order) * static_cast<std::size_t>(cert.normal_order)) {
    fail("|G| != k m");
  }
  return cert;
}

}  // namespace seifert_lens
