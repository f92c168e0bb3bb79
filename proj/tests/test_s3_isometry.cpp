#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <seifert_lens/s3_isometry.hpp>

#include "oracles.hpp"

using namespace seifert_lens;

namespace {

constexpr double kTol = 1e-9;

oracle::SymbolicMap symbolic(PhaseMap const& f, std::int64_t N) {
  oracle::SymbolicMap s{N};
  s.source = f.swaps() ? std::array<int, 2>{1, 0} : std::array<int, 2>{0, 1};
  s.conj = f.conjugates();
  auto to_int = [&](Rational const& r) {
    Rational const scaled = r * Rational(N);
    EXPECT_EQ(scaled.denominator(), 1);
    return scaled.numerator();
  };
  s.phase = {to_int(f.alpha()), to_int(f.beta())};
  return s;
}

Eigen::Matrix4d oracle_matrix(PhaseMap const& f) {
  auto angle = [](Rational const& r) {
    return std::numbers::pi * static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  };
  return oracle::complex_map_matrix(f.swaps(), f.conjugates(), angle(f.alpha()), angle(f.beta()));
}

std::vector<PhaseMap> sample_maps() {
  std::vector<PhaseMap> out;
  for (auto kind : {PhaseMap::Kind::Diagonal, PhaseMap::Kind::DiagonalConjugate, PhaseMap::Kind::Swap,
                    PhaseMap::Kind::AntidiagonalConjugate}) {
    for (auto [a, b] : {std::pair{Rational(1, 3), Rational(-1, 4)}, std::pair{Rational(0), Rational(5, 6)},
                        std::pair{Rational(7, 5), Rational(7, 5)}, std::pair{Rational(1, 2), Rational(3, 2)}}) {
      out.emplace_back(kind, a, b);
    }
  }
  return out;
}

}  // namespace

TEST(PhaseMap, AnglesReducedModTwo) {
  auto const f = PhaseMap::diagonal(Rational(-1, 3), Rational(9, 4));
  EXPECT_EQ(f.alpha(), Rational(5, 3));
  EXPECT_EQ(f.beta(), Rational(1, 4));
}

TEST(PhaseMap, Compose) {
  EXPECT_EQ(compose(a_plus(3), a_plus(3)), PhaseMap::diagonal(Rational(1, 3), Rational(-1, 3)));
  for (auto const& f : sample_maps()) {
    EXPECT_EQ(compose(PhaseMap::identity(), f), f);
    EXPECT_EQ(compose(f, PhaseMap::identity()), f);
  }
  Rational const a(1, 5), b(2, 7), c(3, 4), d(-1, 6);
  EXPECT_EQ(compose(PhaseMap::antidiagonal_conjugate(a, b), PhaseMap::antidiagonal_conjugate(c, d)),
            PhaseMap::diagonal(a - d, b - c));
}

TEST(PhaseMap, CompositionMatchesMatrices) {
  auto const maps = sample_maps();
  for (auto const& f : maps) {
    for (auto const& g : maps) {
      EXPECT_LT(max_deviation(to_matrix(compose(f, g)), oracle_matrix(f) * oracle_matrix(g)), kTol)
          << to_string(f) << " o " << to_string(g);
    }
  }
}

TEST(PhaseMap, CompositionIsAssociative) {
  auto const maps = sample_maps();
  for (std::size_t i = 0; i < maps.size(); i += 3)
    for (std::size_t j = 1; j < maps.size(); j += 2)
      for (std::size_t k = 0; k < maps.size(); k += 5)
        EXPECT_EQ(compose(maps[i], compose(maps[j], maps[k])), compose(compose(maps[i], maps[j]), maps[k]));
}

TEST(PhaseMap, RealizationAgreesOnRandomPoints) {
  std::mt19937 rng(99);
  std::normal_distribution<double> g;
  std::vector<PhaseMap> maps = sample_maps();
  for (std::int64_t n = 1; n <= 6; ++n) {
    maps.push_back(a_plus(n));
    maps.push_back(a_minus(n));
    maps.push_back(a_qtilde(n, 2 * n - 1));
    maps.push_back(a_minus_diagonal_model(n));
  }
  for (auto const& f : maps) {
    Isometry4 const m = to_matrix(f);
    EXPECT_TRUE(is_special_orthogonal(m)) << to_string(f);
    for (int i = 0; i < 100; ++i) {
      Eigen::Vector4d v(g(rng), g(rng), g(rng), g(rng));
      v.normalize();
      auto const [z1, z2] = Quaternion::from_vector(v).to_complex();
      auto const [w1, w2] = f.apply(z1, z2);
      EXPECT_LT((m * v - Quaternion::from_complex(w1, w2).vector()).cwiseAbs().maxCoeff(), kTol);
    }
  }
}

TEST(PhaseMap, OrderOf) {
  EXPECT_EQ(order_of(a_plus(2)), 8);
  EXPECT_EQ(order_of(PhaseMap::diagonal(Rational(1, 2), Rational(1, 2))), 4);
  EXPECT_EQ(order_of(a_minus(3)), 12);
  EXPECT_EQ(order_of(PhaseMap::identity()), 1);
  EXPECT_FALSE(order_of(a_plus(5), 10).has_value());
  EXPECT_THROW(order_of(a_plus(1), 0), std::invalid_argument);
}

TEST(PhaseMap, SquareOfAPlus) {
  for (std::int64_t n = 1; n <= 40; ++n) {
    EXPECT_EQ(power(a_plus(n), 2), PhaseMap::diagonal(Rational(1, n), Rational(-1, n)));
  }
}

TEST(PhaseMap, Freeness) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    EXPECT_TRUE(is_free_action(a_plus(n), 4 * n).free);
  }
  auto const r = is_free_action(PhaseMap::diagonal(Rational(1, 2), Rational(1)), 4);
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.first_fixed_power, 2);
  EXPECT_TRUE(is_free_action(PhaseMap::diagonal(Rational(1, 4), Rational(3, 4)), 8).free);
  EXPECT_FALSE(is_free_action(PhaseMap::diagonal_conjugate(Rational(1, 3), Rational(0)), 2).free);
}

TEST(PhaseMap, FreenessMatchesOracles) {
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (auto const& f : {a_plus(n), a_minus(n), a_qtilde(n, 2 * n - 1), a_qtilde(n, 2 * n + 1),
                          a_qtilde(n, 2 * n), PhaseMap::diagonal(Rational(1, n), Rational(1, 2))}) {
      std::int64_t const N = 4 * n;
      auto const s = symbolic(f, N);
      auto const order = order_of(f);
      ASSERT_TRUE(order);
      oracle::SymbolicMap power_map{N};
      Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
      Eigen::Matrix4d const step = oracle_matrix(f);
      std::optional<std::int64_t> first_fixed;
      for (std::int64_t k = 1; k < *order; ++k) {
        power_map = s.after(power_map);
        m = step * m;
        bool const exact = power_map.has_fixed_point();
        bool const numeric = std::abs((m - Eigen::Matrix4d::Identity()).determinant()) < 1e-9;
        EXPECT_EQ(exact, numeric) << to_string(f) << " ^ " << k;
        EXPECT_EQ(exact, has_fixed_point(power(f, k))) << to_string(f) << " ^ " << k;
        if (exact && !first_fixed) first_fixed = k;
      }
      auto const verdict = is_free_action(f, *order);
      EXPECT_EQ(verdict.free, !first_fixed.has_value()) << to_string(f);
      EXPECT_EQ(verdict.first_fixed_power, first_fixed);
    }
  }
}

TEST(PhaseMap, ReflectionConjugation) {
  Isometry4 const c = reflection_matrix();
  EXPECT_NEAR(c.determinant(), -1.0, kTol);
  for (auto const& f : sample_maps()) {
    EXPECT_LT(max_deviation(to_matrix(conjugate_by_reflection(f)), c * oracle_matrix(f) * c), kTol)
        << to_string(f);
  }
  // A_- (z1, z2) = (e^{i pi / 2n} z2, e^{i pi / 2n} z1)
  EXPECT_EQ(a_minus(3), PhaseMap::swap(Rational(1, 6), Rational(1, 6)));
  EXPECT_EQ(a_minus_diagonal_model(2), PhaseMap::diagonal(Rational(1, 4), Rational(5, 4)));
}

TEST(QuotientLens, Examples) {
  EXPECT_EQ(quotient_lens(a_qtilde(2, 3)), normalize_lens(8, 3));
  EXPECT_EQ(quotient_lens(PhaseMap::diagonal(Rational(2, 5), Rational(4, 5))), normalize_lens(5, 2));
  EXPECT_EQ(quotient_lens(a_minus_diagonal_model(2)), normalize_lens(8, 5));
  EXPECT_EQ(quotient_lens(PhaseMap::diagonal(Rational(4, 5), Rational(2, 5))), normalize_lens(5, 2));
  EXPECT_EQ(quotient_lens(PhaseMap::identity()), normalize_lens(1, 0));
}

TEST(QuotientLens, Errors) {
  EXPECT_THROW(quotient_lens(a_plus(2)), std::invalid_argument);
  EXPECT_THROW(quotient_lens(PhaseMap::diagonal(Rational(1, 2), Rational(1))), std::invalid_argument);
}

TEST(QuotientLens, TransportThroughConjugation) {
  for (std::int64_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(quotient_lens(a_qtilde(n, 2 * n - 1)), normalize_lens(4 * n, 2 * n - 1));
    auto const minus = quotient_lens(a_minus_diagonal_model(n));
    EXPECT_EQ(minus, normalize_lens(4 * n, 2 * n + 1));
    EXPECT_EQ(minus.q, 2 * n + 1);
    EXPECT_EQ(order_of(a_minus(n)), order_of(a_minus_diagonal_model(n)));
  }
}

TEST(Quaternion, HamiltonProductMatchesEigen) {
  std::mt19937 rng(3);
  std::normal_distribution<double> g;
  for (int i = 0; i < 50; ++i) {
    Quaternion const p{g(rng), g(rng), g(rng), g(rng)};
    Quaternion const q{g(rng), g(rng), g(rng), g(rng)};
    EXPECT_LT(((p * q).vector() - oracle::qmul(p.vector(), q.vector())).cwiseAbs().maxCoeff(), 1e-12);
  }
  auto const ij = Quaternion::i() * Quaternion::j();
  EXPECT_EQ(ij.vector(), Quaternion::k().vector());
}

TEST(Isometry, PhiProperties) {
  Isometry4 const phi = phi_matrix();
  EXPECT_TRUE(is_special_orthogonal(phi));
  for (int c = 0; c < 4; ++c) EXPECT_NEAR(phi.col(c).norm(), 1.0, kTol);
  // ((1 + i - j - k) / 2)^6 = 1 by direct quaternion multiplication.
  Eigen::Vector4d const u(0.5, 0.5, -0.5, -0.5);
  Eigen::Vector4d acc(1, 0, 0, 0);
  for (int i = 0; i < 6; ++i) acc = oracle::qmul(u, acc);
  EXPECT_LT((acc - Eigen::Vector4d(1, 0, 0, 0)).cwiseAbs().maxCoeff(), kTol);
  Isometry4 p6 = Isometry4::Identity();
  for (int i = 0; i < 6; ++i) p6 = phi * p6;
  EXPECT_LT(max_deviation(p6, Isometry4::Identity()), kTol);
  Isometry4 p3 = phi * phi * phi;
  EXPECT_GT(max_deviation(p3, Isometry4::Identity()), 0.5);
}

TEST(Isometry, APlusMatrix) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    Isometry4 const m = a_plus_matrix(n);
    EXPECT_TRUE(is_special_orthogonal(m));
    Isometry4 pw = Isometry4::Identity();
    for (std::int64_t k = 0; k < 4 * n; ++k) pw = m * pw;
    EXPECT_LT(max_deviation(pw, Isometry4::Identity()), kTol);
    EXPECT_LT(max_deviation(m, to_matrix(a_plus(n))), kTol);
    EXPECT_NEAR(m.trace(), 0.0, kTol);
  }
  // Image of 1 under A_+ for n = 2: -sin(pi/4) k + cos(pi/4) k i, via Eigen's product.
  double const s = std::sin(std::numbers::pi / 4), c = std::cos(std::numbers::pi / 4);
  Eigen::Vector4d const k(0, 0, 0, 1), i(0, 1, 0, 0), one(1, 0, 0, 0);
  Eigen::Vector4d const expected = -s * oracle::qmul(k, one) + c * oracle::qmul(oracle::qmul(k, one), i);
  EXPECT_LT((a_plus_matrix(2) * one - expected).cwiseAbs().maxCoeff(), kTol);
  EXPECT_LT((expected - Eigen::Vector4d(0, 0, c, -s)).cwiseAbs().maxCoeff(), kTol);
}

TEST(Isometry, AQtildeMatrix) {
  for (std::int64_t n = 1; n <= 10; ++n) {
    EXPECT_LT(max_deviation(a_qtilde_matrix(n, 2 * n - 1), a_2n_minus_1_matrix(n)), kTol);
    EXPECT_TRUE(is_special_orthogonal(a_qtilde_matrix(n, 1)));
  }
  EXPECT_THROW(a_qtilde_matrix(3, 2), std::invalid_argument);
}

TEST(Isometry, Conjugation) {
  for (std::int64_t n : {1, 2, 3, 7, 20, 50}) {
    EXPECT_LT(verify_conjugation(n), kTol) << n;
    EXPECT_LT(verify_conjugation_minus(n), kTol) << n;
  }
  // A_- as a matrix is c A_+ c.
  Isometry4 const c = reflection_matrix();
  for (std::int64_t n = 1; n <= 10; ++n) {
    EXPECT_LT(max_deviation(to_matrix(a_minus(n)), c * a_plus_matrix(n) * c), kTol);
  }
  // A_+ is not conjugate to A_{2n+1} by Phi.
  Isometry4 const phi = phi_matrix();
  EXPECT_GT(max_deviation(phi * a_plus_matrix(3), a_qtilde_matrix(3, 7) * phi), 0.1);
}

TEST(Isometry, TraceScan) {
  EXPECT_EQ(trace_scan(2), (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(trace_scan(1), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(trace_scan(6), (std::vector<std::int64_t>{11, 13}));
  for (std::int64_t n = 1; n <= 50; ++n) {
    EXPECT_EQ(trace_scan(n), (std::vector<std::int64_t>{2 * n - 1, 2 * n + 1}));
    for (auto q : trace_scan(n)) EXPECT_NEAR(a_qtilde_matrix(n, q).trace(), a_plus_matrix(n).trace(), kTol);
  }
}

TEST(PhaseMapText, RoundTripAndErrors) {
  for (auto const& f : sample_maps()) EXPECT_EQ(parse_phase_map(to_string(f)), f);
  EXPECT_EQ(to_string(a_plus(2)), "antidiagc(1/4, 7/4)");
  EXPECT_EQ(parse_phase_map("diag(1/4, 3/4)"), a_qtilde(2, 3));
  EXPECT_EQ(parse_phase_map("diag(2, -1/2)"), PhaseMap::diagonal(0, Rational(3, 2)));
  try {
    parse_phase_map("diag(1/0, 1)");
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.offset(), 7u);
  }
  EXPECT_THROW(parse_phase_map("rot(1/2, 1)"), ParseError);
  EXPECT_THROW(parse_phase_map("diag(1/2 1)"), ParseError);
}
