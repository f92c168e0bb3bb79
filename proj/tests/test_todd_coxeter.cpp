#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <seifert_lens/metacyclic.hpp>
#include <seifert_lens/presentation.hpp>
#include <seifert_lens/todd_coxeter.hpp>

#include "oracles.hpp"

using namespace seifert_lens;

namespace {

std::size_t order_of_text(char const* text) {
  auto const order = group_order(parse_presentation(text));
  EXPECT_TRUE(order.has_value()) << text;
  return order.value_or(0);
}

}  // namespace

TEST(ToddCoxeter, CyclicGroup) {
  auto const p = parse_presentation("<a | a^6>");
  auto const t = todd_coxeter(p, {}, 10000);
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.size(), 6u);
  EXPECT_TRUE(t.verify(p, {}));
}

TEST(ToddCoxeter, FrozenOrdersMatchModelOracle) {
  // Frozen from oracle::MetacyclicModel: generated size of the concrete model.
  struct Case {
    char const* text;
    std::int64_t n, beta;
    std::size_t order;
  };
  for (auto const& c : {Case{"<a,h | a^-1 h a h, a^4 h^-1>", 2, 1, 8},
                        Case{"<a,h | a^-1 h a h, a^6 h^-1>", 3, 1, 12},
                        Case{"<a,h | a^-1 h a h, a^4 h^-3>", 2, 3, 24}}) {
    oracle::MetacyclicModel const model{c.n, c.beta};
    ASSERT_TRUE(model.associative());
    ASSERT_TRUE(model.satisfies_relators());
    ASSERT_EQ(model.generated_size(), c.order);
    EXPECT_EQ(order_of_text(c.text), c.order) << c.text;
  }
  EXPECT_EQ(order_of_text("<a,q | q^3, q a^2>"), 6u);
}

TEST(ToddCoxeter, SubgroupIndex) {
  auto const p = parse_presentation("<a,h | a^-1 h a h, a^4 h^-3>");
  auto const t = todd_coxeter(p, {p.parse_word("h")});
  ASSERT_TRUE(t.complete());
  EXPECT_EQ(t.size(), 4u);
  std::vector<Word> const sub{p.parse_word("h")};
  EXPECT_TRUE(t.verify(p, sub));

  auto const whole = todd_coxeter(p, {p.parse_word("a"), p.parse_word("h")});
  EXPECT_EQ(whole.size(), 1u);
}

TEST(ToddCoxeter, ClassicalGroups) {
  EXPECT_EQ(order_of_text("<a,b | a^2, b^3, a b a b>"), 6u);       // S3
  EXPECT_EQ(order_of_text("<r,s | r^5, s^2, s r s r>"), 10u);           // D5
  EXPECT_EQ(order_of_text("<a,b | a^2, b^3, a b a b a b>"), 12u);   // A4
  EXPECT_EQ(order_of_text("<a,b | a^2, b^3, a b a b a b a b>"), 24u);   // S4
  EXPECT_EQ(order_of_text("<a,b | a^2, b^3, a b a b a b a b a b>"), 60u);  // A5
  EXPECT_EQ(order_of_text("<x,y | x^4, y^2 x^-2, y^-1 x y x>"), 8u);      // Q8
  EXPECT_EQ(order_of_text("<a | a>"), 1u);
  EXPECT_EQ(order_of_text("<>"), 1u);
}

TEST(ToddCoxeter, ExceededLimitIsAStatusNotAnError) {
  auto const p = parse_presentation("<a, b | >");
  auto const t = todd_coxeter(p, {}, 50);
  EXPECT_EQ(t.status(), EnumerationStatus::ExceededLimit);
  EXPECT_FALSE(group_order(p, 50).has_value());
  EXPECT_FALSE(t.verify(p, {}));
}

TEST(ToddCoxeter, Errors) {
  auto const p = parse_presentation("<a | a^3>");
  EXPECT_THROW(todd_coxeter(p, {Word::power(1, 1)}), std::invalid_argument);
  EXPECT_THROW(todd_coxeter(p, {}, 0), std::invalid_argument);
}

TEST(ToddCoxeter, CompleteTablesAreCertificates) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t beta = 1; beta <= 5; ++beta) {
      if (std::gcd(n, beta) != 1) continue;
      auto const p = twisted_presentation(n, beta);
      auto const t = todd_coxeter(p, {});
      ASSERT_TRUE(t.complete());
      EXPECT_TRUE(t.verify(p, {}));
      oracle::MetacyclicModel const model{n, beta};
      EXPECT_EQ(t.size(), model.generated_size());
      // order of h in the regular action equals its order in the model
      EXPECT_EQ(t.cycle_length(0, Letter{1, 1}), model.element_order(model.h()));
    }
  }
}

TEST(ToddCoxeter, IndependentOfRelatorOrder) {
  std::mt19937 rng(12345);
  for (auto const* text : {"<a,b | a^2, b^3, a b a b a b a b a b>", "<a,h | a^-1 h a h, a^6 h^-5>",
                           "<a,q,h | a^-1 h a h, h^-1 q^-1 h q, q^3 h^2, q a^2>"}) {
    auto const p = parse_presentation(text);
    auto const reference = group_order(p);
    ASSERT_TRUE(reference.has_value());
    auto relators = p.relators();
    for (int trial = 0; trial < 8; ++trial) {
      std::shuffle(relators.begin(), relators.end(), rng);
      GroupPresentation const shuffled(p.generators(), relators);
      EXPECT_EQ(group_order(shuffled), reference) << text;
    }
  }
}

TEST(ToddCoxeter, RedundantRelationLeavesResultsUnchanged) {
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t beta = 1; beta <= 5; ++beta) {
      if (std::gcd(n, beta) != 1) continue;
      auto p = twisted_presentation(n, beta);
      auto const before = group_order(p);
      auto const index_before = todd_coxeter(p, {Word::power(1, 1)}).size();
      p.add_relator(Word::power(1, 2 * beta));
      EXPECT_EQ(group_order(p), before);
      EXPECT_EQ(todd_coxeter(p, {Word::power(1, 1)}).size(), index_before);
    }
  }
}

TEST(ToddCoxeter, ThreeGeneratorFormAgrees) {
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t beta = 1; beta <= 4; ++beta) {
      if (std::gcd(n, beta) != 1) continue;
      auto const text = "<a,q,h | a^-1 h a h, h^-1 q^-1 h q, q^" + std::to_string(n) + " h^" +
                        std::to_string(beta) + ", q a^2>";
      EXPECT_EQ(group_order(parse_presentation(text)), std::optional<std::size_t>(4 * n * beta));
    }
  }
}
