#include <gtest/gtest.h>

#include <random>

#include "acq/category.hpp"
#include "acq/errors.hpp"
#include "acq/eval_state.hpp"
#include "acq/oracle.hpp"
#include "acq/presentation.hpp"
#include "corpus.hpp"

namespace acq {
namespace {

TEST(ZnCount, Examples) {
  EXPECT_EQ(zn_count(parse_presentation("<x | x^2>"), 4), 2u);
  EXPECT_EQ(zn_count(parse_presentation("<x, y | x y x^-1 y>"), 3), 1u);
  EXPECT_EQ(zn_count(parse_presentation("<x | x x^-1>"), 5), 5u);
  EXPECT_EQ(zn_count(parse_presentation("< | >"), 7), 1u);
  EXPECT_EQ(zn_count(parse_presentation("<x | x>"), 1), 1u);
}

TEST(ZnCount, Guard) {
  const Presentation p = parse_presentation("<x | x, x, x, x, x, x, x, x>");
  EXPECT_THROW(zn_count(p, 10, 1000), EnumerationTooLarge);
  EXPECT_THROW(zn_count(p, 10, 1000), EvaluationGuard);
}

TEST(CongruenceSystem, ExponentSums) {
  const CongruenceSystem s = congruence_system(parse_presentation("<x, y | x^2 y^-1 x, y^5>"), 3);
  EXPECT_EQ(s.modulus, 3u);
  const std::vector<std::vector<long>> expected = {{3, 0}, {-1, 5}};
  EXPECT_EQ(s.E, expected);
}

TEST(ZnCountProperty, AgreesWithStateEvaluator) {
  for (std::uint64_t n = 2; n <= 6; ++n) {
    const Category c = load_category("zn:" + std::to_string(n));
    for (const Presentation& p : testing::corpus(23, 8)) {
      EXPECT_EQ(q_invariant_state(p, c), Scalar(c.field(), static_cast<long>(zn_count(p, n))))
          << to_string(p) << " n=" << n;
    }
  }
}

TEST(ZnCountProperty, InvariantUnderMoves) {
  std::mt19937_64 rng(71);
  for (const Presentation& start : testing::corpus()) {
    const std::uint64_t expected = zn_count(start, 4);
    Presentation p = start;
    for (int t = 0; t < 8; ++t) {
      p = apply_move(p, random_move(p, rng));
      EXPECT_EQ(zn_count(p, 4), expected) << to_string(start) << " -> " << to_string(p);
    }
  }
}

TEST(BruteCycleTrace, UnitObject) {
  for (const std::string name : {"rep-s3-q", "zn:4", "rep-s3-f5"}) {
    const Category c = load_category(name);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_TRUE(brute_cycle_trace(c, kUnit, k).is_one());
  }
}

TEST(BruteCycleTrace, CyclicGroupsGiveIndicators) {
  for (std::size_t n = 2; n <= 6; ++n) {
    const Category c = load_category("zn:" + std::to_string(n));
    for (SimpleLabel b : c.labels()) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const long expected = (k * b.index) % n == 0 ? 1 : 0;
        EXPECT_EQ(brute_cycle_trace(c, b, k), Scalar(c.field(), expected));
      }
    }
  }
}

TEST(BruteCycleTrace, StandardRepresentation) {
  // std ⊗ std has a one-dimensional invariant line, fixed by the swap.
  const Category c = load_category("rep-s3-q");
  const SimpleLabel s = c.label("std");
  EXPECT_TRUE(brute_cycle_trace(c, s, 2).is_one());
  EXPECT_TRUE(brute_cycle_trace(c, c.label("sign"), 2).is_one());
  EXPECT_TRUE(brute_cycle_trace(c, c.label("sign"), 3).is_zero());
  EXPECT_TRUE(brute_cycle_trace(c, s, 1).is_zero());
  EXPECT_THROW(brute_cycle_trace(c, s, 7, 100), EvaluationGuard);
}

TEST(SelfDualCount, Examples) {
  EXPECT_EQ(selfdual_count(load_category("zn:4")), 2u);
  EXPECT_EQ(selfdual_count(load_category("zn:5")), 1u);
  EXPECT_EQ(selfdual_count(load_category("rep-s3-q")), 3u);
  EXPECT_EQ(selfdual_count(load_category("rep-z3-q")), 1u);
}

TEST(SelfDualCount, MatchesInvariant) {
  const Presentation p = parse_presentation("<x, y | x y x^-1 y>");
  for (const std::string& name : shipped_categories()) {
    const Category c = load_category(name);
    EXPECT_EQ(q_invariant_state(p, c), Scalar(c.field(), static_cast<long>(selfdual_count(c))))
        << name;
  }
}

}  // namespace
}  // namespace acq
