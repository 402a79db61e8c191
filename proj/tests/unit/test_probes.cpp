#include <gtest/gtest.h>

#include "acq/category.hpp"
#include "acq/errors.hpp"
#include "acq/eval_state.hpp"
#include "acq/probes.hpp"

namespace acq {
namespace {

TEST(DimensionReport, CyclicGroup) {
  const Category c = load_category("zn:4");
  const DimensionTable t = dimension_report(c);
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      for (std::size_t cc = 0; cc < 4; ++cc) EXPECT_EQ(t[a][b][cc], a == (b + cc) % 4 ? 1u : 0u);
    }
  }
}

TEST(DimensionReport, SymmetricGroup) {
  const Category c = load_category("rep-s3-q");
  const DimensionTable t = dimension_report(c);
  const std::size_t s = c.label("std").index;
  EXPECT_EQ(t[s][s][s], 1u);
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      for (std::size_t cc = 0; cc < c.size(); ++cc) EXPECT_EQ(t[a][b][cc], t[a][cc][b]);
    }
  }
}

TEST(Conjecture1b, UnitRowIsSimpleCount) {
  for (const std::string& name : shipped_categories()) {
    const Category c = load_category(name);
    const Conjecture1bReport r = conjecture1b_probe(c);
    EXPECT_EQ(r.simple_count, c.size());
    ASSERT_EQ(r.rows.size(), c.size());
    EXPECT_EQ(r.rows[0].value, Scalar(c.field(), static_cast<long>(c.size()))) << name;
  }
}

TEST(Conjecture1b, CyclicGroupNonUnitRowsVanish) {
  const Category c = load_category("zn:5");
  const Conjecture1bReport r = conjecture1b_probe(c);
  for (std::size_t b = 1; b < 5; ++b) EXPECT_TRUE(r.rows[b].value.is_zero());
}

TEST(Conjecture1b, StandardRow) {
  // dim(std, c c*) is 0, 0, 1 for triv, sign, std; divided by r(std) = 2.
  const Category c = load_category("rep-s3-q");
  const Conjecture1bReport r = conjecture1b_probe(c);
  EXPECT_EQ(r.rows[c.label("std").index].value.to_string(), "1/2");
}

TEST(CirculatorOrder, ReportedOrdersAreExact) {
  for (const std::string name : {"zn:2", "zn:3", "rep-s3-q"}) {
    const Category c = load_category(name);
    const auto rows = circulator_order_probe(c, 64);
    EXPECT_EQ(rows.size(), c.size() * c.size());
    for (const CirculatorOrder& row : rows) {
      if (!row.order) continue;
      const Matrix m = circulator(c, row.a, row.b).matrix;
      EXPECT_EQ(m.rows(), row.block_dimension);
      EXPECT_TRUE(mat_pow(m, static_cast<long>(*row.order)).is_identity());
      for (std::size_t k = 1; k < *row.order; ++k) {
        EXPECT_FALSE(mat_pow(m, static_cast<long>(k)).is_identity());
      }
    }
  }
}

TEST(CirculatorOrder, BoundIsRespected) {
  const Category c = load_category("zn:3");
  for (const CirculatorOrder& row : circulator_order_probe(c, 1)) {
    if (row.order) EXPECT_EQ(*row.order, 1u);
  }
}

TEST(Corollary, BuildsBothPresentations) {
  const Category c = load_category("rep-s3-q");
  const CorollaryReport r = corollary_probe(parse_presentation("<x | x^2>"), c, 0);
  EXPECT_EQ(r.with_commutator, parse_presentation("<x, y | x^2, x y x^-1 y^-1>"));
  EXPECT_EQ(r.with_generator, parse_presentation("<x | x^2, x>"));
  EXPECT_EQ(parse_presentation(to_string(r.with_commutator)), r.with_commutator);
  EXPECT_EQ(r.lhs, q_invariant_state(r.with_commutator, c));
  EXPECT_EQ(r.rhs, Scalar(c.field(), 3) * q_invariant_state(r.with_generator, c));
  EXPECT_EQ(r.equal, r.lhs == r.rhs);
}

TEST(Corollary, FreshNameAvoidsCollisions) {
  const Category c = load_category("zn:3");
  const CorollaryReport r = corollary_probe(parse_presentation("<x, y | x y>"), c, 1);
  EXPECT_EQ(r.with_commutator.generators.back(), "y1");
  EXPECT_THROW(corollary_probe(parse_presentation("<x | x>"), c, 1), IndexOutOfRange);
}

TEST(Conjecture2, UnitObject) {
  const Category c = load_category("rep-s3-q");
  const auto rows = conjecture2_probe(c, kUnit, 2);
  ASSERT_EQ(rows.size(), c.size());
  for (const Conjecture2Row& row : rows) {
    EXPECT_EQ(row.trace.domain, (ObjectWord{kUnit, row.w}));
    EXPECT_EQ(row.trace.codomain, row.trace.domain);
    EXPECT_EQ(row.identity, row.w == kUnit);
    EXPECT_EQ(row.zero, row.w != kUnit);
  }
}

TEST(Conjecture2, CyclicGroupShapes) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const Category c = load_category("zn:" + std::to_string(n));
    for (SimpleLabel b : c.labels()) {
      const auto rows = conjecture2_probe(c, b, n);
      for (const Conjecture2Row& row : rows) {
        EXPECT_EQ(row.trace.domain, (ObjectWord{b, row.w}));
        EXPECT_EQ(row.zero, row.trace.matrix.is_zero());
        // Only w = n b can appear in b^n.
        if (row.w.index != (n * b.index) % n) EXPECT_TRUE(row.zero);
      }
    }
  }
}

}  // namespace
}  // namespace acq
