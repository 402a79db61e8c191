#include <gtest/gtest.h>

#include <random>

#include "acq/errors.hpp"
#include "acq/scalar.hpp"

namespace acq {
namespace {

const Field Q = Field::rational();

Scalar q(long num, long den = 1) { return Scalar(Q, mpq_class(num, den)); }

TEST(Scalar, InverseOfTwoThirds) { EXPECT_EQ(inv(q(2, 3)), q(3, 2)); }

TEST(Scalar, ProductInF7) {
  const Field f7 = Field::prime(7);
  EXPECT_EQ(mul(Scalar(f7, 2), Scalar(f7, 4)), Scalar::one(f7));
}

TEST(Scalar, InverseOfZeroThrows) {
  EXPECT_THROW(inv(Scalar::zero(Q)), DivisionByZero);
  EXPECT_THROW(inv(Scalar::zero(Field::prime(5))), DivisionByZero);
}

TEST(Scalar, MixedFieldsThrow) {
  EXPECT_THROW(add(Scalar::one(Q), Scalar::one(Field::prime(3))), FieldMismatch);
  EXPECT_THROW(mul(Scalar::one(Field::prime(5)), Scalar::one(Field::prime(3))), FieldMismatch);
  EXPECT_FALSE(Scalar::one(Q) == Scalar::one(Field::prime(3)));
}

TEST(Scalar, RationalsStayInLowestTerms) {
  const Scalar s(Q, mpq_class(-6, 4));
  EXPECT_EQ(s.rational().get_num(), -3);
  EXPECT_EQ(s.rational().get_den(), 2);
  EXPECT_EQ(s.to_string(), "-3/2");
  EXPECT_EQ(q(4, 2).to_string(), "2");
}

TEST(Scalar, ResiduesAreReduced) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(Scalar(f5, -1).residue(), 4u);
  EXPECT_EQ(Scalar(f5, 12).residue(), 2u);
  EXPECT_EQ(Scalar(f5, mpq_class(1, 2)).residue(), 3u);
  EXPECT_EQ(Scalar(f5, 3).to_string(), "3 mod 5");
  EXPECT_THROW(Scalar(f5, mpq_class(1, 5)), DivisionByZero);
}

TEST(Scalar, ParseAndPrint) {
  EXPECT_EQ(Scalar::parse(Q, "-7/21"), q(-1, 3));
  EXPECT_EQ(Scalar::parse(Field::prime(7), "3/2"), Scalar(Field::prime(7), 5));
  EXPECT_THROW(Scalar::parse(Q, "x"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(Q, ""), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(Q, "1/0"), DivisionByZero);
}

TEST(Field, RejectsComposites) {
  EXPECT_THROW(Field::prime(1), std::invalid_argument);
  EXPECT_THROW(Field::prime(9), std::invalid_argument);
  EXPECT_THROW(Field::prime(std::uint64_t{1} << 32U), std::invalid_argument);
  EXPECT_EQ(Field::prime(4294967291ULL).characteristic(), 4294967291ULL);
  EXPECT_EQ(Field::prime(2).to_string(), "prime 2");
  EXPECT_EQ(Q.to_string(), "rational");
}

TEST(Scalar, LargePrimeArithmetic) {
  const Field f = Field::prime(4294967291ULL);
  const Scalar a(f, 4294967290L);  // -1
  EXPECT_EQ(a * a, Scalar::one(f));
  EXPECT_EQ(a.inverse(), a);
}

Scalar random_scalar(std::mt19937_64& rng, Field f) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  if (f.is_rational()) return Scalar(f, mpq_class(num(rng), den(rng)));
  return Scalar(f, num(rng));
}

TEST(ScalarProperty, FieldAxioms) {
  std::mt19937_64 rng(11);
  for (const Field f : {Q, Field::prime(2), Field::prime(7), Field::prime(65521)}) {
    for (int i = 0; i < 200; ++i) {
      const Scalar a = random_scalar(rng, f);
      const Scalar b = random_scalar(rng, f);
      const Scalar c = random_scalar(rng, f);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a + neg(a)).is_zero());
      EXPECT_EQ(a - b, a + neg(b));
      if (!a.is_zero()) EXPECT_TRUE((a * inv(a)).is_one());
      Scalar acc = c;
      acc.add_product(a, b);
      EXPECT_EQ(acc, c + a * b);
    }
  }
}

TEST(ScalarProperty, PrintParseRoundTrip) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Scalar a = random_scalar(rng, Q);
    EXPECT_EQ(Scalar::parse(Q, a.to_string()), a);
  }
}

}  // namespace
}  // namespace acq
