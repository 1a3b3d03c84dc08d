#include <gtest/gtest.h>

#include "grassorbit/error.hpp"
#include "grassorbit/field.hpp"

using namespace grassorbit;

TEST(FieldTest, ArithmeticExamples) {
  const Field gf2 = Field::prime(2);
  EXPECT_EQ(FieldElement(gf2, 1) + FieldElement(gf2, 1), FieldElement(gf2, 0));

  // alpha has code 2 (digits [0,1]); alpha + 1 has code 3.
  const Field gf4 = Field::extension(2, {1, 1, 1});
  EXPECT_EQ(FieldElement(gf4, 2) * FieldElement(gf4, 2), FieldElement(gf4, 3));

  const Field gf3 = Field::prime(3);
  EXPECT_EQ(FieldElement(gf3, 2) / FieldElement(gf3, 2), FieldElement(gf3, 1));
}

TEST(FieldTest, Errors) {
  const Field gf3 = Field::prime(3);
  EXPECT_THROW(FieldElement(gf3, 1) / FieldElement(gf3, 0), AlgebraError);
  EXPECT_THROW(FieldElement(gf3, 1) + FieldElement(Field::prime(5), 1), UsageError);
  EXPECT_THROW(FieldElement(gf3, 3), UsageError);
  EXPECT_THROW(Field::prime(4), UsageError);
  EXPECT_THROW(Field::of_order(6), UsageError);
  EXPECT_THROW(Field::of_order(1), UsageError);
  // x^2 + 1 = (x + 1)^2 over GF(2)
  EXPECT_THROW(Field::extension(2, {1, 0, 1}), AlgebraError);
  EXPECT_THROW(Field::extension(3, {1, 0, 2}), UsageError);  // 2x^2+1 is not monic
}

TEST(FieldTest, DefaultModulusIsSmallestIrreducible) {
  EXPECT_EQ(Field::of_order(4).modulus(), (std::vector<Code>{1, 1, 1}));
  EXPECT_EQ(Field::of_order(8).modulus(), (std::vector<Code>{1, 1, 0, 1}));
  EXPECT_EQ(Field::of_order(16).modulus(), (std::vector<Code>{1, 1, 0, 0, 1}));
  // x^2 + 1 is irreducible over GF(3) and is the smallest monic quadratic.
  EXPECT_EQ(Field::of_order(9).modulus(), (std::vector<Code>{1, 0, 1}));
  EXPECT_EQ(Field::of_order(7).degree(), 1u);
}

class FieldAxioms : public ::testing::TestWithParam<Code> {};

TEST_P(FieldAxioms, HoldExhaustively) {
  const Field f = Field::of_order(GetParam());
  const Code q = f.order();
  for (Code a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, 0), a);
    EXPECT_EQ(f.mul(a, 1), a);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << "inverse of " << a;
    for (Code b = 0; b < q; ++b) {
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.sub(f.add(a, b), b), a);
      for (Code c = 0; c < q; ++c) {
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(2, 3, 4, 5, 8, 9));

TEST(FieldTest, ElementOrder) {
  const Field gf4 = Field::of_order(4);
  EXPECT_EQ(FieldElement(gf4, 2).multiplicative_order(), 3u);
  EXPECT_EQ(FieldElement(gf4, 1).multiplicative_order(), 1u);
  EXPECT_THROW(FieldElement(gf4, 0).multiplicative_order(), AlgebraError);
  const Field gf16 = Field::of_order(16);
  for (Code a = 1; a < 16; ++a) EXPECT_EQ(15u % FieldElement(gf16, a).multiplicative_order(), 0u);
}

TEST(FieldTest, DigitsRoundTrip) {
  const Field gf9 = Field::of_order(9);
  for (Code a = 0; a < 9; ++a) EXPECT_EQ(gf9.from_digits(gf9.digits(a)), a);
  EXPECT_EQ(gf9.from_int(-1), 2u);
  EXPECT_EQ(gf9.from_int(7), 1u);
}
