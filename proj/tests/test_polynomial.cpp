#include <gtest/gtest.h>

#include "grassorbit/companion.hpp"
#include "grassorbit/error.hpp"
#include "grassorbit/parse.hpp"
#include "support.hpp"

using namespace grassorbit;
using namespace grassorbit::testing;

namespace {

const Field kGF2 = Field::prime(2);

Polynomial poly(const Field& f, const char* text) { return parse_polynomial(f, text); }

}  // namespace

TEST(PolynomialTest, ZeroHasNoDegree) {
  const Polynomial z(kGF2);
  EXPECT_FALSE(z.degree().has_value());
  EXPECT_TRUE(Polynomial(kGF2, {0, 0, 0}).is_zero());
  EXPECT_EQ(Polynomial(kGF2, {1, 1, 0, 0}).degree(), 1u);
}

TEST(PolynomialTest, ArithmeticExamples) {
  const Polynomial p = poly(kGF2, "x^2+x+1");
  EXPECT_EQ(p * p, poly(kGF2, "x^4+x^2+1"));
  EXPECT_EQ(gcd(poly(kGF2, "x^2+x"), poly(kGF2, "x")), poly(kGF2, "x"));

  // x^3 mod x^2+x+1 by the schoolbook oracle, then frozen.
  const auto oracle = long_division_remainder(kGF2, {0, 0, 0, 1}, {1, 1, 1});
  EXPECT_EQ(oracle, (std::vector<Code>{1}));
  EXPECT_EQ(poly(kGF2, "x^3") % p, Polynomial(kGF2, oracle));
}

TEST(PolynomialTest, DivisionByZero) {
  EXPECT_THROW(poly(kGF2, "x") % Polynomial(kGF2), AlgebraError);
}

TEST(PolynomialTest, DivmodReconstructsDividend) {
  Rng rng(7);
  for (Code q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Code> a(1 + rng() % 8), b(1 + rng() % 5);
      for (auto& c : a) c = random_code(f, rng);
      for (auto& c : b) c = random_code(f, rng);
      const Polynomial pa(f, a), pb(f, b);
      if (pb.is_zero()) continue;
      const DivMod dm = divmod(pa, pb);
      EXPECT_EQ(dm.quotient * pb + dm.remainder, pa);
      if (!dm.remainder.is_zero()) EXPECT_LT(*dm.remainder.degree(), *pb.degree());
    }
  }
}

TEST(PolynomialTest, IrreducibilityExamples) {
  EXPECT_TRUE(is_irreducible(poly(kGF2, "x^2+x+1")));
  EXPECT_FALSE(is_irreducible(poly(kGF2, "x^4+x^2+1")));
  // Brute force finds the factor x+1.
  EXPECT_FALSE(irreducible_by_trial_division(poly(kGF2, "x^2+1")));
  EXPECT_FALSE(is_irreducible(poly(kGF2, "x^2+1")));
  EXPECT_THROW(is_irreducible(Polynomial::constant(kGF2, 1)), UsageError);
  EXPECT_THROW(is_irreducible(poly(Field::prime(3), "2x^2+1")), UsageError);
}

TEST(PolynomialTest, IrreducibilityMatchesTrialDivision) {
  for (Code q : {2u, 3u}) {
    const Field f = Field::prime(q);
    for (std::size_t d = 1; d <= (q == 2 ? 6u : 4u); ++d) {
      for (const auto& p : monic_polynomials(f, d)) {
        EXPECT_EQ(is_irreducible(p), irreducible_by_trial_division(p)) << to_string(p);
      }
    }
  }
  // Over GF(4) the test must use q = 4 in x^(q^i), not the characteristic.
  const Field gf4 = Field::of_order(4);
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& p : monic_polynomials(gf4, d)) {
      EXPECT_EQ(is_irreducible(p), irreducible_by_trial_division(p)) << to_string(p);
    }
  }
}

TEST(PolynomialTest, IrreducibleCountsOverGF2) {
  // Number of monic irreducibles of degree 1..6 over GF(2).
  const std::vector<int> expected{2, 1, 2, 3, 6, 9};
  for (std::size_t d = 1; d <= 6; ++d) {
    int count = 0;
    for (const auto& p : monic_polynomials(kGF2, d)) count += is_irreducible(p) ? 1 : 0;
    EXPECT_EQ(count, expected[d - 1]) << "degree " << d;
  }
}

TEST(PolynomialTest, Primitivity) {
  EXPECT_TRUE(is_primitive(poly(kGF2, "x^4+x+1")));
  // Irreducible but x has order 5.
  EXPECT_TRUE(is_irreducible(poly(kGF2, "x^4+x^3+x^2+x+1")));
  EXPECT_FALSE(is_primitive(poly(kGF2, "x^4+x^3+x^2+x+1")));
  EXPECT_FALSE(is_primitive(poly(kGF2, "x^4+x^2+1")));
}

TEST(CompanionTest, Examples) {
  EXPECT_EQ(companion_matrix(poly(kGF2, "x^2+x+1")), Matrix(kGF2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(companion_matrix(poly(kGF2, "x^4+x^2+1")),
            Matrix(kGF2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}}));
  EXPECT_EQ(companion_matrix(poly(kGF2, "x+1")), Matrix(kGF2, {{1}}));
  const Field gf5 = Field::prime(5);
  EXPECT_EQ(companion_matrix(poly(gf5, "x^2+2x+3")), Matrix(gf5, {{0, 1}, {2, 3}}));
  EXPECT_THROW(companion_matrix(poly(gf5, "2x^2+1")), UsageError);
}

TEST(CompanionTest, CharacteristicPolynomialIsInput) {
  // det(xI - C) by the Leibniz formula, evaluated at every point of an
  // extension with more than deg f elements, so agreement pins the polynomial.
  for (Code q : {2u, 3u, 5u}) {
    const Field f = Field::prime(q);
    Rng rng(q);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Code> coeffs(m);
        for (auto& c : coeffs) c = random_code(f, rng);
        coeffs.push_back(1);
        const Polynomial p(f, coeffs);
        const Matrix c = companion_matrix(p);
        // Lift to GF(q^e) with q^e > m so evaluation determines the polynomial.
        unsigned e = 1;
        for (Code size = q; size <= m; size *= q) ++e;
        const Field big = Field::extension(q, e);
        // Codes 0..q-1 are the prime subfield inside the extension.
        for (Code x = 0; x < big.order(); ++x) {
          Matrix xi(big, m, m);
          for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
              xi(i, j) = big.sub(i == j ? x : 0, c(i, j));
            }
          }
          Code fx = 0;
          for (std::size_t i = coeffs.size(); i-- > 0;) fx = big.add(big.mul(fx, x), coeffs[i]);
          EXPECT_EQ(leibniz_det(xi), fx) << to_string(p) << " at " << x;
        }
      }
    }
  }
}

TEST(ResidueTest, MultiplicativeOrderExamples) {
  const ResidueElement alpha(poly(kGF2, "x^2+x+1"), poly(kGF2, "x"));
  EXPECT_EQ(alpha.multiplicative_order(), 3u);
  const ResidueElement x(poly(kGF2, "x^4+x^2+1"), poly(kGF2, "x"));
  EXPECT_EQ(x.multiplicative_order(), 6u);
  const ResidueElement one(poly(kGF2, "x^4+x^2+1"), Polynomial::constant(kGF2, 1));
  EXPECT_EQ(one.multiplicative_order(), 1u);
  const ResidueElement nonunit(poly(kGF2, "x^4+x^2+1"), poly(kGF2, "x^2+x+1"));
  EXPECT_FALSE(nonunit.is_unit());
  EXPECT_THROW(nonunit.multiplicative_order(), AlgebraError);
}

TEST(ResidueTest, OrderDividesGroupOrderForIrreducibleModulus) {
  for (Code q : {2u, 3u}) {
    const Field f = Field::prime(q);
    for (std::size_t m = 1; m <= 4; ++m) {
      std::uint64_t units = 1;
      for (std::size_t i = 0; i < m; ++i) units *= q;
      units -= 1;
      for (const auto& p : monic_polynomials(f, m)) {
        if (!is_irreducible(p)) continue;
        for (const auto& e : monic_polynomials(f, m - 1)) {
          const ResidueElement r(p, e);
          if (r.is_zero()) continue;
          EXPECT_EQ(units % r.multiplicative_order(), 0u);
        }
      }
    }
  }
}

TEST(ParseTest, Forms) {
  EXPECT_EQ(poly(kGF2, "1,1,0,1"), poly(kGF2, "x^3+x+1"));
  EXPECT_EQ(poly(kGF2, " x^3 + x + 1 "), poly(kGF2, "x^3+x+1"));
  const Field gf5 = Field::prime(5);
  EXPECT_EQ(poly(gf5, "2x^2-1").coeffs(), (std::vector<Code>{4, 0, 2}));
  EXPECT_EQ(poly(gf5, "3*x"), poly(gf5, "0,3"));
  EXPECT_EQ(to_string(poly(gf5, "1,0,2,1")), "x^3+2x^2+1");
  EXPECT_EQ(to_coeff_list(poly(kGF2, "x^3+x+1")), "1,1,0,1");
  EXPECT_THROW(poly(kGF2, "x^"), UsageError);
  EXPECT_THROW(poly(kGF2, "1,2"), UsageError);
  EXPECT_THROW(poly(kGF2, "x^2 x"), UsageError);
  EXPECT_THROW(poly(kGF2, ""), UsageError);
  EXPECT_THROW(poly(kGF2, "y+1"), UsageError);
  const auto blocks = parse_polynomial_list(kGF2, "x^2+x+1;1,1");
  ASSERT_EQ(blocks.size(), 2u);
  EXPECT_EQ(blocks[1], poly(kGF2, "x+1"));
}

TEST(ParseTest, RoundTripsThroughBothForms) {
  Rng rng(11);
  for (Code q : {2u, 3u, 7u}) {
    const Field f = Field::prime(q);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Code> c(1 + rng() % 6);
      for (auto& x : c) x = random_code(f, rng);
      const Polynomial p(f, c);
      EXPECT_EQ(parse_polynomial(f, to_string(p)), p);
      EXPECT_EQ(parse_polynomial(f, to_coeff_list(p)), p);
    }
  }
}
