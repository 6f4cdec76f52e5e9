#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "triexp/error.hpp"
#include "triexp/field.hpp"
#include "triexp/polynomial.hpp"
#include "triexp/real_algebraic.hpp"

using namespace triexp;
using triexp::test::Q;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-5/2"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("2.5"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-0.125"), Rational(-1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "2..5", "3/"}) {
    EXPECT_THROW((void)parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.13");
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(2, 3), 6), "0.666667");
  EXPECT_EQ(to_decimal(Rational(3), 0), "3");
}

TEST(Interval, ArithmeticEnclosesPointResults) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = test::random_rational(rng), b = test::random_rational(rng);
    Rational c = test::random_rational(rng), d = test::random_rational(rng);
    RationalInterval x(std::min(a, b), std::max(a, b)), y(std::min(c, d), std::max(c, d));
    EXPECT_TRUE((x * y).contains(a * c));
    EXPECT_TRUE((x + y).contains(b + d));
    EXPECT_TRUE((x - y).contains(a - d));
  }
}

TEST(Polynomial, DivmodReconstructs) {
  const RationalPolynomial a{Q("1"), Q("-3"), Q("0"), Q("2"), Q("1/2")};
  const RationalPolynomial b{Q("-1"), Q("1"), Q("1")};
  const auto [quot, rem] = divmod(a, b);
  EXPECT_EQ(quot * b + rem, a);
  EXPECT_LT(rem.degree(), b.degree());
}

TEST(Polynomial, ExtendedGcdSatisfiesBezout) {
  std::mt19937_64 rng(11);
  const RationalPolynomial common{Q("-2"), Q("1")};
  for (int i = 0; i < 50; ++i) {
    RationalPolynomial a{test::random_rational(rng), test::random_rational(rng), Rational(1)};
    RationalPolynomial b{test::random_rational(rng), Rational(1)};
    a = a * common;
    b = b * common;
    const BezoutResult r = extended_gcd(a, b);
    EXPECT_EQ(r.s * a + r.t * b, r.gcd);
    EXPECT_TRUE(divmod(a, r.gcd).second.is_zero());
    EXPECT_TRUE(divmod(r.gcd, common.monic()).second.is_zero());
  }
}

TEST(Polynomial, IntegerEvaluationMatchesRational) {
  const IntPolynomial p{-1, 2, -3, 1};
  EXPECT_EQ(p.eval(Q("5/2")), Q("7/8"));
  EXPECT_EQ(p.eval(Rational(2)), Rational(-1));
  EXPECT_EQ(p.to_string(), "x^3 - 3x^2 + 2x - 1");
  EXPECT_EQ(IntPolynomial::primitive_of(RationalPolynomial{Q("1/2"), Q("-1/3")}), (IntPolynomial{-3, 2}));
}

TEST(Sturm, CountsRootsInHalfOpenIntervals) {
  // (x - 1)(x - 2)(x - 3)
  const SturmSequence s(IntPolynomial{-6, 11, -6, 1});
  EXPECT_EQ(s.count_roots(Rational(0), Rational(4)), 3u);
  EXPECT_EQ(s.count_roots(Rational(1), Rational(2)), 1u);  // (1, 2] holds 2 only
  EXPECT_EQ(s.count_roots(Q("1/2"), Q("3/2")), 1u);
  EXPECT_EQ(s.count_roots(Q("3.5"), Rational(10)), 0u);
}

TEST(RealAlgebraic, IsolatesEveryRootOnce) {
  const IntPolynomial p{-1, 2, -3, 1};
  const auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 1u);
  const SturmSequence s(p);
  const auto iv = roots[0].isolating();
  EXPECT_EQ(s.count_roots(iv.lo, iv.hi), 1u);
  // Newton iteration as an independent oracle.
  double x = 2.5;
  for (int i = 0; i < 50; ++i) x -= (x * x * x - 3 * x * x + 2 * x - 1) / (3 * x * x - 6 * x + 2);
  EXPECT_NEAR(roots[0].approx(), x, 1e-12);
}

TEST(RealAlgebraic, RationalRootsAreDetected) {
  // (2x - 1)(x^2 - 2)
  const auto roots = isolate_real_roots(IntPolynomial{2, -4, -1, 2});
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(roots[1].is_rational());
  EXPECT_EQ(roots[1].rational_value(), Q("1/2"));
  EXPECT_NEAR(roots[2].approx(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(roots[0].approx(), -std::sqrt(2.0), 1e-14);
}

TEST(RealAlgebraic, ConstantsMatchClosedForms) {
  EXPECT_NEAR(constants::golden_square().approx(), (3 + std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(constants::silver_ratio().approx(), 1 + std::sqrt(2.0), 1e-14);
  const auto qc = constants::critical_base().refine(Q("0.00001"));
  EXPECT_GT(qc.lo, Q("2.32471"));
  EXPECT_LT(qc.hi, Q("2.32473"));
  const auto qs = constants::golden_square().refine(Q("0.00001"));
  EXPECT_GT(qs.lo, Q("2.61802"));
  EXPECT_LT(qs.hi, Q("2.61804"));
  const auto r = RealAlgebraic::rational(Q("7/2")).refine(Q("0.1"));
  EXPECT_TRUE(r.is_point());
}

TEST(RealAlgebraic, EqualityAcrossDefiningPolynomials) {
  const auto a = RealAlgebraic::from_isolating(IntPolynomial{-2, 0, 1}, Rational(1), Rational(2));
  const auto b = RealAlgebraic::from_isolating(IntPolynomial{-4, 0, 0, 0, 1}, Rational(1), Rational(2));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, constants::silver_ratio());
  EXPECT_LT(a, constants::silver_ratio());
  EXPECT_EQ(a.compare(Q("1.4142")), std::strong_ordering::greater);
  EXPECT_EQ(a.compare(Q("1.4143")), std::strong_ordering::less);
}

TEST(RealAlgebraic, FromIsolatingRejectsAmbiguousIntervals) {
  EXPECT_THROW((void)RealAlgebraic::from_isolating(IntPolynomial{-2, 0, 1}, Rational(-2), Rational(2)), Error);
  EXPECT_THROW((void)RealAlgebraic::from_isolating(IntPolynomial{-2, 0, 1}, Rational(2), Rational(3)), Error);
}

TEST(SignOfPoly, DecidesAtAlgebraicPoints) {
  const IntPolynomial p = constants::critical_polynomial();
  EXPECT_EQ(sign_of_poly_at(p, constants::critical_base()), Sign::Zero);
  EXPECT_EQ(sign_of_poly_at(p, RealAlgebraic::rational(Q("5/2"))), Sign::Positive);
  EXPECT_EQ(sign_of_poly_at(p, RealAlgebraic::rational(Rational(2))), Sign::Negative);
  EXPECT_EQ(sign_of_poly_at(p, constants::golden_square()), Sign::Positive);
  EXPECT_EQ(sign_of_poly_at(p, constants::silver_ratio()), Sign::Positive);
}

TEST(Field, SilverRatioIdentities) {
  const Base b = test::silver();
  const FieldElement q = b.q();
  EXPECT_EQ((q - Rational(1)) * (q + Rational(1)), q * Rational(2));
  EXPECT_EQ(q.inverse(), q - Rational(2));
  EXPECT_EQ(compare(q * q, q * Rational(2) + Rational(1)), std::strong_ordering::equal);
  EXPECT_LT(q, b.element(Q("5/2")));
  EXPECT_EQ(Base::rational(Q("3/2")).attractor_max(), Base::rational(Q("3/2")).element(Rational(3)));
  EXPECT_GT(test::qcrit().q(), test::qcrit().element(Rational(2)));
}

TEST(Field, RingAxiomsAndOrderOnRandomSamples) {
  std::mt19937_64 rng(3);
  for (const Base& b : {test::silver(), test::qcrit(), Base::rational(Q("3/2"))}) {
    for (int i = 0; i < 40; ++i) {
      const FieldElement x = test::random_element(rng, b), y = test::random_element(rng, b),
                         z = test::random_element(rng, b);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(compare(x, x), std::strong_ordering::equal);
      EXPECT_EQ(compare(x, y), 0 <=> compare(y, x));
      if (x < y && y < z) EXPECT_LT(x, z);
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), b.element(Rational(1)));
      // Ordering agrees with the floating embedding when the gap is visible.
      const double dx = x.approx(), dy = y.approx();
      if (std::abs(dx - dy) > 1e-9) EXPECT_EQ(x < y, dx < dy);
    }
  }
}

TEST(Field, MixingFieldsIsRejected) {
  const Base a = test::silver();
  const Base b = test::qcrit();
  try {
    (void)(a.q() + b.q());
    FAIL() << "expected BaseMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BaseMismatch);
  }
  EXPECT_THROW((void)a.element(Rational(0)).inverse(), Error);
}
