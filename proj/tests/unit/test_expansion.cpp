#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "triexp/census.hpp"
#include "triexp/error.hpp"
#include "triexp/expansion.hpp"
#include "triexp/verify.hpp"

using namespace triexp;
using test::Q;

namespace {

EPWord W(const char* text) { return EPWord::parse(text); }

// Truncated floating series, independent of the exact evaluator.
double series(const EPWord& w, double q) {
  double s = 0, scale = 1;
  for (std::size_t i = 0; i < 400; ++i) {
    scale /= q;
    const Digit d = w.at(i);
    s += (d == Digit::Zero ? 0.0 : d == Digit::One ? 1.0 : q) * scale;
  }
  return s;
}

}  // namespace

TEST(Base, RegimesAndRejection) {
  EXPECT_EQ(Base::rational(Q("3/2")).regime(), Regime::SubCritical);
  EXPECT_EQ(test::qcrit().regime(), Regime::SubCritical);
  EXPECT_EQ(test::silver().regime(), Regime::Middle);
  EXPECT_EQ(test::qstar().regime(), Regime::Middle);
  EXPECT_EQ(Base::rational(Q("5/2")).regime(), Regime::Middle);
  EXPECT_EQ(Base::rational(Q("3")).regime(), Regime::Super);
  EXPECT_THROW(Base::rational(Q("1")), Error);
  EXPECT_THROW(Base::rational(Q("1/2")), Error);
}

TEST(Base, AttractorMax) {
  EXPECT_EQ(Base::rational(Q("3")).attractor_max(), Base::rational(Q("3")).element(Q("3/2")));
  const Base s = test::qstar();
  // q* / (q* - 1) is the golden ratio, q* - 1.
  EXPECT_EQ(s.attractor_max(), s.q() - Rational(1));
}

TEST(Eval, MatchesFloatingSeries) {
  std::mt19937_64 rng(5);
  for (const Base& b : {Base::rational(Q("3/2")), Base::rational(Q("3")), test::silver(), test::qcrit()}) {
    const double q = b.value().approx();
    for (int i = 0; i < 60; ++i) {
      const EPWord w = random_epword(rng);
      EXPECT_NEAR(eval(w, b).approx(), series(w, q), 1e-9) << w.to_string() << " @ " << b.describe();
    }
  }
}

TEST(Eval, Examples) {
  const Base three = Base::rational(Q("3"));
  EXPECT_EQ(eval(W("(q)*"), three), three.attractor_max());
  EXPECT_EQ(eval(W("(0)*"), three), three.element(Q("0")));
  EXPECT_EQ(eval(W("(1)*"), three), three.element(Q("1/2")));
  EXPECT_EQ(eval(W("1(0)*"), three), eval(W("0q(0)*"), three));
}

TEST(Greedy, ReconstructsTheValue) {
  std::mt19937_64 rng(9);
  for (const Base& b : {Base::rational(Q("3/2")), Base::rational(Q("2")), test::silver()}) {
    for (int i = 0; i < 30; ++i) {
      const FieldElement x = eval(random_epword(rng), b);
      const GreedyResult g = greedy_digits(x, b, 12);
      FieldElement scale = b.element(Rational(1));
      for (int k = 0; k < 12; ++k) scale = scale / b.q();
      EXPECT_EQ(eval(g.word.digits, b) + g.remainder * scale, x);
      EXPECT_TRUE(b.in_hull(g.remainder));
    }
  }
}

TEST(Greedy, Examples) {
  const Base two = Base::rational(Q("2"));
  EXPECT_EQ(greedy_digits(two.element(Rational(1)), two, 4).word.to_string(), "q000");
  EXPECT_EQ(quasi_greedy_digits(two.element(Rational(1)), two, 4).to_string(), "1111");
  EXPECT_THROW((void)greedy_digits(two.element(Rational(3)), two, 2), Error);
  EXPECT_THROW((void)quasi_greedy_digits(two.element(Rational(0)), two, 2), Error);
  EXPECT_THROW((void)quasi_greedy_digits(Base::rational(Q("3")).element(Rational(1)), Base::rational(Q("3")), 2),
               Error);
}

TEST(Alpha, Closures) {
  const auto at_crit = alpha(test::qcrit(), 64);
  ASSERT_TRUE(at_crit.closure.has_value());
  EXPECT_EQ(*at_crit.closure, W("q(1)*"));
  const auto at_silver = alpha(test::silver(), 64);
  ASSERT_TRUE(at_silver.closure.has_value());
  EXPECT_EQ(*at_silver.closure, W("(q1)*"));
  const auto at_two = alpha(Base::rational(Q("2")), 64);
  ASSERT_TRUE(at_two.closure.has_value());
  EXPECT_EQ(*at_two.closure, W("(1)*"));
  const auto at_star = alpha(test::qstar(), 64);
  ASSERT_TRUE(at_star.closure.has_value());
  EXPECT_EQ(*at_star.closure, W("(q)*"));
}

TEST(Alpha, ClosureEvaluatesToQMinusOne) {
  for (const Base& b : {test::silver(), test::qcrit(), test::qstar(), Base::rational(Q("2")),
                        Base::rational(Q("12/5"))}) {
    const auto a = alpha(b, 128);
    if (!a.closure) continue;
    EXPECT_EQ(eval(*a.closure, b), b.q() - Rational(1)) << b.describe();
  }
}

TEST(Alpha, PrefixIsQuasiGreedyOfQMinusOne) {
  const Base s = test::silver();
  const auto a = alpha(s, 40);
  EXPECT_EQ(a.prefix.digits, quasi_greedy_digits(s.q() - Rational(1), s, 40).digits);
}

TEST(Alpha, GapIndexIsLeast) {
  for (const Base& b : {test::silver(), Base::rational(Q("12/5")), Base::rational(Q("5/2"))}) {
    const std::size_t m = alpha_gap_index(b);
    const auto a = alpha(b, 256);
    auto word = [](std::size_t k) {
      DigitString pre{Digit::Q};
      pre.insert(pre.end(), k, Digit::One);
      pre.push_back(Digit::Q);
      return EPWord(pre, {Digit::Zero});
    };
    EXPECT_EQ(compare_to_prefix(word(m), a.prefix.digits), std::strong_ordering::less) << b.describe();
    if (m > 1) {
      EXPECT_NE(compare_to_prefix(word(m - 1), a.prefix.digits), std::strong_ordering::less);
    }
  }
  EXPECT_THROW((void)alpha_gap_index(Base::rational(Q("3/2"))), Error);
}

TEST(Switch, Regions) {
  const Base b = Base::rational(Q("3/2"));
  const SwitchRegion r = switch_region(b);
  EXPECT_EQ(r.zero_one.lo, b.element(Q("2/3")));
  EXPECT_EQ(r.zero_one.hi, b.element(Q("2")));
  EXPECT_EQ(r.one_q.lo, b.element(Q("1")));
  EXPECT_EQ(r.one_q.hi, b.element(Q("8/3")));
  EXPECT_FALSE(r.disjoint);
  EXPECT_FALSE(r.hull_only);
  const SwitchRegion s = switch_region(Base::rational(Q("3")));
  EXPECT_TRUE(s.disjoint);
  EXPECT_TRUE(s.hull_only);
}

TEST(Uniqueness, Examples) {
  const Base three = Base::rational(Q("3"));
  EXPECT_EQ(unique_membership_word(W("(0)*"), three), Uniqueness::Unique);
  EXPECT_EQ(unique_membership_word(W("(q)*"), three), Uniqueness::Unique);
  EXPECT_EQ(unique_membership_word(W("(1)*"), three), Uniqueness::NotUnique);
  EXPECT_EQ(unique_membership_word(W("1(0)*"), three), Uniqueness::NotUnique);
  const Base sub = Base::rational(Q("3/2"));
  EXPECT_EQ(unique_membership_word(W("(q)*"), sub), Uniqueness::Unique);
  EXPECT_EQ(unique_membership_word(W("(q1)*"), sub), Uniqueness::NotUnique);
}

// The lexicographic test must agree with the follower-graph census.
TEST(Uniqueness, AgreesWithCensus) {
  std::mt19937_64 rng(41);
  for (const Base& b : {Base::rational(Q("3")), Base::rational(Q("11/4")), Base::rational(Q("5/2")), test::silver()}) {
    for (int i = 0; i < 60; ++i) {
      const EPWord w = random_epword(rng, 3, 3);
      const Uniqueness u = unique_membership_word(w, b);
      if (u == Uniqueness::Indeterminate) continue;
      const Cardinality c = classify(eval(w, b), b);
      if (c.kind == Cardinality::Kind::UnresolvedAtCap) continue;
      EXPECT_EQ(u == Uniqueness::Unique, c.is_finite(1)) << w.to_string() << " @ " << b.describe() << ": "
                                                          << describe(c);
    }
  }
}
