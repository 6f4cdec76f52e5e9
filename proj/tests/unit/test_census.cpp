#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "triexp/census.hpp"
#include "triexp/error.hpp"
#include "triexp/verify.hpp"

using namespace triexp;
using test::Q;
using Kind = Cardinality::Kind;

namespace {

EPWord W(const char* text) { return EPWord::parse(text); }

// Enumerates all 3^depth strings over a rational base q <= q*, where the
// attractor is the full hull, and keeps those whose remainders stay in it.
std::size_t brute_prefix_count(const Rational& x, const Rational& q, std::size_t depth) {
  const Rational M = q / (q - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < depth; ++i) total *= 3;
  std::size_t hits = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Rational r = x;
    std::size_t c = code;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int d = static_cast<int>(c % 3);
      c /= 3;
      r = q * r - (d == 0 ? Rational(0) : d == 1 ? Rational(1) : q);
      ok = sgn(r) >= 0 && r <= M;
    }
    hits += ok ? 1 : 0;
  }
  return hits;
}

}  // namespace

TEST(Graph, SmallExample) {
  const Base three = Base::rational(Q("3"));
  const ExpansionGraph g = build_graph(three.element(Rational(0)), three);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.find(three.element(Rational(0))).has_value());
  EXPECT_THROW((void)build_graph(eval(W("(1)*"), Base::rational(Q("3/2"))), Base::rational(Q("3/2")), 8), Error);
}

TEST(Graph, NodesStayInHull) {
  const Base s = test::silver();
  const ExpansionGraph g = build_graph(eval(W("0qq(1q)*"), s), s);
  for (const auto& v : g.nodes) EXPECT_TRUE(s.in_hull(v));
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (const auto& e : g.edges[i]) {
      EXPECT_EQ(g.nodes[e.target], s.q() * g.nodes[i] - s.digit_value(e.digit));
    }
  }
}

TEST(Classify, FiniteThreeAtThree) {
  const Base three = Base::rational(Q("3"));
  const Cardinality c = classify(eval(W("0qq(1q)*"), three), three);
  EXPECT_TRUE(c.is_finite(3)) << describe(c);
  EXPECT_EQ(describe(c), "finite 3");
  EXPECT_EQ(c.witnesses, (std::vector<EPWord>{W("0q(q1)*"), W("10(q1)*"), W("110(1q)*")}));
}

TEST(Classify, WitnessesEvaluateToThePoint) {
  std::mt19937_64 rng(3);
  for (const Base& b : {Base::rational(Q("3")), Base::rational(Q("5/2")), test::silver()}) {
    for (int i = 0; i < 25; ++i) {
      const FieldElement x = eval(random_epword(rng, 3, 3), b);
      const Cardinality c = classify(x, b);
      if (c.kind != Kind::Finite) continue;
      EXPECT_EQ(c.witnesses.size(), c.count);
      for (const auto& w : c.witnesses) EXPECT_EQ(eval(w, b), x) << w.to_string();
    }
  }
}

TEST(Classify, Examples) {
  const Base three = Base::rational(Q("3"));
  EXPECT_TRUE(classify(three.element(Rational(0)), three).is_finite(1));
  EXPECT_EQ(classify(three.element(Rational(5)), three).kind, Kind::Zero);
  const Base two = Base::rational(Q("2"));
  EXPECT_EQ(classify(two.element(Rational(1)), two).kind, Kind::CountablyInfinite);
  const Base sub = Base::rational(Q("3/2"));
  EXPECT_EQ(classify(sub.element(Rational(1)), sub).kind, Kind::Continuum);
  EXPECT_TRUE(classify(test::silver().element(Rational(0)), test::silver()).is_finite(1));
  EXPECT_TRUE(classify(eval(W("0(q11)*"), test::silver()), test::silver()).is_finite(2));
}

// Below q_c every point other than the endpoints has a continuum.
TEST(Classify, DichotomyBelowCritical) {
  std::mt19937_64 rng(11);
  const Base b = Base::rational(Q("3/2"));
  for (int i = 0; i < 40; ++i) {
    const Cardinality c = classify(eval(random_epword(rng, 3, 3), b), b, 2000);
    EXPECT_NE(c.kind, Kind::CountablyInfinite);
    if (c.kind == Kind::Finite) EXPECT_EQ(c.count, 1u);
  }
}

TEST(Classify, SiblingsShareTheCensus) {
  std::mt19937_64 rng(13);
  const Base b = Base::rational(Q("3"));
  for (int i = 0; i < 40; ++i) {
    const EPWord w = random_epword(rng, 3, 3);
    const Cardinality c = classify(eval(w, b), b);
    for (const auto& s : substitute_siblings(w, 6)) {
      EXPECT_EQ(eval(s, b), eval(w, b));
      if (c.kind == Kind::Zero) continue;
      const Cardinality cs = classify(eval(s, b), b);
      EXPECT_EQ(cs.kind, c.kind);
      EXPECT_EQ(cs.count, c.count);
    }
  }
}

TEST(Classify, ContinuumCertificate) {
  const Base b = Base::rational(Q("3/2"));
  const auto& cert = b.continuum_certificate();
  ASSERT_TRUE(cert.has_value());
  EXPECT_LT(cert->lo, cert->hi);
  EXPECT_TRUE(b.in_hull(cert->lo));
  EXPECT_TRUE(b.in_hull(cert->hi));
  EXPECT_FALSE(Base::rational(Q("3")).continuum_certificate().has_value());
}

TEST(NullInfinite, ReportsSwitchNodes) {
  const Base two = Base::rational(Q("2"));
  const NullInfiniteReport r = null_infinite_check(two.element(Rational(1)), two);
  EXPECT_FALSE(r.switch_nodes.empty());
  for (const auto& n : r.switch_nodes) {
    std::size_t usable = 0;
    for (const auto& br : n.branches) usable += br.usable ? 1 : 0;
    EXPECT_GE(usable, 2u);
  }
  const Base three = Base::rational(Q("3"));
  EXPECT_FALSE(null_infinite_check(eval(W("0qq(1q)*"), three), three).null_infinite);
}

TEST(Witness, FamiliesHaveExactlyKExpansions) {
  for (const Base& b : {Base::rational(Q("3")), test::silver(), Base::rational(Q("5/2"))}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const BkWitness w = witness_for_Bk(b, k);
      ASSERT_TRUE(w.verified()) << b.describe() << " k=" << k;
      EXPECT_TRUE(w.verification.is_finite(k));
      EXPECT_EQ(w.gap_index.has_value(), b.regime() == Regime::Middle);
    }
  }
  const Base sub = Base::rational(Q("3/2"));
  EXPECT_TRUE(witness_for_Bk(sub, 1).verification.is_finite(1));
  try {
    (void)witness_for_Bk(sub, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoWitness);
  }
}

TEST(ClassifyBase, Memberships) {
  const BaseMembership sub = classify_base(Base::rational(Q("3/2")));
  EXPECT_TRUE(sub.unique && sub.continuum);
  EXPECT_FALSE(sub.multiple_k || sub.countable);
  const BaseMembership silver = classify_base(test::silver());
  EXPECT_TRUE(silver.multiple_k && silver.countable);
  const BaseMembership super = classify_base(Base::rational(Q("3")));
  EXPECT_TRUE(super.unique && super.multiple_k && super.countable && super.continuum);
}

TEST(Prefixes, MatchBruteForce) {
  std::mt19937_64 rng(19);
  for (const char* qt : {"3/2", "2", "5/2"}) {
    const Rational q = Q(qt);
    const Base b = Base::rational(q);
    const Rational M = q / (q - 1);
    for (int i = 0; i < 8; ++i) {
      std::uniform_int_distribution<long> num(0, 60);
      const Rational x = M * make_rational(num(rng), 60);
      for (std::size_t depth : {1u, 3u, 6u}) {
        const std::size_t expected = brute_prefix_count(x, q, depth);
        EXPECT_EQ(count_prefixes_to_depth(b.element(x), b, depth), BigInt(expected)) << qt << " " << x;
        EXPECT_EQ(prefixes_to_depth(b.element(x), b, depth).size(), expected);
        EXPECT_GE(count_prefixes_to_depth(RationalInterval(x), b, depth), BigInt(expected));
      }
    }
  }
  EXPECT_THROW((void)count_prefixes_to_depth(Base::rational(Q("2")).element(Rational(1)), Base::rational(Q("2")),
                                             kMaxExactDepth + 1),
               Error);
}

TEST(Graph, HalfAtThree) {
  const Base three = Base::rational(Q("3"));
  const ExpansionGraph g = build_graph(three.element(Q("1/2")), three);
  ASSERT_EQ(g.size(), 2u);
  const auto half = g.find(three.element(Q("1/2")));
  const auto top = g.find(three.element(Q("3/2")));
  ASSERT_TRUE(half && top);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(build_graph(three.element(Rational(-1)), three).empty());
}

TEST(NullInfinite, SpecExamples) {
  const Base two = Base::rational(Q("2")), three = Base::rational(Q("3"));
  EXPECT_TRUE(null_infinite_check(eval(W("0(q)*"), two), two).null_infinite);
  EXPECT_TRUE(null_infinite_check(eval(W("00(q)*"), three), three).null_infinite);
  EXPECT_FALSE(null_infinite_check(eval(W("(100)*"), three), three).null_infinite);
}

TEST(Witness, SpecExamples) {
  EXPECT_EQ(witness_for_Bk(Base::rational(Q("3")), 4).word, W("0qqq(1q)*"));
  const BkWitness s = witness_for_Bk(test::silver(), 2);
  EXPECT_EQ(s.gap_index, std::optional<std::size_t>(1));
  EXPECT_EQ(s.word, W("0q(11q)*"));
  EXPECT_THROW((void)witness_for_Bk(Base::rational(Q("9/4")), 2), Error);
}

TEST(Prefixes, StabilizeAtFiniteCount) {
  const Base three = Base::rational(Q("3"));
  EXPECT_EQ(count_prefixes_to_depth(eval(W("0qq(1q)*"), three), three, 12), BigInt(3));
}
