#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "triexp/error.hpp"
#include "triexp/verify.hpp"
#include "triexp/words.hpp"

using namespace triexp;

namespace {

EPWord W(const char* text) { return EPWord::parse(text); }

// Symbol-by-symbol comparison of the first n symbols.
std::strong_ordering naive_compare(const EPWord& a, const EPWord& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i) != b.at(i)) return a.at(i) < b.at(i) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace

TEST(Words, ParseAndPrintRoundTrip) {
  for (const char* text : {"(100)*", "1(0)*", "0q(q1)*", "(q11)*", "(0)*"}) {
    EXPECT_EQ(W(text).to_string(), text);
  }
  EXPECT_EQ(W("0qq(1q)*").to_string(), "0q(q1)*");
  EXPECT_EQ(W("0QQ(1Q)*"), W("0qq(1q)*"));
}

TEST(Words, ParseRejectsWordsWithoutPeriod) {
  for (const char* bad : {"0101", "", "()*", "(12)*", "0(1", "0(1)"}) {
    EXPECT_THROW((void)W(bad), Error) << bad;
  }
  try {
    (void)EPWord({Digit::One}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyPeriod);
  }
}

TEST(Words, Canonicalization) {
  EXPECT_EQ(canonicalize({Digit::Zero}, {Digit::One, Digit::Q}),
            canonicalize({Digit::Zero, Digit::One}, {Digit::Q, Digit::One}));
  EXPECT_EQ(canonicalize({}, {Digit::Q, Digit::Q}).period(), DigitString{Digit::Q});
  const EPWord ones = canonicalize({Digit::One}, {Digit::One});
  EXPECT_TRUE(ones.preperiod().empty());
  EXPECT_EQ(ones.period(), DigitString{Digit::One});
}

TEST(Words, LexCompareExamples) {
  EXPECT_EQ(lex_compare(W("(1)*"), W("q(0)*")), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(W("(1q)*"), W("(1)*")), std::strong_ordering::greater);
  EXPECT_EQ(lex_compare(W("(q1)*"), W("q1q(0)*")), std::strong_ordering::greater);
}

TEST(Words, LexCompareAgreesWithNaiveComparison) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const EPWord a = random_epword(rng, 3, 3);
    const EPWord b = random_epword(rng, 3, 3);
    const std::size_t horizon = 10 * (a.preperiod().size() + a.period().size() + b.preperiod().size() +
                                      b.period().size());
    EXPECT_EQ(lex_compare(a, b), naive_compare(a, b, horizon)) << a.to_string() << " " << b.to_string();
    EXPECT_EQ(lex_compare(a, b) == std::strong_ordering::equal, a == b);
  }
}

TEST(Words, CompareToPrefix) {
  const EPWord w = W("(q1)*");
  const DigitString p{Digit::Q, Digit::One, Digit::Q};
  EXPECT_FALSE(compare_to_prefix(w, p).has_value());
  const DigitString bigger{Digit::Q, Digit::Q};
  EXPECT_EQ(compare_to_prefix(w, bigger), std::strong_ordering::less);
}

TEST(Words, Tails) {
  EXPECT_EQ(tail(W("0q(1q)*"), 2), W("(1q)*"));
  EXPECT_EQ(W("0q(1q)*"), W("0(q1)*"));
  EXPECT_EQ(tail(W("(1q)*"), 1), W("(q1)*"));
  EXPECT_EQ(tail(W("0q(1q)*"), 0), W("0q(1q)*"));
  const auto t = distinct_tails(W("0q(1q)*"));
  EXPECT_EQ(t, (std::vector<EPWord>{W("0(q1)*"), W("(q1)*"), W("(1q)*")}));
  EXPECT_EQ(distinct_tails(W("(0)*")).size(), 1u);
  EXPECT_EQ(distinct_tails(W("(q11)*")).size(), 3u);
}

TEST(Words, PhiMapExamplesAndOrder) {
  EXPECT_EQ(phi_map(W("q(1)*")).to_string(), "2(1)*");
  EXPECT_EQ(phi_map(W("(q1)*")).to_string(), "(21)*");
  EXPECT_EQ(phi_map(W("(0)*")).to_string(), "(0)*");
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    const EPWord a = random_epword(rng), b = random_epword(rng);
    EXPECT_EQ(lex_compare(a, b), phi_map(a) <=> phi_map(b));
  }
}

TEST(Words, SubstituteSiblings) {
  EXPECT_EQ(substitute_siblings(W("1(0)*"), 4), std::vector<EPWord>{W("0q(0)*")});
  EXPECT_EQ(substitute_siblings(W("0(q)*"), 4), std::vector<EPWord>{W("10(q)*")});
  EXPECT_TRUE(substitute_siblings(W("(1)*"), 8).empty());
}
