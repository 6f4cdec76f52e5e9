#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "triexp/dimension.hpp"
#include "triexp/error.hpp"

using namespace triexp;
using test::Q;

namespace {

// det(xI - A) at a rational point by fraction-exact Gaussian elimination.
Rational det_shifted(const SFT& m, const Rational& x) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? x : Rational(0)) - Rational(m.adjacency[i][j]);
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

SFT square(std::vector<std::vector<std::int64_t>> a) {
  SFT m;
  for (std::size_t i = 0; i < a.size(); ++i) m.states.push_back(std::to_string(i));
  m.adjacency = std::move(a);
  return m;
}

}  // namespace

TEST(CharPoly, MatchesDeterminantOracle) {
  const std::vector<SFT> cases{super_regime_subshift(), silver_subshift(),
                               square({{2, 1, 0, 3}, {0, 0, 1, 1}, {5, 0, 0, 2}, {1, 1, 1, 1}}),
                               square({{0, 1}, {1, 0}}), square({{4}})};
  for (const auto& m : cases) {
    const IntPolynomial p = characteristic_polynomial(m);
    EXPECT_EQ(p.degree(), static_cast<int>(m.size()));
    for (long x = -3; x <= 4; ++x) EXPECT_EQ(p.eval(Rational(x)), det_shifted(m, Rational(x)));
    EXPECT_EQ(p.eval(Q("7/3")), det_shifted(m, Q("7/3")));
  }
}

TEST(CharPoly, SuperRegimeGivesCriticalCubic) {
  EXPECT_EQ(characteristic_polynomial(super_regime_subshift()), constants::critical_polynomial());
  EXPECT_EQ(spectral_radius(super_regime_subshift()), constants::critical_base());
}

TEST(SpectralRadius, SimpleMatrices) {
  EXPECT_EQ(spectral_radius(square({{1, 0}, {0, 1}})), RealAlgebraic::rational(Rational(1)));
  EXPECT_EQ(spectral_radius(square({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), RealAlgebraic::rational(Rational(3)));
  EXPECT_EQ(spectral_radius(square({{0, 1}, {0, 0}})), RealAlgebraic::rational(Rational(0)));
  EXPECT_EQ(spectral_radius(square({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}})), RealAlgebraic::rational(Rational(1)));
}

TEST(SpectralRadius, AgreesWithPowerIteration) {
  for (const SFT& m : {super_regime_subshift(), silver_subshift()}) {
    EXPECT_NEAR(spectral_radius(m).approx(), power_iteration_radius(m), 1e-9);
    const RadiusBounds b = spectral_radius_bounds(to_sparse(m));
    EXPECT_LE(b.lo, spectral_radius(m).approx());
    EXPECT_GE(b.hi, spectral_radius(m).approx());
    EXPECT_LT(b.hi - b.lo, 1e-9);
  }
}

TEST(PathCounts, GrowthApproachesRadius) {
  const SFT m = super_regime_subshift();
  const auto n = path_counts(m, 60);
  ASSERT_EQ(n.size(), 60u);
  EXPECT_EQ(n[0], BigInt(7));  // entries of A
  const double ratio = make_rational(n[59], n[58]).get_d();
  EXPECT_NEAR(ratio, constants::critical_base().approx(), 1e-9);
  const auto from_zero = path_counts(m, 3, 0);
  EXPECT_EQ(from_zero[0], BigInt(2));
}

TEST(Validate, RejectsBadMatrices) {
  EXPECT_THROW(square({{1, 0}, {0}}).validate(), Error);
  EXPECT_THROW(square({{-1}}).validate(), Error);
  EXPECT_THROW((void)entropy(square({{0, 1}, {0, 0}})), Error);
}

TEST(Dimension, AttractorAndUnivoqueAtThree) {
  const Base three = Base::rational(Q("3"));
  const double lq = std::log(3.0);
  EXPECT_NEAR(dim_attractor(three).value(), std::log(constants::golden_square().approx()) / lq, 1e-12);
  EXPECT_NEAR(dim_univoque(three).value(), std::log(constants::critical_base().approx()) / lq, 1e-12);
  EXPECT_EQ(dim_univoque(three).decimal(dim_univoque(three).value()), "0.767877");
  EXPECT_EQ(dim_attractor(three).decimal(dim_attractor(three).value()), "0.876036");
  EXPECT_TRUE(dim_attractor(Base::rational(Q("2"))).is_exact());
  EXPECT_EQ(dim_attractor(Base::rational(Q("2"))).value(), 1.0);
}

TEST(Dimension, SubCriticalUnivoqueIsZero) {
  EXPECT_EQ(dim_univoque(Base::rational(Q("3/2"))).value(), 0.0);
  EXPECT_EQ(dim_univoque(test::qcrit()).value(), 0.0);
  EXPECT_THROW((void)dim_multi(Base::rational(Q("3/2")), 2), Error);
  EXPECT_EQ(dim_multi(Base::rational(Q("3/2")), 1).value(), 0.0);
}

TEST(Dimension, SilverSubshiftEntropy) {
  const double v = entropy(silver_subshift()).value() / std::log(constants::silver_ratio().approx());
  EXPECT_NEAR(v, 0.691404, 1e-4);
}

TEST(Dimension, BlockBoundsEncloseKnownValues) {
  const Base s = test::qstar();
  const double exact = std::log(constants::critical_base().approx()) / std::log(s.value().approx());
  for (std::size_t m = 3; m <= 8; ++m) {
    const DimReport r = dim_univoque_bounds(s, m);
    EXPECT_LE(r.lo, exact + 1e-12) << m;
    EXPECT_GE(r.hi, exact - 1e-12) << m;
  }
  const Base silver = test::silver();
  const double sv = entropy(silver_subshift()).value() / std::log(silver.value().approx());
  for (std::size_t m = 3; m <= 8; ++m) {
    const DimReport r = dim_univoque_bounds(silver, m);
    EXPECT_LE(r.lo, sv + 1e-9) << m;
    EXPECT_GE(r.hi, sv - 1e-9) << m;
  }
  EXPECT_THROW((void)dim_univoque_bounds(silver, 13), Error);
}

TEST(Dimension, DeltaBoundFormula) {
  const Base s = test::silver();
  const DeltaBound d = delta_lower_bound(s);
  EXPECT_NEAR(d.bound.value(), std::log(2.0) / ((d.m + 2) * std::log(s.value().approx())), 1e-12);
  EXPECT_LE(d.bound.value(), dim_univoque(s).hi + 1e-12);
}

TEST(Dimension, MultiIndependentOfK) {
  for (const Base& b : {Base::rational(Q("3")), test::qstar()}) {
    const DimReport d2 = dim_multi(b, 2), d5 = dim_multi(b, 5);
    EXPECT_TRUE(d2.same_exact_value(d5));
    EXPECT_TRUE(d2.same_exact_value(dim_univoque(b)));
  }
  EXPECT_EQ(dim_continuum(Base::rational(Q("3/2"))).value(), 1.0);
  EXPECT_TRUE(dim_continuum(Base::rational(Q("3"))).same_exact_value(dim_attractor(Base::rational(Q("3")))));
}

TEST(LogRatioCarrier, EqualityAndFormula) {
  const LogRatio a{constants::critical_base(), constants::golden_square(), Rational(1)};
  const LogRatio b{constants::critical_base(), constants::golden_square(), Rational(1)};
  EXPECT_EQ(a, b);
  EXPECT_NEAR(a.value(), std::log(constants::critical_base().approx()) / std::log(constants::golden_square().approx()),
              1e-12);
  EXPECT_NE(a.formula().find("q_c"), std::string::npos);
}
