#include <gtest/gtest.h>

#include "algcurv/diffield.hpp"
#include "algcurv/parse.hpp"
#include "algcurv/series.hpp"
#include "test_util.hpp"

using namespace algcurv;
using algcurv::testing::Rng;

namespace {

TruncSeries S(std::vector<Rational> c) { return TruncSeries(std::move(c)); }

TruncSeries exp_series(std::uint32_t order) {
  TruncSeries s(order);
  for (std::uint32_t i = 0; i <= order; ++i) s.set_coeff(i, Rational(1) / factorial(i));
  return s;
}

Rational catalan(unsigned n) { return binomial(2 * n, n) / Rational(n + 1); }

TruncSeries random_reparam(Rng& rng, std::uint32_t order) {
  TruncSeries s = algcurv::testing::random_series(rng, order);
  s.set_coeff(0, 0);
  s.set_coeff(1, algcurv::testing::random_nonzero(rng));
  return s;
}

}  // namespace

TEST(SeriesArith, SpecExamples) {
  EXPECT_EQ(S({1, 1, 0}) * S({1, -1, 0}), S({1, 0, -1}));
  const TruncSeries geom = TruncSeries::constant(Rational(1), 6) / S({1, -1, 0, 0, 0, 0, 0});
  EXPECT_EQ(geom, S({1, 1, 1, 1, 1, 1, 1}));
  const TruncSeries t = TruncSeries::variable(4);
  EXPECT_THROW(t / t, NonUnitDivisor);
}

TEST(SeriesArith, OrderIsMinimumOfInputs) {
  const TruncSeries a(5), b(3);
  EXPECT_EQ((a + b).order(), 3u);
  EXPECT_EQ((a * b).order(), 3u);
  EXPECT_THROW(b.coeff(4), TruncationError);
}

TEST(SeriesDiff, SpecExamples) {
  EXPECT_EQ(series_diff(S({0, 0, 1, 0})), S({0, 2, 0}));
  EXPECT_TRUE(series_diff(TruncSeries::constant(Rational(3), 4)).is_zero());
  EXPECT_EQ(series_diff(exp_series(8)), exp_series(7));
  EXPECT_THROW(series_diff(TruncSeries(0)), TruncationError);
}

TEST(SeriesCompose, SpecExamples) {
  const TruncSeries f = S({3, -1, 2, 5, 1, 0});
  EXPECT_EQ(series_compose(f, TruncSeries::variable(5)), f);
  EXPECT_EQ(series_compose(S({0, 0, 1, 0, 0}), S({0, 1, 1, 0, 0})), S({0, 0, 1, 2, 1}));
  EXPECT_THROW(series_compose(f, S({1, 1, 0, 0, 0, 0})), CompositionBasepoint);
}

TEST(SeriesCompose, PropertyChainRule) {
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const TruncSeries f = algcurv::testing::random_series(rng, 8);
    const TruncSeries g = random_reparam(rng, 8);
    EXPECT_EQ(series_diff(series_compose(f, g)), series_compose(series_diff(f), g.truncate(7)) * series_diff(g));
  }
}

TEST(SeriesReverse, SpecExamples) {
  EXPECT_EQ(series_reverse(TruncSeries::variable(6)), TruncSeries::variable(6));
  // reverse(t + t^2): signed Catalan numbers
  const TruncSeries r = series_reverse(S({0, 1, 1, 0, 0, 0, 0, 0}));
  for (unsigned n = 1; n <= 7; ++n) EXPECT_EQ(r.coeff(n), (n % 2 ? 1 : -1) * catalan(n - 1)) << n;
  // node: x = t^3 - t, t(x) = -x - x^3 + O(x^5)
  const TruncSeries node = series_reverse(S({0, -1, 0, 1, 0}));
  EXPECT_EQ(node, S({0, -1, 0, -1, 0}));
  EXPECT_THROW(series_reverse(S({0, 0, 1, 0})), NotReversible);
  EXPECT_THROW(series_reverse(S({1, 1, 0, 0})), NotReversible);
}

TEST(SeriesReverse, PropertyInvolutionAndInverse) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const TruncSeries f = random_reparam(rng, 7);
    const TruncSeries g = series_reverse(f);
    EXPECT_EQ(series_compose(f, g), TruncSeries::variable(7));
    EXPECT_EQ(series_compose(g, f), TruncSeries::variable(7));
    EXPECT_EQ(series_reverse(g), f);
  }
}

TEST(SeriesText, Format) {
  EXPECT_EQ(S({1, 0, -1}).to_string(), "1 - t^2 + O(t^3)");
  EXPECT_EQ(S({0, Rational(1, 2), 3}).to_string(), "1/2*t + 3*t^2 + O(t^3)");
  EXPECT_EQ(TruncSeries(2).to_string(), "0 + O(t^3)");
}

TEST(EvalDiffExpr, SpecExamples) {
  const Parametrization parabola({TruncSeries::variable(8), S({0, 0, 1, 0, 0, 0, 0, 0, 0})});
  const TruncSeries slope = eval_diffexpr(parse_diffexpr("y'/x'", 1), parabola);
  EXPECT_EQ(slope, TruncSeries::variable(7) * Rational(2));
  const TruncSeries k1 = eval_diffexpr(parse_diffexpr("(y''*x' - y'*x'')/x'^3", 1), parabola);
  EXPECT_EQ(k1, TruncSeries::constant(Rational(2), 6));
  EXPECT_EQ(eval_diffexpr(parse_diffexpr("x", 1), parabola), parabola.x());
  EXPECT_THROW(eval_diffexpr(parse_diffexpr("phi'", 1, true), parabola), UnboundVariable);
  EXPECT_THROW(eval_diffexpr(parse_diffexpr("x^(9)", 1), parabola), TruncationError);
  EXPECT_THROW(eval_diffexpr(parse_diffexpr("1/x", 1), parabola), NonUnitDivisor);
}

TEST(EvalDiffExpr, PropertyHomomorphism) {
  Rng rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const DiffExpr p = algcurv::testing::random_diffexpr(rng, 2, 2);
    const DiffExpr q = algcurv::testing::random_diffexpr(rng, 2, 2);
    const Parametrization g({algcurv::testing::random_series(rng, 8), algcurv::testing::random_series(rng, 8)});
    try {
      const TruncSeries ep = eval_diffexpr(p, g), eq = eval_diffexpr(q, g);
      EXPECT_EQ(eval_diffexpr(p * q, g).truncate(6), (ep * eq).truncate(6));
      EXPECT_EQ(eval_diffexpr(p + q, g).truncate(6), (ep + eq).truncate(6));
    } catch (const NonUnitDivisor&) {
      // a denominator vanishing at t = 0 for this draw
    }
  }
}

TEST(Surrogate, DeterministicAndConstrained) {
  EXPECT_EQ(surrogate_series(42, 10), surrogate_series(42, 10));
  EXPECT_FALSE(surrogate_series(42, 10) == surrogate_series(43, 10));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const TruncSeries s =
        surrogate_series(seed, 6, SurrogateConstraint::ZeroConstant | SurrogateConstraint::UnitDerivative);
    EXPECT_EQ(s.valuation(), std::optional<std::size_t>(1));
    for (std::uint32_t i = 0; i <= 6; ++i) {
      EXPECT_LE(abs(s.coeff(i).get_num()), 9);
      EXPECT_LE(s.coeff(i).get_den(), 9);
    }
  }
}

TEST(Parametrization, ReparametrizeAndValidate) {
  EXPECT_THROW(Parametrization({TruncSeries::variable(3)}), InputError);
  EXPECT_THROW(Parametrization({TruncSeries::variable(3), TruncSeries::variable(4)}), TruncationError);
  const Parametrization g({TruncSeries::variable(5), S({0, 0, 1, 0, 0, 0})});
  EXPECT_THROW(g.y(2), UnboundVariable);
  const Parametrization h = g.reparametrize(S({0, 1, 1, 0, 0, 0}));
  EXPECT_EQ(h.y(1), S({0, 0, 1, 2, 1, 0}));
}
