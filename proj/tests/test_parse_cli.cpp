#include <gtest/gtest.h>
#include <json.hpp>

#include <functional>
#include <sstream>

#include "algcurv/parse.hpp"
#include "cli.hpp"
#include "test_util.hpp"

using namespace algcurv;
using algcurv::testing::Rng;

namespace {

const VarAlphabet kXY({"x", "y"});

struct CliResult {
  int code;
  std::string out, err;
};

CliResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = algcurv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(ParsePoly, SyntaxErrorsCarryOffsets) {
  try {
    parse_poly("x + ", kXY);
    FAIL() << "no throw";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
  EXPECT_THROW(parse_poly("x + z", kXY), UnknownVariable);
  EXPECT_THROW(parse_poly("(x + y", kXY), SyntaxError);
  EXPECT_THROW(parse_poly("x / y", kXY), SyntaxError);
  EXPECT_THROW(parse_poly("x / 0", kXY), DivisionByZero);
  EXPECT_THROW(parse_poly("x^5000", kXY), InputError);
  EXPECT_THROW(parse_poly("x'", kXY), SyntaxError);
}

TEST(ParsePoly, PrecedenceAndUnaryMinus) {
  EXPECT_EQ(parse_poly("-x^2", kXY), -parse_poly("x*x", kXY));
  EXPECT_EQ(parse_poly("2*(x + y)/4", kXY), parse_poly("1/2*x + 1/2*y", kXY));
  EXPECT_EQ(parse_poly("x - -y", kXY), parse_poly("x + y", kXY));
}

TEST(ParseDiffExpr, JetNotation) {
  EXPECT_EQ(parse_diffexpr("y^(3)", 1), DiffExpr::jet(JetVar{JetFamily::Y, 1, 3}, 1));
  EXPECT_EQ(parse_diffexpr("x''", 1), parse_diffexpr("x^(2)", 1));
  EXPECT_THROW(parse_diffexpr("x'''", 1), SyntaxError);
  EXPECT_THROW(parse_diffexpr("x^(25)", 1), JetIndexOverflow);
  EXPECT_THROW(parse_diffexpr("y3", 2), InputError);
  EXPECT_THROW(parse_diffexpr("phi'", 1), InputError);
  EXPECT_NO_THROW(parse_diffexpr("phi'", 1, true));
}

TEST(ParsePoly, PropertyRoundTrip) {
  Rng rng(71);
  const VarAlphabet abc({"a", "b", "c"});
  for (int trial = 0; trial < 60; ++trial) {
    const MPoly p = algcurv::testing::random_poly(rng, abc, 4, 5);
    EXPECT_EQ(parse_poly(p.to_string(), abc), p) << p.to_string();
  }
}

TEST(ParseSeries, ExpandsRationalExpressions) {
  const TruncSeries geo = parse_series("1/(1 - t)", 5);
  for (std::uint32_t i = 0; i <= 5; ++i) EXPECT_EQ(geo.coeff(i), 1);
  EXPECT_THROW(parse_series("1/t", 5), NonUnitDivisor);
  EXPECT_EQ(parse_series("(1 + t)^3", 4), TruncSeries(std::vector<Rational>{1, 3, 3, 1, 0}));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({"curvature", "--curve", "y - x^2", "--point", "0,0"}).code, 0);
  EXPECT_EQ(invoke({"curvature", "--curve", "x^2 - y^2", "--point", "0,0"}).code, 1);
  const CliResult bad = invoke({"slope", "--curve", "x + ", "--point", "0,0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("offset 4"), std::string::npos);
  EXPECT_EQ(invoke({"nosuchcommand"}).code, 2);
  EXPECT_EQ(invoke({"slope", "--curve", "y - x", "--point", "1,0"}).code, 1);
}

TEST(Cli, JsonUsesExactRationalStrings) {
  const CliResult r = invoke({"curvature", "--curve", "x^2+(y+1/2)^2-1/4", "--point", "0,-1", "--imax", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::function<void(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
    EXPECT_FALSE(v.is_number_float());
    if (v.is_structured())
      for (const auto& c : v) no_floats(c);
  };
  no_floats(j);
  EXPECT_NE(r.out.find("\"24\""), std::string::npos);
}

TEST(Cli, OtherSubcommandsSmoke) {
  EXPECT_EQ(invoke({"deprel", "--series", "exp", "--order", "12", "--k", "2", "--d", "1"}).out,
            "relation: f1' - f1 = 0\nverified by substitution to order 7\n");
  EXPECT_EQ(invoke({"interp", "--point", "0:0", "--point", "1:1"}).out, "f = x\n");
  EXPECT_EQ(invoke({"wronskian", "--series", "1", "--series", "t", "--series", "t^2"}).code, 0);
  EXPECT_EQ(invoke({"invariant", "rewrite", "--expr", "y'/x'"}).code, 0);
}

TEST(WrapLines, BreaksAtTermBoundaries) {
  const std::string w = algcurv::cli::wrap_lines("a + bbbbbbbb + cccccccc - dddddddd", 20);
  for (std::size_t s = 0, e; s < w.size(); s = e + 1) {
    e = w.find('\n', s);
    if (e == std::string::npos) e = w.size();
    EXPECT_LE(e - s, 20u);
  }
  EXPECT_EQ(algcurv::cli::wrap_lines("short", 20), "short");
}
