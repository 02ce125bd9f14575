// Exact end-to-end checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "algcurv/branch.hpp"
#include "algcurv/dalg.hpp"
#include "algcurv/diffield.hpp"
#include "algcurv/parse.hpp"
#include "cli.hpp"
#include "test_util.hpp"

using namespace algcurv;
using algcurv::testing::Rng;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

CurveIdeal plane(const char* f) { return CurveIdeal({parse_poly(f, curve_alphabet(1))}); }

std::vector<Rational> point(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<Rational> kappa_values(const CurveIdeal& c, const std::vector<Rational>& p, unsigned i_max) {
  std::vector<Rational> out;
  for (const auto& v : kappa_at_point(c, p, i_max)) {
    require(v.status == PointValue::Status::Finite, "non-finite curvature value");
    out.push_back(v.value);
  }
  return out;
}

MPoly random_conic_through_origin(Rng& rng) {
  const VarAlphabet a = curve_alphabet(1);
  const MPoly x = MPoly::variable(a, 0), y = MPoly::variable(a, 1);
  return x * algcurv::testing::random_rational(rng) + y * algcurv::testing::random_nonzero(rng) +
         x * x * algcurv::testing::random_rational(rng) + x * y * algcurv::testing::random_rational(rng) +
         y * y * algcurv::testing::random_rational(rng);
}

void circle_node() {
  const CurveIdeal circle = plane("x^2 + (y + 1/2)^2 - 1/4");
  const CurveIdeal node = plane("x^2 - y^3 - y^2");
  const auto p = point({0, -1});
  require(kappa_values(circle, p, 3) == std::vector<Rational>{0, 2, 0, 24}, "circle values");
  require(kappa_values(node, p, 3) == std::vector<Rational>{0, 2, 0, 48}, "node values");

  const std::uint32_t N = 8;
  const TruncSeries x = TruncSeries::variable(N);
  TruncSeries yc(N), yn(N);
  for (int it = 0; it < 10; ++it) {
    yc = x * x + yc * yc;
    yn = x * x + yn * yn * Rational(2) - yn * yn * yn;
  }
  require(yc.coeff(2) == 1 && yc.coeff(4) == 1 && yc.coeff(6) == 2 && yc.coeff(8) == 5, "Catalan oracle");
  require(yn.coeff(2) == 1 && yn.coeff(4) == 2 && yn.coeff(6) == 7, "node oracle");
  const BranchSeries bc = reconstruct(circle, p, N), bn = reconstruct(node, p, N);
  require(bc.graphs[0] == yc && bn.graphs[0] == yn, "branches differ from oracle");
  const ContactResult c = contact_order(bc, bn);
  require(c.order == std::optional<std::size_t>(4), "contact order");
}

void plane_closed_form() {
  Rng rng(2024);
  const VarAlphabet a = curve_alphabet(1);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly f = random_conic_through_origin(rng) + algcurv::testing::random_poly(rng, a, 3, 3) *
                                                           MPoly::variable(a, trial % 2) * MPoly::variable(a, 0);
    require(f.diff(1).eval(std::vector<Rational>{0, 0}) != 0, "f_y(0) vanishes");
    const auto t = implicit_kappa(CurveIdeal({f}), 1);
    const MPoly fx = f.diff(std::size_t{0}), fy = f.diff(1);
    const MPoly fxx = fx.diff(std::size_t{0}), fxy = fx.diff(1), fyy = fy.diff(1);
    const RatFunc k1(-(fxx * fy * fy - fxy * fx * fy * Rational(2) + fyy * fx * fx), fy * fy * fy);
    require(t.at(0, 1) == RatFunc(-fx, fy), "kappa~_0 of " + f.to_string());
    require(t.at(1, 1) == k1, "kappa~_1 of " + f.to_string());
  }
}

void parametric_implicit() {
  const TruncSeries t = TruncSeries::variable(10);
  const VarAlphabet a2 = curve_alphabet(2);
  const CurveIdeal cubic({parse_poly("y1 - x^2", a2), parse_poly("y2 - x^3", a2)});
  require(consistency_check(cubic, Parametrization({t, t * t, t * t * t}), 5, 10).consistent, "twisted cubic");
  Rng rng(2025);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned n = 1 + trial % 3;
    const VarAlphabet a = curve_alphabet(n);
    std::vector<MPoly> gens;
    std::vector<TruncSeries> comps{t};
    for (unsigned j = 1; j <= n; ++j) {
      MPoly p(VarAlphabet({"x"}));
      for (std::uint32_t d = 1; d <= 4; ++d) p.add_term(Exponents{d}, algcurv::testing::random_rational(rng));
      gens.push_back(MPoly::variable(a, j) - p.embed(a));
      comps.push_back(TruncSeries::from_polynomial(p, 10));
    }
    require(consistency_check(CurveIdeal(gens), Parametrization(comps), 5, 10).consistent,
            "graph curve trial " + std::to_string(trial));
  }
}

void equivariance() {
  const DiffExpr one = DiffExpr::constant(Rational(1));
  std::vector<DiffExpr> corpus;
  for (unsigned i = 0; i <= 4; ++i) corpus.push_back(kappa_symbol(i, 1));
  corpus.push_back(kappa_symbol(1, 1) * kappa_symbol(2, 1));
  corpus.push_back(kappa_symbol(0, 1) * kappa_symbol(3, 1));
  corpus.push_back(kappa_symbol(2, 1) / (kappa_symbol(0, 1) * kappa_symbol(0, 1) + one));
  corpus.push_back(kappa_symbol(1, 1) / (kappa_symbol(1, 1) * kappa_symbol(1, 1) + one));

  const std::uint32_t order = 14;
  const auto unit = SurrogateConstraint::UnitDerivative;
  const auto reparam = SurrogateConstraint::ZeroConstant | SurrogateConstraint::UnitDerivative;
  for (std::uint64_t trial = 0; trial < 50; ++trial) {
    const DiffExpr& p = corpus[trial % corpus.size()];
    const Parametrization g({surrogate_series(3 * trial + 1, order, unit), surrogate_series(3 * trial + 2, order)});
    const TruncSeries phi = surrogate_series(3 * trial + 3, order, reparam);
    const TruncSeries rhs = eval_diffexpr(p, g.reparametrize(phi));
    const TruncSeries lhs = series_compose(eval_diffexpr(p, g), phi.truncate(rhs.order()));
    require(rhs.order() >= 8, "propagated order below 8");
    require(lhs == rhs, "trial " + std::to_string(trial) + ": " + p.to_string());
  }
}

void i_kappa_fixed_point() {
  for (unsigned i = 0; i <= 6; ++i)
    for (unsigned j = 1; j <= 2; ++j) {
      const DiffExpr p = kappa_symbol(i, j, std::max(12u, i));
      require(i_kappa(p) == p, "kappa_" + std::to_string(i) + "," + std::to_string(j));
    }
  for (const char* s : {"x'", "x''", "y''"})
    require(!is_invariant(parse_diffexpr(s, 1)).invariant, std::string(s) + " classified invariant");
}

void lambda_laws() {
  Rng rng(2026);
  const DiffExpr phi1 = parse_diffexpr("phi'", 1, true);
  for (int trial = 0; trial < 100; ++trial) {
    const DiffExpr p = algcurv::testing::random_diffexpr(rng, 3, 3);
    require(deriv_chain(p) == deriv_partial(p) * phi1, "chain rule on " + p.to_string());
    require(lambda_morphism(deriv_partial(p)) == deriv_chain(lambda_morphism(p)), "Lambda on " + p.to_string());
  }
}

void branch_certificate() {
  const VarAlphabet a2 = curve_alphabet(2);
  const std::vector<std::pair<CurveIdeal, std::vector<Rational>>> cases{
      {plane("x^2 + (y + 1/2)^2 - 1/4"), point({0, -1})},
      {plane("y - x^2"), point({0, 0})},
      {CurveIdeal({parse_poly("y1 - x^2", a2), parse_poly("y2 - x^3", a2)}), point({0, 0, 0})}};
  auto certify = [](const CurveIdeal& c, const std::vector<Rational>& p, const std::string& label) {
    for (const auto& r : residual_order(c, reconstruct(c, p, 10))) require(!r.has_value(), label + " not exact");
  };
  for (const auto& [c, p] : cases) certify(c, p, c.generators()[0].to_string());
  Rng rng(2027);
  for (int trial = 0; trial < 10; ++trial) {
    const MPoly f = random_conic_through_origin(rng);
    certify(CurveIdeal({f}), point({0, 0}), f.to_string());
  }
}

void appendix_suite() {
  const VarAlphabet t({"t"});
  auto family = [&](const std::vector<MPoly>& p, std::uint32_t order) {
    return SeriesFamily::from_polynomials(p, order);
  };
  require(wronskian_det(family({parse_poly("1", t), parse_poly("t", t), parse_poly("t^2", t)}, 10)) ==
              TruncSeries::constant(Rational(2), 8),
          "W(1, t, t^2)");

  Rng rng(2028);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 1 + trial % 4;
    std::vector<MPoly> p;
    for (std::size_t l = 0; l < m; ++l) {
      if (l > 0 && rng() % 3 == 0)
        p.push_back(p[0] * algcurv::testing::random_rational(rng) + p[l - 1]);
      else
        p.push_back(algcurv::testing::random_poly(rng, t, 5, 4));
    }
    const SeriesFamily fam = family(p, 30);
    const bool dep = linear_dependence(fam).verdict == LinearDependence::Verdict::Dependent;
    require(dep == wronskian_det(fam).is_zero(), "family " + std::to_string(trial));
  }

  TruncSeries e(12);
  for (std::uint32_t i = 0; i <= 12; ++i) e.set_coeff(i, Rational(1) / factorial(i));
  const auto rel = d_relation_search(SeriesFamily({e}), 2, 1, false);
  require(rel.relation && rel.relation->to_string() == "f1' - f1 = 0", "exp relation");
  const SeriesFamily sur({surrogate_series(1, 30), surrogate_series(2, 30)});
  require(!d_relation_search(sur, 2, 2, false).relation, "surrogates related");

  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t npts = 1 + trial % 3, k = 1 + trial % 4;
    std::vector<InterpolationPoint> pts;
    for (std::size_t s = 0; s < npts; ++s) {
      InterpolationPoint q{Rational(static_cast<long>(s) * 2 - 1) / (1 + trial % 3), {}};
      for (std::size_t i = 0; i < k; ++i) q.values.push_back(algcurv::testing::random_rational(rng));
      pts.push_back(q);
    }
    const MPoly f = hermite_interpolate(pts);
    for (const auto& q : pts) {
      MPoly d = f;
      for (std::size_t i = 0; i < k; ++i, d = d.diff(std::size_t{0}))
        require(d.eval(std::vector<Rational>{q.a}) == q.values[i], "hermite " + std::to_string(trial));
    }
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "missing " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void cli_golden() {
  const std::vector<std::pair<std::string, std::vector<std::string>>> runs{
      {"compare.txt",
       {"compare", "--curve1", "x^2+(y+1/2)^2-1/4", "--curve2", "x^2-y^3-y^2", "--point", "0,-1", "--order", "8"}},
      {"invariant_check.txt", {"invariant", "check", "--n", "1", "--expr", "x'"}},
      {"curvature.txt", {"curvature", "--curve", "y - x^2", "--point", "0,0", "--imax", "3"}}};
  for (const auto& [file, args] : runs) {
    const std::string golden = slurp(std::string(ALGCURV_GOLDEN_DIR) + "/" + file);
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      require(algcurv::cli::run(args, out, err) == 0, file + ": " + err.str());
      require(out.str() == golden, file + " differs from golden transcript");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::tuple<const char*, double, std::function<void()>>> criteria{
      {"1 circle/node discrimination", 1.0, circle_node},
      {"2 plane closed form", 5.0, plane_closed_form},
      {"3 parametric/implicit consistency", 10.0, parametric_implicit},
      {"4 equivariance", 10.0, equivariance},
      {"5 i_kappa fixed points", 5.0, i_kappa_fixed_point},
      {"6 Lambda laws", 10.0, lambda_laws},
      {"7 branch certificate", 5.0, branch_certificate},
      {"8 Wronskian/relations/interpolation", 10.0, appendix_suite},
      {"9 CLI determinism", 10.0, cli_golden}};
  int failed = 0;
  for (const auto& [name, budget, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      fn();
    } catch (const Failure& f) {
      reason = f.what;
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && secs > budget) reason = "over time budget";
    std::cout << (reason.empty() ? "PASS " : "FAIL ") << name << " (" << secs << " s)";
    if (!reason.empty()) std::cout << ": " << reason;
    std::cout << '\n';
    failed += !reason.empty();
  }
  return failed ? 1 : 0;
}
