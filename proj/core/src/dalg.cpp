#include "algcurv/dalg.hpp"

#include <algorithm>
#include <bit>

#include "algcurv/linalg.hpp"

namespace algcurv {

SeriesFamily::SeriesFamily(std::vector<TruncSeries> m, bool poly) : members(std::move(m)), polynomial(poly) {
  if (members.empty()) throw InputError("a series family needs at least one member");
  for (const auto& s : members)
    if (s.order() != members.front().order()) throw InputError("family members must share a truncation order");
}

SeriesFamily SeriesFamily::from_polynomials(const std::vector<MPoly>& polys, std::uint32_t order) {
  std::vector<TruncSeries> members;
  for (const auto& p : polys) {
    if (p.alphabet().size() > 1) throw InputError("family polynomials must be univariate");
    if (!p.is_zero() && p.total_degree() >= order)
      throw InsufficientOrder("polynomial degree " + std::to_string(p.total_degree()) + " is not below the order " +
                              std::to_string(order));
    members.push_back(TruncSeries::from_polynomial(p, order));
  }
  return SeriesFamily(std::move(members), true);
}

TruncSeries wronskian_det(const SeriesFamily& fam) {
  const std::size_t m = fam.size();
  const std::uint32_t n = fam.order();
  if (n < m - 1)
    throw InsufficientOrder("a Wronskian of " + std::to_string(m) + " series needs order >= " + std::to_string(m - 1));
  const std::uint32_t out = n - static_cast<std::uint32_t>(m - 1);
  // rows[s][l] = d^s g_l truncated to the output order
  std::vector<std::vector<TruncSeries>> rows(m);
  for (std::size_t l = 0; l < m; ++l) {
    TruncSeries g = fam.members[l];
    for (std::size_t s = 0; s < m; ++s) {
      rows[s].push_back(g.truncate(out));
      if (s + 1 < m) g = series_diff(g);
    }
  }
  // minors[mask]: determinant of the first popcount(mask) rows on the columns in mask.
  std::vector<TruncSeries> minors(std::size_t{1} << m, TruncSeries(out));
  minors[0] = TruncSeries::constant(Rational(1), out);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t r = static_cast<std::size_t>(std::popcount(mask)) - 1;
    TruncSeries acc(out);
    // Laplace expansion along row r.
    std::size_t seen = 0;
    for (std::size_t c = 0; c < m; ++c) {
      if (!(mask >> c & 1)) continue;
      const std::size_t pos = seen++;
      const TruncSeries term = rows[r][c] * minors[mask & ~(std::size_t{1} << c)];
      const bool positive = ((r + pos) % 2 == 0);
      acc = positive ? acc + term : acc - term;
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

LinearDependence linear_dependence(const SeriesFamily& fam) {
  const std::size_t m = fam.size();
  const std::uint32_t n = fam.order();
  RatMatrix mat(n + 1, m);
  for (std::size_t l = 0; l < m; ++l)
    for (std::uint32_t i = 0; i <= n; ++i) mat(i, l) = fam.members[l].coeff(i);
  const auto kernel = kernel_basis(mat);
  LinearDependence r;
  if (kernel.empty()) return r;
  r.coefficients = clear_to_integers(kernel.front());
  r.verdict = fam.polynomial ? LinearDependence::Verdict::Dependent : LinearDependence::Verdict::InconclusiveAtOrder;
  return r;
}

namespace {

// Dense coefficients, index = degree.
using Dense = std::vector<Rational>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Dense dense_diff(const Dense& a) {
  if (a.size() <= 1) return Dense{Rational(0)};
  Dense r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return r;
}

Rational dense_eval(const Dense& a, const Rational& x) {
  Rational r(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

// Derivatives 0..k-1 of p at x.
std::vector<Rational> derivatives_at(Dense p, const Rational& x, std::size_t k) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back(dense_eval(p, x));
    p = dense_diff(p);
  }
  return out;
}

// sum_i c_i / i! (x - a)^i
Dense taylor_poly(const std::vector<Rational>& c, const Rational& a) {
  Dense r{Rational(0)};
  Dense power{Rational(1)};
  const Dense lin{-a, Rational(1)};
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational s = c[i] / factorial(static_cast<unsigned>(i));
    if (r.size() < power.size()) r.resize(power.size());
    for (std::size_t d = 0; d < power.size(); ++d) r[d] += s * power[d];
    power = dense_mul(power, lin);
  }
  return r;
}

}  // namespace

MPoly hermite_interpolate(const std::vector<InterpolationPoint>& points) {
  const VarAlphabet alpha({"x"});
  if (points.empty()) return MPoly(alpha);
  const std::size_t k = points.front().values.size();
  if (k == 0) throw InputError("interpolation points need at least one prescribed value");
  for (std::size_t r = 0; r < points.size(); ++r) {
    if (points[r].values.size() != k) throw InputError("all points must prescribe the same number of derivatives");
    for (std::size_t s = 0; s < r; ++s)
      if (points[s].a == points[r].a) throw DuplicatePoint("interpolation point " + to_string(points[r].a) + " repeats");
  }
  Dense f = taylor_poly(points.front().values, points.front().a);
  Dense prod{Rational(1)};
  for (std::size_t r = 1; r < points.size(); ++r) {
    const Dense lin{-points[r - 1].a, Rational(1)};
    for (std::size_t e = 0; e < k; ++e) prod = dense_mul(prod, lin);
    const Rational& a = points[r].a;
    const auto g = derivatives_at(f, a, k);
    const auto p = derivatives_at(prod, a, k);
    std::vector<Rational> h(k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational rhs = points[r].values[i] - g[i];
      for (std::size_t j = 0; j < i; ++j)
        rhs -= h[j] * binomial(static_cast<unsigned>(i), static_cast<unsigned>(j)) * p[i - j];
      h[i] = rhs / p[0];
    }
    const Dense corr = dense_mul(prod, taylor_poly(h, a));
    if (f.size() < corr.size()) f.resize(corr.size());
    for (std::size_t d = 0; d < corr.size(); ++d) f[d] += corr[d];
  }
  MPoly out(alpha);
  for (std::size_t d = 0; d < f.size(); ++d)
    if (f[d] != 0) out.add_term(Exponents{static_cast<std::uint32_t>(d)}, f[d]);
  return out;
}

VarAlphabet relation_alphabet(std::size_t m, unsigned k, bool include_t) {
  std::vector<std::string> names;
  for (std::size_t l = 1; l <= m; ++l) {
    for (unsigned i = k; i-- > 0;) {
      std::string s = "f" + std::to_string(l);
      if (i <= 2)
        s += std::string(i, '\'');
      else
        s += "^(" + std::to_string(i) + ")";
      names.push_back(std::move(s));
    }
  }
  if (include_t) names.emplace_back("t");
  return VarAlphabet(std::move(names));
}

namespace {

void enumerate_exponents(std::size_t nvars, unsigned d, std::size_t t_var, bool include_t, Exponents& cur,
                         std::size_t v, unsigned left, std::vector<Exponents>& out) {
  if (v == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    if (include_t || v != t_var || e == 0) {
      cur[v] = e;
      enumerate_exponents(nvars, d, t_var, include_t, cur, v + 1, left - e, out);
    }
  }
  cur[v] = 0;
}

}  // namespace

RelationSearchResult d_relation_search(const SeriesFamily& fam, unsigned k, unsigned d, bool include_t) {
  if (k == 0) throw InputError("relation search needs k >= 1");
  const std::size_t m = fam.size();
  const VarAlphabet alpha = relation_alphabet(m, k, include_t);
  const std::size_t nvars = alpha.size();

  std::vector<Exponents> monos;
  Exponents cur(nvars, 0);
  enumerate_exponents(nvars, d, include_t ? nvars - 1 : nvars, include_t, cur, 0, d, monos);
  std::sort(monos.begin(), monos.end(), GrlexLess{});

  RelationSearchResult result;
  result.k = k;
  result.d = d;
  result.monomials = monos.size();
  const std::uint32_t M = static_cast<std::uint32_t>(monos.size() + 4);
  result.verified_order = M;
  if (fam.order() < M + (k - 1))
    throw InsufficientOrder("relation search with " + std::to_string(monos.size()) + " monomials needs order >= " +
                            std::to_string(M + k - 1) + ", got " + std::to_string(fam.order()));

  // Jet series per alphabet variable, all truncated to M.
  std::vector<TruncSeries> values;
  for (std::size_t l = 0; l < m; ++l) {
    std::vector<TruncSeries> jets{fam.members[l]};
    for (unsigned i = 1; i < k; ++i) jets.push_back(series_diff(jets.back()));
    for (unsigned i = k; i-- > 0;) values.push_back(jets[i].truncate(M));
  }
  if (include_t) values.push_back(TruncSeries::variable(M));
  const TruncSeries one = TruncSeries::constant(Rational(1), M);

  RatMatrix mat(M + 1, monos.size());
  for (std::size_t c = 0; c < monos.size(); ++c) {
    const MPoly mono = MPoly::monomial(alpha, monos[c], Rational(1));
    const TruncSeries s = substitute<TruncSeries>(mono, values, one);
    for (std::uint32_t i = 0; i <= M; ++i) mat(i, c) = s.coeff(i);
  }
  const auto kernel = kernel_basis(mat);
  if (kernel.empty()) return result;

  auto coeffs = clear_to_integers(kernel.front());
  MPoly q(alpha);
  for (std::size_t c = 0; c < monos.size(); ++c)
    if (coeffs[c] != 0) q.add_term(monos[c], coeffs[c]);
  if (q.leading_coefficient() < 0) q = -q;
  if (!substitute<TruncSeries>(q, values, one).is_zero())
    throw Error("internal: relation failed re-verification by substitution");
  result.relation = DiffRelation{std::move(q), k, d, include_t};
  return result;
}

}  // namespace algcurv
