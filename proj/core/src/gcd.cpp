// Multivariate gcd over Q.
//
// Strategy: strip variables that occur in only one argument (their content
// must be taken), handle monomials directly, then run a primitive PRS in one
// chosen variable over the coefficient ring Q[other variables]. Before the
// PRS a specialization of the other variables gives a cheap certificate of
// coprimality, which covers the common case in rational-function
// normalization.

#include <algorithm>
#include <limits>
#include <utility>

#include "algcurv/mpoly.hpp"

namespace algcurv {

namespace {

using UPoly = std::vector<Rational>;  // dense, index = degree

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void upoly_rem_inplace(UPoly& a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
}

std::size_t upoly_gcd_degree(UPoly a, UPoly b) {
  while (!b.empty()) {
    upoly_rem_inplace(a, b);
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

Rational pow_rational(const Rational& base, std::uint32_t e) {
  Rational r(1);
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

Rational specialize_constant(const MPoly& p, const std::vector<Rational>& vals) {
  Rational sum(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (std::size_t u = 0; u < e.size(); ++u)
      if (e[u] != 0) t *= pow_rational(vals[u], e[u]);
    sum += t;
  }
  return sum;
}

std::vector<Rational> specialization_point(std::size_t nvars, unsigned attempt) {
  std::vector<Rational> vals(nvars);
  for (std::size_t u = 0; u < nvars; ++u) {
    Rational v(static_cast<long>(17 * (u + 1) + 31 * attempt + 3), static_cast<long>(u + attempt + 2));
    v.canonicalize();
    vals[u] = v;
  }
  return vals;
}

// True when the two univariate-in-v coefficient vectors provably have a gcd
// of v-degree 0: a specialization of the other variables that keeps both
// leading coefficients nonzero gives a constant gcd.
bool coprime_by_specialization(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  const std::size_t nvars = a.front().alphabet().size();
  for (unsigned attempt = 0; attempt < 3; ++attempt) {
    const auto vals = specialization_point(nvars, attempt);
    UPoly sa(a.size()), sb(b.size());
    for (std::size_t k = 0; k < a.size(); ++k) sa[k] = specialize_constant(a[k], vals);
    for (std::size_t k = 0; k < b.size(); ++k) sb[k] = specialize_constant(b[k], vals);
    if (sa.back() == 0 || sb.back() == 0) continue;
    return upoly_gcd_degree(std::move(sa), std::move(sb)) == 0;
  }
  return false;
}

MPoly gcd_impl(const MPoly& a, const MPoly& b);

MPoly content_of(const std::vector<MPoly>& coeffs) {
  MPoly g(coeffs.front().alphabet());
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MPoly content_in(const MPoly& p, std::size_t var) { return content_of(coefficients_in(p, var)); }

void divide_all(std::vector<MPoly>& coeffs, const MPoly& d) {
  if (d.is_constant()) {
    const Rational inv = Rational(1) / d.constant_term();
    for (auto& c : coeffs) c *= inv;
    return;
  }
  for (auto& c : coeffs) {
    auto q = divide_exact(c, d);
    if (!q) throw Error("internal: content does not divide coefficient");
    c = std::move(*q);
  }
}

void make_primitive(std::vector<MPoly>& coeffs) {
  divide_all(coeffs, content_of(coeffs));
  Integer num = 0, den = 1;
  for (const auto& c : coeffs)
    for (const auto& [e, q] : c.terms()) {
      num = gcd(num, Integer(q.get_num()));
      den = lcm(den, Integer(q.get_den()));
    }
  if (num == 0) return;
  Rational scale(den, num);
  scale.canonicalize();
  for (auto& c : coeffs) c *= scale;
}

void trim(std::vector<MPoly>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Pseudo-remainder of a by b (deg a >= deg b) over the coefficient ring.
std::vector<MPoly> pseudo_remainder(std::vector<MPoly> a, const std::vector<MPoly>& b) {
  const std::size_t db = b.size() - 1;
  const MPoly& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const MPoly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= la * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

MPoly monomial_gcd(const MPoly& mono, const MPoly& p) {
  Exponents e = mono.leading_exponents();
  for (const auto& [pe, c] : p.terms())
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::min(e[v], pe[v]);
  return MPoly::monomial(mono.alphabet(), std::move(e), Rational(1));
}

MPoly prs_gcd(const MPoly& a, const MPoly& b, std::size_t var) {
  auto A = coefficients_in(a, var);
  auto B = coefficients_in(b, var);
  const MPoly ca = content_of(A);
  const MPoly cb = content_of(B);
  divide_all(A, ca);
  divide_all(B, cb);
  const MPoly c = gcd_impl(ca, cb);
  if (coprime_by_specialization(A, B)) return c;
  if (A.size() < B.size()) std::swap(A, B);
  make_primitive(A);
  make_primitive(B);
  while (true) {
    auto R = pseudo_remainder(A, B);
    if (R.empty()) break;
    if (R.size() == 1) return c;
    A = std::move(B);
    make_primitive(R);
    B = std::move(R);
  }
  make_primitive(B);
  return make_monic(c * from_coefficients_in(B, var, a.alphabet()));
}

MPoly gcd_impl(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  const MPoly one(a.alphabet(), Rational(1));
  if (a.is_constant() || b.is_constant()) return one;
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);

  const auto occ_a = a.occurring();
  const auto occ_b = b.occurring();
  for (std::size_t v = 0; v < occ_a.size(); ++v) {
    if (occ_a[v] && !occ_b[v]) return gcd_impl(content_in(a, v), b);
    if (occ_b[v] && !occ_a[v]) return gcd_impl(a, content_in(b, v));
  }

  if (a.num_terms() >= b.num_terms()) {
    if (divide_exact(a, b)) return make_monic(b);
  } else if (divide_exact(b, a)) {
    return make_monic(a);
  }

  std::size_t best = 0;
  std::uint32_t best_deg = std::numeric_limits<std::uint32_t>::max();
  for (std::size_t v = 0; v < occ_a.size(); ++v) {
    if (!occ_a[v]) continue;
    const auto d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best_deg) {
      best_deg = d;
      best = v;
    }
  }
  return prs_gcd(a, b, best);
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("gcd: polynomials over different alphabets");
  return gcd_impl(a, b);
}

}  // namespace algcurv
