#pragma once

#include <random>
#include <vector>

#include "algcurv/diffexpr.hpp"
#include "algcurv/mpoly.hpp"
#include "algcurv/series.hpp"

namespace algcurv::testing {

using Rng = std::mt19937;

inline Rational random_rational(Rng& rng, int num_range = 5, int den_max = 4) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero(Rng& rng, int num_range = 5, int den_max = 4) {
  Rational q;
  do q = random_rational(rng, num_range, den_max);
  while (q == 0);
  return q;
}

// Up to `terms` random terms of total degree <= max_deg.
inline MPoly random_poly(Rng& rng, const VarAlphabet& alpha, unsigned max_deg, unsigned terms) {
  MPoly p(alpha);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  for (unsigned t = 0; t < terms; ++t) {
    Exponents e(alpha.size(), 0);
    unsigned budget = deg(rng);
    for (std::size_t v = 0; v < e.size() && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> pick(0, budget);
      e[v] = pick(rng);
      budget -= e[v];
    }
    std::shuffle(e.begin(), e.end(), rng);
    p += MPoly::monomial(alpha, e, random_rational(rng));
  }
  return p;
}

inline TruncSeries random_series(Rng& rng, std::uint32_t order) {
  TruncSeries s(order);
  for (std::uint32_t i = 0; i <= order; ++i) s.set_coeff(i, random_rational(rng));
  return s;
}

// Random phi-free jet expression with jet indices <= max_jet and a
// denominator that is a product of x^(1) powers and a random polynomial
// with nonzero constant term.
inline DiffExpr random_diffexpr(Rng& rng, unsigned max_jet, unsigned max_deg, unsigned n = 1) {
  std::vector<JetVar> jets;
  for (std::uint32_t i = 0; i <= max_jet; ++i) jets.push_back(JetVar::x(i));
  for (std::uint32_t j = 1; j <= n; ++j)
    for (std::uint32_t i = 0; i <= max_jet; ++i) jets.push_back(JetVar::y(j, i));
  std::sort(jets.begin(), jets.end());
  const VarAlphabet alpha = jet_alphabet(jets);
  MPoly num = random_poly(rng, alpha, max_deg, 4);
  MPoly den = random_poly(rng, alpha, max_deg, 2) + MPoly(alpha, random_nonzero(rng));
  if (num.is_zero()) num = MPoly(alpha, Rational(1));
  return DiffExpr(RatFunc(num, den), jets, n);
}

}  // namespace algcurv::testing
