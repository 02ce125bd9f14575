#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algcurv/mpoly.hpp"
#include "algcurv/series.hpp"

namespace algcurv {

// Series g_1..g_m sharing a truncation order. `polynomial` marks members that
// are polynomials of degree below the order, so truncation loses nothing.
struct SeriesFamily {
  std::vector<TruncSeries> members;
  bool polynomial = false;

  explicit SeriesFamily(std::vector<TruncSeries> members, bool polynomial = false);
  // Univariate polynomials in a single variable; requires degree < order.
  static SeriesFamily from_polynomials(const std::vector<MPoly>& polys, std::uint32_t order);

  std::size_t size() const noexcept { return members.size(); }
  std::uint32_t order() const noexcept { return members.front().order(); }
};

// det of the m x m matrix with rows d^s g_l, s = 0..m-1. Order N - (m - 1).
// Throws InsufficientOrder when N < m - 1.
TruncSeries wronskian_det(const SeriesFamily& fam);

struct LinearDependence {
  enum class Verdict { Dependent, Independent, InconclusiveAtOrder };
  Verdict verdict = Verdict::Independent;
  // Integer kernel vector (coprime, first nonzero entry positive); set unless Independent.
  std::vector<Rational> coefficients;
};

LinearDependence linear_dependence(const SeriesFamily& fam);

struct InterpolationPoint {
  Rational a;
  std::vector<Rational> values;  // f(a), f'(a), ..., f^(k-1)(a)
};

// Polynomial in "x" with f^(i)(a_r) = b_{r,i}, built point by point as
// f + P*h with P = prod (x - a_r)^k over the earlier points. Throws
// DuplicatePoint, or InputError when the value lists differ in length.
MPoly hermite_interpolate(const std::vector<InterpolationPoint>& points);

struct DiffRelation {
  // Over relation_alphabet(m, k, include_t).
  MPoly q;
  unsigned k = 0;
  unsigned d = 0;
  bool include_t = false;

  std::string to_string() const { return q.to_string() + " = 0"; }
};

struct RelationSearchResult {
  std::optional<DiffRelation> relation;  // nullopt: none up to the bounds
  unsigned k = 0;
  unsigned d = 0;
  std::size_t monomials = 0;
  std::uint32_t verified_order = 0;  // M
};

// Variables f1^(k-1), ..., f1', f1, f2^(k-1), ..., fm, then t when requested.
VarAlphabet relation_alphabet(std::size_t m, unsigned k, bool include_t);

// Searches for a nonzero polynomial q of total degree <= d in t and the first
// k derivatives of each member with q(jets) = 0 mod t^(M+1), where
// M = (number of monomials) + 4. Throws InsufficientOrder when the family is
// not known to order M + k - 1.
RelationSearchResult d_relation_search(const SeriesFamily& fam, unsigned k, unsigned d, bool include_t);

}  // namespace algcurv
