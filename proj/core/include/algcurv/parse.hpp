#pragma once

#include <set>
#include <string>
#include <string_view>

#include "algcurv/diffexpr.hpp"
#include "algcurv/mpoly.hpp"
#include "algcurv/series.hpp"

namespace algcurv {

// Largest jet index accepted in source text.
inline constexpr std::uint32_t kMaxJetIndex = 24;
// Largest exponent literal accepted after '^'.
inline constexpr std::uint32_t kMaxExponent = 4096;

// Grammar (explicit '*', '^' binds tightest and takes a natural literal):
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('+' | '-') unary | power
//   power := atom ('^' natural)?
//   atom  := natural | name | '(' expr ')'
// Division is only allowed by a nonzero constant.
MPoly parse_poly(std::string_view src, const VarAlphabet& alphabet);

// Jets are written x, x', x'', x^(k); families y (n = 1) or y1..yn; phi only
// when allow_phi is set. Throws JetIndexOverflow for k > kMaxJetIndex.
DiffExpr parse_diffexpr(std::string_view src, unsigned n, bool allow_phi = false);

// Expands an expression in `var` as a series to the given order. Division
// needs a divisor with nonzero constant term (NonUnitDivisor otherwise).
TruncSeries parse_series(std::string_view src, std::uint32_t order, std::string_view var = "t");

// Identifiers occurring in src, for inferring the ambient dimension.
std::set<std::string> identifiers(std::string_view src);

}  // namespace algcurv
