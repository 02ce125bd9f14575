#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace algcurv {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text: "a/b", or "a" when b = 1.
std::string to_string(const Rational& q);

// Accepts "a", "-a", "a/b". Throws InputError on anything else or b = 0.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace algcurv
