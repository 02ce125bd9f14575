#pragma once

#include <span>
#include <string>

#include "algcurv/mpoly.hpp"

namespace algcurv {

// Quotient of polynomials in canonical form: gcd(num, den) = 1 and den has
// coprime integer coefficients with a positive leading coefficient. Two
// rational functions are equal iff their numerators and denominators are.
class RatFunc {
 public:
  RatFunc() : num_(), den_(VarAlphabet(), Rational(1)) {}
  explicit RatFunc(const VarAlphabet& alphabet);
  explicit RatFunc(MPoly num);
  // Throws DivisionByZero when den = 0.
  RatFunc(MPoly num, MPoly den);

  const MPoly& num() const noexcept { return num_; }
  const MPoly& den() const noexcept { return den_; }
  const VarAlphabet& alphabet() const noexcept { return num_.alphabet(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Rational& c);
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  RatFunc pow(int e) const;
  RatFunc diff(std::size_t var) const;
  RatFunc diff(std::string_view var) const;

  // Throws PoleError when only the denominator vanishes and
  // IndeterminateError when both do.
  Rational eval(std::span<const Rational> point) const;

  RatFunc embed(const VarAlphabet& target) const;
  RatFunc remap(const VarAlphabet& target, std::span<const std::size_t> index_map) const;

  std::string to_string() const;
  std::string to_string(std::span<const std::string> display_names) const;

  // Builds from a pair already known to be coprime; only fixes the unit.
  static RatFunc from_coprime(MPoly num, MPoly den);

 private:
  void normalize_unit();

  MPoly num_;
  MPoly den_;
};

enum class RatOp { Add, Sub, Mul, Div };
RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op);

// Substitutes rational functions over `target` for the variables of p.
RatFunc substitute_rational(const MPoly& p, std::span<const RatFunc> values, const VarAlphabet& target);

}  // namespace algcurv
