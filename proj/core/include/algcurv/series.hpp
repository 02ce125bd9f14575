#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algcurv/diffexpr.hpp"
#include "algcurv/mpoly.hpp"

namespace algcurv {

// Power series in t known modulo t^(order+1).
//
// Binary operations return the smaller of the two orders; each derivative
// loses one order. Reading a coefficient past the order is an error rather
// than a silent zero.
class TruncSeries {
 public:
  TruncSeries() : coeffs_(1) {}
  explicit TruncSeries(std::uint32_t order) : coeffs_(order + 1) {}
  explicit TruncSeries(std::vector<Rational> coeffs);

  static TruncSeries constant(const Rational& c, std::uint32_t order);
  // The series t.
  static TruncSeries variable(std::uint32_t order);
  // A univariate polynomial (single-variable alphabet), truncated.
  static TruncSeries from_polynomial(const MPoly& p, std::uint32_t order);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  const Rational& coeff(std::size_t i) const;
  void set_coeff(std::size_t i, const Rational& c);
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  // Index of the first nonzero coefficient, nullopt if zero to this order.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation(); }

  TruncSeries truncate(std::uint32_t order) const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // Throws NonUnitDivisor when b(0) = 0.
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(TruncSeries a, const Rational& c);
  TruncSeries operator-() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

  // "c0 + c1*t + ... + O(t^(N+1))", zero coefficients omitted.
  std::string to_string(std::string_view var = "t") const;

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesOp { Add, Sub, Mul, Div };
TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op);

// Termwise derivative; the order drops by one. Throws TruncationError on an
// order-0 input.
TruncSeries series_diff(const TruncSeries& a);

// f(g(t)); requires g(0) = 0 (CompositionBasepoint otherwise).
TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g);

// Compositional inverse; requires f(0) = 0 and f'(0) != 0.
TruncSeries series_reverse(const TruncSeries& f);

// First power where a and b differ, compared up to the smaller order.
std::optional<std::size_t> first_difference(const TruncSeries& a, const TruncSeries& b);

// gamma(t) = (x(t), y_1(t), ..., y_n(t)) with a common truncation order.
class Parametrization {
 public:
  explicit Parametrization(std::vector<TruncSeries> components);

  std::size_t n() const noexcept { return components_.size() - 1; }
  std::uint32_t order() const noexcept { return components_.front().order(); }
  const TruncSeries& x() const noexcept { return components_.front(); }
  // j in 1..n
  const TruncSeries& y(std::size_t j) const;
  const std::vector<TruncSeries>& components() const noexcept { return components_; }

  Parametrization reparametrize(const TruncSeries& phi) const;
  Parametrization truncate(std::uint32_t order) const;

 private:
  std::vector<TruncSeries> components_;
};

enum class SurrogateConstraint : unsigned {
  None = 0,
  UnitDerivative = 1,  // coefficient of t is nonzero
  ZeroConstant = 2,    // coefficient of 1 is zero
};
constexpr SurrogateConstraint operator|(SurrogateConstraint a, SurrogateConstraint b) {
  return static_cast<SurrogateConstraint>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has_flag(SurrogateConstraint set, SurrogateConstraint flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

// Deterministic pseudo-random series standing in for an algebraically
// independent one: coefficients p/q with p in [-9, 9], q in [1, 9].
TruncSeries surrogate_series(std::uint64_t seed, std::uint32_t order,
                             SurrogateConstraint constraint = SurrogateConstraint::None);

// Substitutes d^i/dt^i of the components for the jets of p and evaluates in
// series arithmetic. Result order is order(gamma) - (largest jet index).
TruncSeries eval_diffexpr(const DiffExpr& p, const Parametrization& gamma);

// Evaluates a polynomial or rational function over (x, y_1..y_n) along gamma;
// variable k of the alphabet receives component k.
TruncSeries eval_along(const MPoly& f, const Parametrization& gamma);
TruncSeries eval_along(const RatFunc& f, const Parametrization& gamma);

}  // namespace algcurv
