#include "algcurv/series.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace algcurv {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw TruncationError("a truncated series needs at least one coefficient");
}

TruncSeries TruncSeries::constant(const Rational& c, std::uint32_t order) {
  TruncSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncSeries TruncSeries::variable(std::uint32_t order) {
  TruncSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncSeries TruncSeries::from_polynomial(const MPoly& p, std::uint32_t order) {
  if (p.alphabet().size() > 1) throw AlphabetMismatch("from_polynomial: expected a univariate polynomial");
  TruncSeries s(order);
  for (const auto& [e, c] : p.terms()) {
    const std::size_t k = e.empty() ? 0 : e[0];
    if (k <= order) s.coeffs_[k] += c;
  }
  return s;
}

const Rational& TruncSeries::coeff(std::size_t i) const {
  if (i >= coeffs_.size())
    throw TruncationError("coefficient t^" + std::to_string(i) + " is beyond the truncation order " +
                          std::to_string(order()));
  return coeffs_[i];
}

void TruncSeries::set_coeff(std::size_t i, const Rational& c) {
  if (i >= coeffs_.size()) throw TruncationError("set_coeff beyond the truncation order");
  coeffs_[i] = c;
}

std::optional<std::size_t> TruncSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

TruncSeries TruncSeries::truncate(std::uint32_t order) const {
  if (order > this->order()) throw TruncationError("cannot raise the truncation order");
  return TruncSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const auto n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const auto n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const auto n = std::min(a.order(), b.order());
  TruncSeries r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      if (b.coeffs_[j] != 0) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  if (b.coeffs_[0] == 0) throw NonUnitDivisor("division by a series with zero constant term");
  const auto n = std::min(a.order(), b.order());
  TruncSeries q(n);
  const Rational inv = Rational(1) / b.coeffs_[0];
  for (std::size_t k = 0; k <= n; ++k) {
    Rational s = a.coeffs_[k];
    for (std::size_t i = 1; i <= k; ++i)
      if (b.coeffs_[i] != 0) s -= b.coeffs_[i] * q.coeffs_[k - i];
    q.coeffs_[k] = s * inv;
  }
  return q;
}

TruncSeries operator*(TruncSeries a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string TruncSeries::to_string(std::string_view var) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << algcurv::to_string(mag);
      continue;
    }
    if (mag != 1) os << algcurv::to_string(mag) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  os << " + O(" << var << '^' << (order() + 1) << ')';
  return os.str();
}

TruncSeries series_arith(const TruncSeries& a, const TruncSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
    case SeriesOp::Div:
      return a / b;
  }
  return a;
}

TruncSeries series_diff(const TruncSeries& a) {
  if (a.order() == 0) throw TruncationError("cannot differentiate a series known only to order 0");
  TruncSeries r(a.order() - 1);
  for (std::size_t i = 1; i <= a.order(); ++i) r.set_coeff(i - 1, a.coeff(i) * static_cast<unsigned long>(i));
  return r;
}

TruncSeries series_compose(const TruncSeries& f, const TruncSeries& g) {
  if (g.coeff(0) != 0) throw CompositionBasepoint("inner series must have zero constant term");
  const auto n = std::min(f.order(), g.order());
  TruncSeries r = TruncSeries::constant(f.coeff(n), n);
  for (std::size_t k = n; k-- > 0;) {
    r = r * g;
    r.set_coeff(0, r.coeff(0) + f.coeff(k));
  }
  return r;
}

TruncSeries series_reverse(const TruncSeries& f) {
  if (f.coeff(0) != 0 || f.order() < 1 || f.coeff(1) == 0)
    throw NotReversible("reversion needs f(0) = 0 and f'(0) != 0");
  const auto n = f.order();
  const Rational inv = Rational(1) / f.coeff(1);
  TruncSeries g = TruncSeries::variable(n) * inv;
  // Fix one coefficient at a time: with g correct below t^k, [t^k] f(g)
  // depends on g_k only through f_1 * g_k.
  for (std::size_t k = 2; k <= n; ++k) {
    const TruncSeries fg = series_compose(f, g);
    g.set_coeff(k, -fg.coeff(k) * inv);
  }
  return g;
}

std::optional<std::size_t> first_difference(const TruncSeries& a, const TruncSeries& b) {
  const auto n = std::min(a.order(), b.order());
  for (std::size_t i = 0; i <= n; ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return std::nullopt;
}

Parametrization::Parametrization(std::vector<TruncSeries> components) : components_(std::move(components)) {
  if (components_.size() < 2) throw InputError("a parametrization needs x and at least one y component");
  for (const auto& c : components_)
    if (c.order() != components_.front().order())
      throw TruncationError("parametrization components must share a truncation order");
}

const TruncSeries& Parametrization::y(std::size_t j) const {
  if (j < 1 || j > n()) throw UnboundVariable("parametrization has no component y" + std::to_string(j));
  return components_[j];
}

Parametrization Parametrization::reparametrize(const TruncSeries& phi) const {
  std::vector<TruncSeries> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(series_compose(c, phi));
  return Parametrization(std::move(out));
}

Parametrization Parametrization::truncate(std::uint32_t order) const {
  std::vector<TruncSeries> out;
  for (const auto& c : components_) out.push_back(c.truncate(order));
  return Parametrization(std::move(out));
}

TruncSeries surrogate_series(std::uint64_t seed, std::uint32_t order, SurrogateConstraint constraint) {
  // mt19937_64 output is fixed by the standard; the reduction below is ours,
  // so the series are identical on every platform.
  std::mt19937_64 rng(seed);
  auto draw = [&rng] {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 9) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  };
  TruncSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) {
    Rational c = draw();
    if (i == 1 && has_flag(constraint, SurrogateConstraint::UnitDerivative))
      while (c == 0) c = draw();
    s.set_coeff(i, c);
  }
  if (has_flag(constraint, SurrogateConstraint::ZeroConstant)) s.set_coeff(0, Rational(0));
  return s;
}

namespace {

TruncSeries nth_derivative(const TruncSeries& s, std::uint32_t k) {
  if (k > s.order())
    throw TruncationError("jet index " + std::to_string(k) + " exceeds the series order " +
                          std::to_string(s.order()));
  TruncSeries r = s;
  for (std::uint32_t i = 0; i < k; ++i) r = series_diff(r);
  return r;
}

TruncSeries divide_checked(const TruncSeries& num, const TruncSeries& den) {
  if (den.coeff(0) == 0)
    throw NonUnitDivisor("denominator series vanishes at t = 0");
  return num / den;
}

}  // namespace

TruncSeries eval_diffexpr(const DiffExpr& p, const Parametrization& gamma) {
  std::vector<TruncSeries> values;
  values.reserve(p.jets().size());
  for (const auto& v : p.jets()) {
    switch (v.family) {
      case JetFamily::Phi:
        throw UnboundVariable("reparametrization jet " + v.name() + " has no value on a parametrization");
      case JetFamily::X:
        values.push_back(nth_derivative(gamma.x(), v.index));
        break;
      case JetFamily::Y:
        values.push_back(nth_derivative(gamma.y(v.j), v.index));
        break;
    }
  }
  const TruncSeries one = TruncSeries::constant(Rational(1), gamma.order());
  const TruncSeries num = substitute<TruncSeries>(p.rational().num(), values, one);
  const TruncSeries den = substitute<TruncSeries>(p.rational().den(), values, one);
  return divide_checked(num, den);
}

TruncSeries eval_along(const MPoly& f, const Parametrization& gamma) {
  if (f.alphabet().size() != gamma.components().size())
    throw AlphabetMismatch("eval_along: alphabet has " + std::to_string(f.alphabet().size()) +
                           " variables, parametrization has " + std::to_string(gamma.components().size()) +
                           " components");
  return substitute<TruncSeries>(f, gamma.components(), TruncSeries::constant(Rational(1), gamma.order()));
}

TruncSeries eval_along(const RatFunc& f, const Parametrization& gamma) {
  return divide_checked(eval_along(f.num(), gamma), eval_along(f.den(), gamma));
}

}  // namespace algcurv
