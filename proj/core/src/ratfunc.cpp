#include "algcurv/ratfunc.hpp"

#include <sstream>

namespace algcurv {

RatFunc::RatFunc(const VarAlphabet& alphabet) : num_(alphabet), den_(alphabet, Rational(1)) {}

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(num_.alphabet(), Rational(1)) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.alphabet() == den_.alphabet())) throw AlphabetMismatch("rational function over mixed alphabets");
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly(num_.alphabet(), Rational(1));
    return;
  }
  const MPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  normalize_unit();
}

RatFunc RatFunc::from_coprime(MPoly num, MPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  if (r.den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (r.num_.is_zero()) {
    r.den_ = MPoly(r.num_.alphabet(), Rational(1));
    return r;
  }
  r.normalize_unit();
  return r;
}

void RatFunc::normalize_unit() {
  Rational scale = Rational(1) / rational_content(den_);
  if (den_.leading_coefficient() < 0) scale = -scale;
  if (scale != 1) {
    num_ *= scale;
    den_ *= scale;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("rational functions over different alphabets");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    MPoly n = a.num_ + b.num_;
    return RatFunc(std::move(n), a.den_);
  }
  if (a.is_polynomial() && b.is_polynomial())
    return RatFunc::from_coprime(a.num_ * (Rational(1) / a.den_.constant_term()) +
                                     b.num_ * (Rational(1) / b.den_.constant_term()),
                                 MPoly(a.alphabet(), Rational(1)));
  // a/b + c/d with g = gcd(b, d): the result's common factor divides g.
  const MPoly g = gcd(a.den_, b.den_);
  const MPoly bd = *divide_exact(a.den_, g);
  const MPoly dd = *divide_exact(b.den_, g);
  MPoly n = a.num_ * dd + b.num_ * bd;
  MPoly d = a.den_ * dd;
  if (n.is_zero()) return RatFunc(a.alphabet());
  if (!g.is_constant()) {
    const MPoly h = gcd(n, g);
    if (!h.is_constant()) {
      n = *divide_exact(n, h);
      d = *divide_exact(d, h);
    }
  }
  return RatFunc::from_coprime(std::move(n), std::move(d));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("rational functions over different alphabets");
  if (a.is_zero() || b.is_zero()) return RatFunc(a.alphabet());
  MPoly an = a.num_, ad = a.den_, bn = b.num_, bdn = b.den_;
  // Cross-cancel: gcd(an, bdn) and gcd(bn, ad).
  if (!bdn.is_constant()) {
    const MPoly g1 = gcd(an, bdn);
    if (!g1.is_constant()) {
      an = *divide_exact(an, g1);
      bdn = *divide_exact(bdn, g1);
    }
  }
  if (!ad.is_constant()) {
    const MPoly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
      bn = *divide_exact(bn, g2);
      ad = *divide_exact(ad, g2);
    }
  }
  return RatFunc::from_coprime(an * bn, ad * bdn);
}

RatFunc operator*(const RatFunc& a, const Rational& c) {
  if (c == 0) return RatFunc(a.alphabet());
  RatFunc r = a;
  r.num_ *= c;
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
  return a * RatFunc::from_coprime(b.den_, b.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DivisionByZero("negative power of zero");
    return RatFunc::from_coprime(den_, num_).pow(-e);
  }
  return RatFunc::from_coprime(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::diff(std::size_t var) const {
  MPoly dn = num_.diff(var);
  if (den_.is_constant()) return RatFunc::from_coprime(std::move(dn), den_);
  const MPoly dd = den_.diff(var);
  // (n'd - nd')/d^2 ; with g = gcd(d, d') the cofactor d/g carries the cancellation.
  const MPoly g = gcd(den_, dd);
  const MPoly dg = *divide_exact(den_, g);
  const MPoly ddg = *divide_exact(dd, g);
  MPoly n = dn * dg - num_ * ddg;
  MPoly d = den_ * dg;
  // Only factors of d dividing their own derivative can cancel; they divide g.
  if (n.is_zero()) return RatFunc(alphabet());
  if (!g.is_constant()) {
    const MPoly h = gcd(n, g);
    if (!h.is_constant()) {
      n = *divide_exact(n, h);
      d = *divide_exact(d, h);
    }
  }
  return RatFunc::from_coprime(std::move(n), std::move(d));
}

RatFunc RatFunc::diff(std::string_view var) const {
  const auto idx = alphabet().index_of(var);
  if (!idx) throw UnknownVariable("unknown variable '" + std::string(var) + "'");
  return diff(*idx);
}

Rational RatFunc::eval(std::span<const Rational> point) const {
  if (point.size() != alphabet().size()) throw AlphabetMismatch("eval: point dimension mismatch");
  const Rational d = den_.eval(point);
  const Rational n = num_.eval(point);
  if (d == 0) {
    if (n == 0) throw IndeterminateError("0/0 when evaluating " + to_string());
    throw PoleError("pole when evaluating " + to_string());
  }
  return n / d;
}

RatFunc RatFunc::embed(const VarAlphabet& target) const {
  return RatFunc::from_coprime(num_.embed(target), den_.embed(target));
}

RatFunc RatFunc::remap(const VarAlphabet& target, std::span<const std::size_t> index_map) const {
  return RatFunc::from_coprime(num_.remap(target, index_map), den_.remap(target, index_map));
}

std::string RatFunc::to_string() const { return to_string(alphabet().names()); }

std::string RatFunc::to_string(std::span<const std::string> names) const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(names);
  auto wrap = [&](const MPoly& p) {
    std::string s = p.to_string(names);
    if (p.num_terms() > 1 || s.find('*') != std::string::npos || s.find('/') != std::string::npos ||
        s.front() == '-')
      return "(" + s + ")";
    return s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFunc ratfunc_arith(const RatFunc& a, const RatFunc& b, RatOp op) {
  switch (op) {
    case RatOp::Add:
      return a + b;
    case RatOp::Sub:
      return a - b;
    case RatOp::Mul:
      return a * b;
    case RatOp::Div:
      return a / b;
  }
  return a;
}

RatFunc substitute_rational(const MPoly& p, std::span<const RatFunc> values, const VarAlphabet& target) {
  return substitute<RatFunc>(p, values, RatFunc(MPoly(target, Rational(1))));
}

}  // namespace algcurv
