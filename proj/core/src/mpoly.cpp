#include "algcurv/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace algcurv {

VarAlphabet::VarAlphabet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarAlphabet::VarAlphabet(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw InputError("duplicate variable '" + n + "' in alphabet");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarAlphabet::index_of(std::string_view name) const {
  const auto& n = *names_;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return i;
  return std::nullopt;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const auto da = algcurv::total_degree(a);
  const auto db = algcurv::total_degree(b);
  if (da != db) return da < db;
  // Lex with variable 0 most significant: a < b if at the first difference a is smaller.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::uint32_t total_degree(const Exponents& e) noexcept {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

MPoly::MPoly(VarAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

MPoly::MPoly(VarAlphabet alphabet, const Rational& constant) : alphabet_(std::move(alphabet)) {
  if (constant != 0) terms_.emplace(Exponents(alphabet_.size(), 0), constant);
}

MPoly MPoly::variable(const VarAlphabet& alphabet, std::size_t index) {
  if (index >= alphabet.size()) throw UnknownVariable("variable index out of range");
  Exponents e(alphabet.size(), 0);
  e[index] = 1;
  return monomial(alphabet, std::move(e), Rational(1));
}

MPoly MPoly::variable(const VarAlphabet& alphabet, std::string_view name) {
  const auto idx = alphabet.index_of(name);
  if (!idx) throw UnknownVariable("unknown variable '" + std::string(name) + "'");
  return variable(alphabet, *idx);
}

MPoly MPoly::monomial(const VarAlphabet& alphabet, Exponents exponents, const Rational& coeff) {
  if (exponents.size() != alphabet.size()) throw AlphabetMismatch("monomial: exponent vector length mismatch");
  MPoly p(alphabet);
  if (coeff != 0) p.terms_.emplace(std::move(exponents), coeff);
  return p;
}

bool MPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && algcurv::total_degree(terms_.begin()->first) == 0;
}

Rational MPoly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const auto& [e, c] = *terms_.begin();
  return algcurv::total_degree(e) == 0 ? c : Rational(0);
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw DivisionByZero("leading term of the zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw DivisionByZero("leading term of the zero polynomial");
  return terms_.rbegin()->second;
}

std::uint32_t MPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : algcurv::total_degree(terms_.rbegin()->first);
}

std::uint32_t MPoly::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<bool> MPoly::occurring() const {
  std::vector<bool> occ(alphabet_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) occ[v] = true;
  return occ;
}

void MPoly::require_same_alphabet(const MPoly& other) const {
  if (!(alphabet_ == other.alphabet_)) throw AlphabetMismatch("polynomials over different alphabets");
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_alphabet(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.require_same_alphabet(b);
  MPoly r(a.alphabet_);
  if (a.is_zero() || b.is_zero()) return r;
  Exponents e(a.alphabet_.size());
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      c = ca * cb;
      r.add_term(e, c);
    }
  }
  return r;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(alphabet_, Rational(1));
  MPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

MPoly MPoly::diff(std::size_t var) const {
  if (var >= alphabet_.size()) throw UnknownVariable("variable index out of range");
  MPoly r(alphabet_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c * e[var]);
  }
  return r;
}

MPoly MPoly::diff(std::string_view var) const {
  const auto idx = alphabet_.index_of(var);
  if (!idx) throw UnknownVariable("unknown variable '" + std::string(var) + "'");
  return diff(*idx);
}

Rational MPoly::eval(std::span<const Rational> point) const {
  return substitute<Rational>(*this, point, Rational(1));
}

MPoly MPoly::remap(const VarAlphabet& target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != alphabet_.size()) throw AlphabetMismatch("remap: index map length mismatch");
  MPoly r(target);
  Exponents t(target.size());
  for (const auto& [e, c] : terms_) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (index_map[v] >= target.size()) throw AlphabetMismatch("remap: target index out of range");
      t[index_map[v]] += e[v];
    }
    r.add_term(t, c);
  }
  return r;
}

MPoly MPoly::embed(const VarAlphabet& target) const {
  if (target == alphabet_) return *this;
  const auto occ = occurring();
  std::vector<std::size_t> map(alphabet_.size(), target.size());
  for (std::size_t v = 0; v < alphabet_.size(); ++v) {
    const auto idx = target.index_of(alphabet_.name(v));
    if (idx)
      map[v] = *idx;
    else if (occ[v])
      throw UnknownVariable("variable '" + alphabet_.name(v) + "' missing from target alphabet");
    else
      map[v] = 0;  // never referenced: exponent is zero everywhere
  }
  return remap(target, map);
}

std::string MPoly::to_string() const { return to_string(alphabet_.names()); }

std::string MPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << algcurv::to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << algcurv::to_string(mag) << '*' << mono;
    }
  }
  return os.str();
}

MPoly poly_arith(const MPoly& a, const MPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return a + b;
    case PolyOp::Sub:
      return a - b;
    case PolyOp::Mul:
      return a * b;
  }
  return a;
}

namespace {

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] > e[v]) return false;
  return true;
}

}  // namespace

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch("divide_exact: different alphabets");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  MPoly q(a.alphabet());
  if (a.is_zero()) return q;
  if (b.is_constant()) {
    q = a;
    q *= Rational(1) / b.constant_term();
    return q;
  }
  const Exponents& lb = b.leading_exponents();
  const Rational& cb = b.leading_coefficient();
  // Degree bounds reject most non-divisible inputs before any arithmetic.
  for (std::size_t v = 0; v < lb.size(); ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;
  MPoly r = a;
  Exponents qe(lb.size());
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_exponents();
    if (!divides(lb, lr)) return std::nullopt;
    for (std::size_t v = 0; v < qe.size(); ++v) qe[v] = lr[v] - lb[v];
    const Rational qc = r.leading_coefficient() / cb;
    MPoly t = MPoly::monomial(a.alphabet(), qe, qc);
    q.add_term(qe, qc);
    r -= t * b;
  }
  return q;
}

MPoly make_monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_coefficient());
}

Rational rational_content(const MPoly& p) {
  if (p.is_zero()) return Rational(1);
  Integer num = 0, den = 1;
  for (const auto& [e, c] : p.terms()) {
    num = gcd(num, Integer(c.get_num()));
    den = lcm(den, Integer(c.get_den()));
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var) {
  std::vector<MPoly> out(p.degree_in(var) + 1, MPoly(p.alphabet()));
  for (const auto& [e, c] : p.terms()) {
    Exponents r = e;
    const auto k = r[var];
    r[var] = 0;
    out[k].add_term(r, c);
  }
  return out;
}

MPoly from_coefficients_in(std::span<const MPoly> coeffs, std::size_t var, const VarAlphabet& alphabet) {
  MPoly out(alphabet);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [e, c] : coeffs[k].terms()) {
      Exponents r = e;
      r[var] += static_cast<std::uint32_t>(k);
      out.add_term(r, c);
    }
  }
  return out;
}

}  // namespace algcurv
