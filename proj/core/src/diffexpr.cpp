#include "algcurv/diffexpr.hpp"

#include <algorithm>

namespace algcurv {

std::string JetVar::name() const {
  const std::string suffix = "^(" + std::to_string(index) + ")";
  switch (family) {
    case JetFamily::X:
      return "x" + suffix;
    case JetFamily::Y:
      return "y" + std::to_string(j) + suffix;
    case JetFamily::Phi:
      return "phi" + suffix;
  }
  return suffix;
}

std::string JetVar::display(unsigned n) const {
  std::string base;
  switch (family) {
    case JetFamily::X:
      base = "x";
      break;
    case JetFamily::Y:
      base = (n == 1 && j == 1) ? "y" : "y" + std::to_string(j);
      break;
    case JetFamily::Phi:
      base = "phi";
      break;
  }
  if (index == 0) return base;
  return base + "^(" + std::to_string(index) + ")";
}

VarAlphabet jet_alphabet(const std::vector<JetVar>& jets) {
  std::vector<std::string> names;
  names.reserve(jets.size());
  for (const auto& v : jets) names.push_back(v.name());
  return VarAlphabet(std::move(names));
}

DiffExpr::DiffExpr() : f_(VarAlphabet()) {}

DiffExpr::DiffExpr(const RatFunc& f, std::vector<JetVar> jets, unsigned n) : n_(n) {
  if (jets.size() != f.alphabet().size()) throw AlphabetMismatch("DiffExpr: jet list does not match alphabet");
  if (!std::is_sorted(jets.begin(), jets.end()) ||
      std::adjacent_find(jets.begin(), jets.end()) != jets.end())
    throw AlphabetMismatch("DiffExpr: jets must be strictly increasing");
  for (const auto& v : jets)
    if (v.family == JetFamily::Y) n_ = std::max(n_, v.j);
  const auto on = f.num().occurring();
  const auto od = f.den().occurring();
  std::vector<JetVar> kept;
  std::vector<std::size_t> map(jets.size(), 0);
  for (std::size_t i = 0; i < jets.size(); ++i) {
    if (on[i] || od[i]) {
      map[i] = kept.size();
      kept.push_back(jets[i]);
    }
  }
  if (kept.size() == jets.size()) {
    f_ = f;
  } else {
    f_ = f.remap(jet_alphabet(kept), map);
  }
  jets_ = std::move(kept);
}

DiffExpr DiffExpr::constant(const Rational& c, unsigned n) {
  return DiffExpr(RatFunc(MPoly(VarAlphabet(), c)), {}, n);
}

DiffExpr DiffExpr::jet(const JetVar& v, unsigned n) {
  std::vector<JetVar> jets{v};
  const VarAlphabet a = jet_alphabet(jets);
  return DiffExpr(RatFunc(MPoly::variable(a, 0)), std::move(jets), std::max(n, v.j));
}

bool DiffExpr::has_phi() const noexcept {
  return std::any_of(jets_.begin(), jets_.end(), [](const JetVar& v) { return v.family == JetFamily::Phi; });
}

std::optional<std::uint32_t> DiffExpr::max_xy_index() const noexcept {
  std::optional<std::uint32_t> m;
  for (const auto& v : jets_)
    if (v.family != JetFamily::Phi) m = std::max(m.value_or(0), v.index);
  return m;
}

std::uint32_t DiffExpr::max_index() const noexcept {
  std::uint32_t m = 0;
  for (const auto& v : jets_) m = std::max(m, v.index);
  return m;
}

DiffExpr DiffExpr::with_n(unsigned n) const {
  DiffExpr r = *this;
  r.n_ = std::max(n, n_);
  return r;
}

RatFunc express_over(const DiffExpr& e, const std::vector<JetVar>& jets, const VarAlphabet& alphabet) {
  if (e.jets() == jets) return e.rational().embed(alphabet);
  std::vector<std::size_t> map(e.jets().size());
  for (std::size_t i = 0; i < e.jets().size(); ++i) {
    const auto it = std::lower_bound(jets.begin(), jets.end(), e.jets()[i]);
    if (it == jets.end() || *it != e.jets()[i]) throw AlphabetMismatch("express_over: jet missing from target");
    map[i] = static_cast<std::size_t>(it - jets.begin());
  }
  return e.rational().remap(alphabet, map);
}

namespace {

template <class Op>
DiffExpr combine(const DiffExpr& a, const DiffExpr& b, Op op) {
  const unsigned n = std::max(a.n(), b.n());
  if (a.jets() == b.jets()) return DiffExpr(op(a.rational(), b.rational()), a.jets(), n);
  std::vector<JetVar> jets;
  std::set_union(a.jets().begin(), a.jets().end(), b.jets().begin(), b.jets().end(), std::back_inserter(jets));
  const VarAlphabet alpha = jet_alphabet(jets);
  return DiffExpr(op(express_over(a, jets, alpha), express_over(b, jets, alpha)), jets, n);
}

}  // namespace

DiffExpr operator+(const DiffExpr& a, const DiffExpr& b) {
  return combine(a, b, [](const RatFunc& x, const RatFunc& y) { return x + y; });
}
DiffExpr operator-(const DiffExpr& a, const DiffExpr& b) {
  return combine(a, b, [](const RatFunc& x, const RatFunc& y) { return x - y; });
}
DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
  return combine(a, b, [](const RatFunc& x, const RatFunc& y) { return x * y; });
}
DiffExpr operator/(const DiffExpr& a, const DiffExpr& b) {
  return combine(a, b, [](const RatFunc& x, const RatFunc& y) { return x / y; });
}

DiffExpr operator*(const DiffExpr& a, const Rational& c) {
  if (c == 0) return DiffExpr::constant(Rational(0), a.n_);
  DiffExpr r = a;
  r.f_ = r.f_ * c;
  return r;
}

DiffExpr substitute_jets(const RatFunc& f, const std::vector<DiffExpr>& values, unsigned n) {
  if (values.size() != f.alphabet().size()) throw AlphabetMismatch("substitute_jets: wrong number of values");
  std::vector<JetVar> jets;
  for (const auto& v : values) {
    std::vector<JetVar> merged;
    std::set_union(jets.begin(), jets.end(), v.jets().begin(), v.jets().end(), std::back_inserter(merged));
    jets = std::move(merged);
    n = std::max(n, v.n());
  }
  const VarAlphabet alpha = jet_alphabet(jets);
  std::vector<RatFunc> rv;
  rv.reserve(values.size());
  for (const auto& v : values) rv.push_back(express_over(v, jets, alpha));
  const RatFunc num = substitute_rational(f.num(), rv, alpha);
  const RatFunc den = substitute_rational(f.den(), rv, alpha);
  if (den.is_zero()) throw IndeterminateSubstitution("denominator " + f.den().to_string() + " vanishes under the substitution");
  return DiffExpr(num / den, jets, n);
}

DiffExpr DiffExpr::operator-() const {
  DiffExpr r = *this;
  r.f_ = -r.f_;
  return r;
}

DiffExpr DiffExpr::pow(int e) const { return DiffExpr(f_.pow(e), jets_, n_); }

std::string DiffExpr::to_string() const {
  std::vector<std::string> names;
  names.reserve(jets_.size());
  for (const auto& v : jets_) names.push_back(v.display(n_));
  return f_.to_string(names);
}

}  // namespace algcurv
