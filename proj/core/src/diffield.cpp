#include "algcurv/diffield.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace algcurv {

namespace {

// (n'd - nd') / d^2 after removing g = gcd(d, d'): a factor of d that does
// not divide its own derivative cannot cancel, so only gcd(num, g) remains.
RatFunc reduce_quotient_rule(MPoly num, MPoly den, const MPoly& g) {
  if (num.is_zero()) return RatFunc(num.alphabet());
  if (!g.is_constant()) {
    const MPoly h = gcd(num, g);
    if (!h.is_constant()) {
      num = *divide_exact(num, h);
      den = *divide_exact(den, h);
    }
  }
  return RatFunc::from_coprime(std::move(num), std::move(den));
}

// Applies the derivation determined by `image` (the value on each jet) to p.
// Both derivations of interest map jets to monomials in jets, so the images
// are polynomials and the quotient rule can run on numerator/denominator.
template <class Image>
DiffExpr apply_derivation(const DiffExpr& p, Image image) {
  if (p.is_constant()) return DiffExpr::constant(Rational(0), p.n());
  std::vector<DiffExpr> images;
  images.reserve(p.jets().size());
  std::vector<JetVar> jets = p.jets();
  for (const auto& v : p.jets()) {
    images.push_back(image(v, p.n()));
    std::vector<JetVar> merged;
    std::set_union(jets.begin(), jets.end(), images.back().jets().begin(), images.back().jets().end(),
                   std::back_inserter(merged));
    jets = std::move(merged);
  }
  const VarAlphabet alpha = jet_alphabet(jets);
  const RatFunc f = express_over(p, jets, alpha);
  std::vector<std::size_t> pos(p.jets().size());
  std::vector<MPoly> img(p.jets().size());
  for (std::size_t k = 0; k < p.jets().size(); ++k) {
    pos[k] = static_cast<std::size_t>(std::lower_bound(jets.begin(), jets.end(), p.jets()[k]) - jets.begin());
    const RatFunc r = express_over(images[k], jets, alpha);
    img[k] = r.num() * (Rational(1) / r.den().constant_term());
  }
  auto derive = [&](const MPoly& q) {
    MPoly out(alpha);
    for (std::size_t k = 0; k < pos.size(); ++k) {
      MPoly d = q.diff(pos[k]);
      if (!d.is_zero()) out += d * img[k];
    }
    return out;
  };
  const MPoly& n = f.num();
  const MPoly& d = f.den();
  const MPoly dn = derive(n);
  if (d.is_constant()) return DiffExpr(RatFunc::from_coprime(dn, d), jets, p.n());
  const MPoly dd = derive(d);
  const MPoly g = gcd(d, dd);
  const MPoly dg = *divide_exact(d, g);
  const MPoly ddg = *divide_exact(dd, g);
  return DiffExpr(reduce_quotient_rule(dn * dg - n * ddg, d * dg, g), jets, p.n());
}

DiffExpr partial_image(const JetVar& v, unsigned n) { return DiffExpr::jet(v.shifted(), n); }

DiffExpr chain_image(const JetVar& v, unsigned n) {
  if (v.family == JetFamily::Phi) return DiffExpr::jet(v.shifted(), n);
  return DiffExpr::jet(v.shifted(), n) * DiffExpr::jet(JetVar::phi(1), n);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

}  // namespace

DiffExpr deriv_partial(const DiffExpr& p) { return apply_derivation(p, partial_image); }

DiffExpr deriv_chain(const DiffExpr& p) { return apply_derivation(p, chain_image); }

DiffExpr lambda_morphism(const DiffExpr& p) {
  if (p.is_constant()) return p;
  // chi^i applied to x^(0) / y_j^(0), built once per family.
  std::map<std::pair<JetFamily, std::uint32_t>, std::vector<DiffExpr>> iterates;
  std::vector<DiffExpr> values;
  values.reserve(p.jets().size());
  for (const auto& v : p.jets()) {
    if (v.family == JetFamily::Phi) {
      values.push_back(DiffExpr::jet(v, p.n()));
      continue;
    }
    auto& chain = iterates[{v.family, v.j}];
    if (chain.empty()) chain.push_back(DiffExpr::jet(JetVar{v.family, v.j, 0}, p.n()));
    while (chain.size() <= v.index) chain.push_back(deriv_chain(chain.back()));
    values.push_back(chain[v.index]);
  }
  // Lambda is triangular in the x- and y-jets with leading coefficients
  // powers of phi', so the images of a coprime pair can only share a power
  // of phi'. That avoids a general gcd on the (large) images.
  std::vector<JetVar> jets;
  for (const auto& v : values) {
    std::vector<JetVar> merged;
    std::set_union(jets.begin(), jets.end(), v.jets().begin(), v.jets().end(), std::back_inserter(merged));
    jets = std::move(merged);
  }
  const JetVar phi1 = JetVar::phi(1);
  if (!std::binary_search(jets.begin(), jets.end(), phi1)) return substitute_jets(p.rational(), values, p.n());
  const VarAlphabet alpha = jet_alphabet(jets);
  std::vector<MPoly> poly_values;
  for (const auto& v : values) {
    const RatFunc r = express_over(v, jets, alpha);
    if (!r.is_polynomial()) return substitute_jets(p.rational(), values, p.n());
    poly_values.push_back(r.num() * (Rational(1) / r.den().constant_term()));
  }
  const MPoly one(alpha, Rational(1));
  MPoly num = substitute<MPoly>(p.rational().num(), poly_values, one);
  MPoly den = substitute<MPoly>(p.rational().den(), poly_values, one);
  if (den.is_zero()) throw IndeterminateSubstitution("denominator vanishes under Lambda");
  const auto at = static_cast<std::size_t>(std::lower_bound(jets.begin(), jets.end(), phi1) - jets.begin());
  std::uint32_t common = UINT32_MAX;
  for (const MPoly* q : {&num, &den})
    for (const auto& [e, c] : q->terms()) common = std::min(common, e[at]);
  if (num.is_zero()) common = 0;
  if (common > 0) {
    Exponents e(jets.size(), 0);
    e[at] = common;
    const MPoly m = MPoly::monomial(alpha, e, Rational(1));
    num = *divide_exact(num, m);
    den = *divide_exact(den, m);
  }
  return DiffExpr(RatFunc::from_coprime(std::move(num), std::move(den)), jets, p.n());
}

namespace {

struct KappaCache {
  std::mutex mutex;
  std::vector<DiffExpr> first_family;                      // kappa_{i,1}
  std::map<std::pair<unsigned, unsigned>, DiffExpr> other;  // (i, j), j >= 2
};

KappaCache& kappa_cache() {
  static KappaCache cache;
  return cache;
}

DiffExpr rename_family(const DiffExpr& e, unsigned j) {
  std::vector<JetVar> jets = e.jets();
  for (auto& v : jets)
    if (v.family == JetFamily::Y) v.j = j;
  // Renaming Y(1) -> Y(j) keeps the relative order of the jets.
  return DiffExpr(e.rational().remap(jet_alphabet(jets), [&] {
    std::vector<std::size_t> id(jets.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    return id;
  }()),
                  jets, j);
}

}  // namespace

DiffExpr kappa_symbol(unsigned i, unsigned j, unsigned depth_limit) {
  if (j == 0) throw InputError("kappa_symbol: family index j starts at 1");
  if (i > depth_limit)
    throw DepthLimitExceeded("kappa_" + std::to_string(i) + " exceeds the depth limit " + std::to_string(depth_limit));
  auto& cache = kappa_cache();
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto& fam = cache.first_family;
  if (fam.empty()) fam.push_back(DiffExpr::jet(JetVar::y(1, 1)) / DiffExpr::jet(JetVar::x(1)));
  const DiffExpr x1 = DiffExpr::jet(JetVar::x(1));
  while (fam.size() <= i) fam.push_back(deriv_partial(fam.back()) / x1);
  if (j == 1) return fam[i];
  const auto key = std::make_pair(i, j);
  auto it = cache.other.find(key);
  if (it == cache.other.end()) it = cache.other.emplace(key, rename_family(fam[i], j)).first;
  return it->second;
}

DiffExpr i_kappa(const DiffExpr& p) {
  if (p.has_phi()) throw UnboundVariable("i_kappa is defined on phi-free expressions");
  std::vector<DiffExpr> values;
  values.reserve(p.jets().size());
  for (const auto& v : p.jets()) {
    if (v.index == 0) {
      values.push_back(DiffExpr::jet(v, p.n()));
    } else if (v.family == JetFamily::X) {
      values.push_back(DiffExpr::constant(Rational(v.index == 1 ? 1 : 0), p.n()));
    } else {
      values.push_back(kappa_symbol(v.index - 1, v.j, std::max(kDefaultKappaDepth, v.index)).with_n(p.n()));
    }
  }
  return substitute_jets(p.rational(), values, p.n());
}

InvarianceVerdict is_invariant(const DiffExpr& p) {
  InvarianceVerdict verdict;
  try {
    const DiffExpr q = i_kappa(p);
    verdict.witness = p - q;
    verdict.invariant = verdict.witness.is_zero();
  } catch (const IndeterminateSubstitution& e) {
    verdict.invariant = false;
    verdict.witness = DiffExpr::constant(Rational(0), p.n());
    verdict.diagnostic = std::string("IndeterminateSubstitution: ") + e.what();
  }
  return verdict;
}

EquivarianceVerdict is_equivariant_probabilistic(const DiffExpr& p, std::size_t trials, std::uint32_t order,
                                                 std::uint64_t seed) {
  if (p.has_phi()) throw UnboundVariable("the equivariance check needs a phi-free expression");
  constexpr unsigned kMaxRedraws = 16;
  EquivarianceVerdict verdict;
  const std::size_t components = p.n() + 1;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    bool done = false;
    for (unsigned redraw = 0; redraw < kMaxRedraws && !done; ++redraw) {
      std::uint64_t s = splitmix64(seed ^ splitmix64((trial << 8U) + redraw));
      std::vector<TruncSeries> comps;
      for (std::size_t c = 0; c < components; ++c) comps.push_back(surrogate_series(s = splitmix64(s), order));
      const Parametrization gamma(std::move(comps));
      const TruncSeries phi = surrogate_series(splitmix64(s), order,
                                               SurrogateConstraint::ZeroConstant | SurrogateConstraint::UnitDerivative);
      try {
        const TruncSeries lhs = series_compose(eval_diffexpr(p, gamma), phi);
        const TruncSeries rhs = eval_diffexpr(p, gamma.reparametrize(phi));
        done = true;
        if (auto diff = first_difference(lhs, rhs)) {
          verdict.consistent = false;
          verdict.trials_run = trial + 1;
          verdict.counterexample = EquivarianceCounterexample{trial, gamma, phi, *diff};
          return verdict;
        }
      } catch (const NonUnitDivisor&) {
        // denominator vanished at t = 0 on this draw
      }
    }
    if (!done) throw NonUnitDivisor("denominator vanished on " + std::to_string(kMaxRedraws) + " consecutive draws");
  }
  verdict.trials_run = trials;
  return verdict;
}

std::string Generator::name() const {
  switch (kind) {
    case Kind::X0:
      return "X0";
    case Kind::Y0:
      return "Y0(" + std::to_string(j) + ")";
    case Kind::K:
      return "K(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return {};
}

namespace {

VarAlphabet generator_alphabet(const std::vector<Generator>& gens) {
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name());
  return VarAlphabet(std::move(names));
}

}  // namespace

GeneratorExpr::GeneratorExpr(const RatFunc& f, std::vector<Generator> gens, unsigned n) : n_(n) {
  if (gens.size() != f.alphabet().size()) throw AlphabetMismatch("GeneratorExpr: generator list does not match alphabet");
  const auto on = f.num().occurring();
  const auto od = f.den().occurring();
  std::vector<Generator> kept;
  std::vector<std::size_t> map(gens.size(), 0);
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (on[k] || od[k]) {
      map[k] = kept.size();
      kept.push_back(gens[k]);
    }
  f_ = kept.size() == gens.size() ? f : f.remap(generator_alphabet(kept), map);
  gens_ = std::move(kept);
}

GeneratorExpr rewrite_in_generators(const DiffExpr& p) {
  const InvarianceVerdict v = is_invariant(p);
  if (!v.invariant)
    throw NotAnInvariant(p.to_string() + " is not a geometric invariant" +
                         (v.diagnostic ? " (" + *v.diagnostic + ")" : ""));
  // Target generators, one per y jet plus X0.
  std::vector<Generator> gens;
  for (const auto& jv : p.jets()) {
    if (jv.family == JetFamily::X && jv.index == 0) gens.push_back({Generator::Kind::X0, 0, 0});
    if (jv.family == JetFamily::Y)
      gens.push_back(jv.index == 0 ? Generator{Generator::Kind::Y0, jv.j, 0} : Generator{Generator::Kind::K, jv.j, jv.index - 1});
  }
  std::sort(gens.begin(), gens.end());
  const VarAlphabet alpha = generator_alphabet(gens);
  auto gen_var = [&](const Generator& g) {
    const auto idx = static_cast<std::size_t>(std::lower_bound(gens.begin(), gens.end(), g) - gens.begin());
    return MPoly::variable(alpha, idx);
  };
  std::vector<MPoly> values;
  for (const auto& jv : p.jets()) {
    if (jv.family == JetFamily::X) {
      if (jv.index == 0)
        values.push_back(gen_var({Generator::Kind::X0, 0, 0}));
      else
        values.push_back(MPoly(alpha, Rational(jv.index == 1 ? 1 : 0)));
    } else if (jv.index == 0) {
      values.push_back(gen_var({Generator::Kind::Y0, jv.j, 0}));
    } else {
      values.push_back(gen_var({Generator::Kind::K, jv.j, jv.index - 1}));
    }
  }
  const MPoly one(alpha, Rational(1));
  const MPoly num = substitute<MPoly>(p.rational().num(), values, one);
  const MPoly den = substitute<MPoly>(p.rational().den(), values, one);
  if (den.is_zero()) throw IndeterminateSubstitution("denominator vanishes under x' -> 1");
  return GeneratorExpr(RatFunc(num, den), std::move(gens), p.n());
}

DiffExpr expand_generators(const GeneratorExpr& g) {
  std::vector<DiffExpr> values;
  for (const auto& gen : g.generators()) {
    switch (gen.kind) {
      case Generator::Kind::X0:
        values.push_back(DiffExpr::jet(JetVar::x(0), g.n()));
        break;
      case Generator::Kind::Y0:
        values.push_back(DiffExpr::jet(JetVar::y(gen.j, 0), g.n()));
        break;
      case Generator::Kind::K:
        values.push_back(kappa_symbol(gen.i, gen.j, std::max(kDefaultKappaDepth, gen.i)).with_n(g.n()));
        break;
    }
  }
  return substitute_jets(g.rational(), values, g.n());
}

}  // namespace algcurv
