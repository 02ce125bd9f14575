#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algcurv/diffexpr.hpp"
#include "algcurv/series.hpp"

namespace algcurv {

// The jet-index shift x^(i) -> x^(i+1), y_j^(i) -> y_j^(i+1) extended by
// Leibniz and quotient rules. Phi jets shift the same way.
DiffExpr deriv_partial(const DiffExpr& p);

// The chain-rule derivation: x^(i) -> x^(i+1) phi^(1), y_j^(i) -> y_j^(i+1) phi^(1),
// phi^(i) -> phi^(i+1).
DiffExpr deriv_chain(const DiffExpr& p);

// Substitutes x^(i) -> chi^i(x^(0)) and y_j^(i) -> chi^i(y_j^(0)); phi jets are fixed.
DiffExpr lambda_morphism(const DiffExpr& p);

inline constexpr unsigned kDefaultKappaDepth = 12;

// kappa_0 = y_j'/x' (the slope), kappa_{i+1} = d(kappa_i)/x'. Memoized and
// safe to call concurrently. Throws DepthLimitExceeded for i > depth_limit.
DiffExpr kappa_symbol(unsigned i, unsigned j, unsigned depth_limit = kDefaultKappaDepth);

// x^(1) -> 1, x^(i) -> 0 for i >= 2, y_j^(i) -> kappa_{i-1,j} for i >= 1;
// x^(0) and y_j^(0) are fixed. Throws IndeterminateSubstitution if the
// denominator vanishes.
DiffExpr i_kappa(const DiffExpr& p);

struct InvarianceVerdict {
  bool invariant = false;
  // p - i_kappa(p) when not invariant (zero otherwise).
  DiffExpr witness;
  // Set when i_kappa could not be applied.
  std::optional<std::string> diagnostic;
};

// Exact test: p is a geometric invariant iff p = i_kappa(p).
InvarianceVerdict is_invariant(const DiffExpr& p);

struct EquivarianceCounterexample {
  std::size_t trial = 0;
  Parametrization gamma;
  TruncSeries phi;
  std::size_t order_of_disagreement = 0;
};

struct EquivarianceVerdict {
  bool consistent = true;
  std::size_t trials_run = 0;
  std::optional<EquivarianceCounterexample> counterexample;
};

// Randomized test of p(jets gamma) o phi == p(jets (gamma o phi)) on
// surrogate series of the given order. A counterexample is conclusive;
// consistency is evidence only.
EquivarianceVerdict is_equivariant_probabilistic(const DiffExpr& p, std::size_t trials, std::uint32_t order,
                                                 std::uint64_t seed);

// Generators of the invariant field: X0, Y0(j) and K(i,j) (K(0,j) is the slope).
struct Generator {
  enum class Kind : std::uint8_t { X0 = 0, Y0 = 1, K = 2 };
  Kind kind = Kind::X0;
  std::uint32_t j = 0;
  std::uint32_t i = 0;

  std::string name() const;
  auto operator<=>(const Generator&) const = default;
};

class GeneratorExpr {
 public:
  GeneratorExpr() = default;
  GeneratorExpr(const RatFunc& f, std::vector<Generator> gens, unsigned n);

  const RatFunc& rational() const noexcept { return f_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  unsigned n() const noexcept { return n_; }

  std::string to_string() const { return f_.to_string(); }
  friend bool operator==(const GeneratorExpr& a, const GeneratorExpr& b) {
    return a.gens_ == b.gens_ && a.f_ == b.f_;
  }

 private:
  RatFunc f_;
  std::vector<Generator> gens_;
  unsigned n_ = 1;
};

// Writes an invariant as a rational function of the generators. Throws
// NotAnInvariant when is_invariant(p) fails.
GeneratorExpr rewrite_in_generators(const DiffExpr& p);

// Inverse direction: K(i,j) -> kappa_symbol(i,j), X0 -> x^(0), Y0(j) -> y_j^(0).
DiffExpr expand_generators(const GeneratorExpr& g);

}  // namespace algcurv
