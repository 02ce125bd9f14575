#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "algcurv/error.hpp"
#include "algcurv/rational.hpp"

namespace algcurv {

// An ordered list of distinct variable names. The order fixes the monomial
// order and the printed form. Copies share storage.
class VarAlphabet {
 public:
  VarAlphabet();
  explicit VarAlphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const VarAlphabet& a, const VarAlphabet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::vector<std::uint32_t>;

// Graded lexicographic: total degree first, then lex with the first
// alphabet variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

std::uint32_t total_degree(const Exponents& e) noexcept;

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  MPoly() = default;
  explicit MPoly(VarAlphabet alphabet);
  MPoly(VarAlphabet alphabet, const Rational& constant);

  static MPoly variable(const VarAlphabet& alphabet, std::size_t index);
  static MPoly variable(const VarAlphabet& alphabet, std::string_view name);
  static MPoly monomial(const VarAlphabet& alphabet, Exponents exponents, const Rational& coeff);

  const VarAlphabet& alphabet() const noexcept { return alphabet_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Rational constant_term() const;

  // Requires a nonzero polynomial.
  const Exponents& leading_exponents() const;
  const Rational& leading_coefficient() const;

  std::uint32_t total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  std::vector<bool> occurring() const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  MPoly operator-() const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
  }

  MPoly pow(unsigned e) const;
  MPoly diff(std::size_t var) const;
  MPoly diff(std::string_view var) const;
  Rational eval(std::span<const Rational> point) const;

  // Re-expresses the polynomial over `target`, sending variable i to
  // target variable index_map[i].
  MPoly remap(const VarAlphabet& target, std::span<const std::size_t> index_map) const;
  // Same, matching variables by name. Throws UnknownVariable if an occurring
  // variable is missing from `target`.
  MPoly embed(const VarAlphabet& target) const;

  std::string to_string() const;
  // Prints with the given display names instead of the alphabet's.
  std::string to_string(std::span<const std::string> display_names) const;

  // Inserts c*x^e, merging with an existing term.
  void add_term(const Exponents& e, const Rational& c);

 private:
  void require_same_alphabet(const MPoly& other) const;

  VarAlphabet alphabet_;
  TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };
MPoly poly_arith(const MPoly& a, const MPoly& b, PolyOp op);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Greatest common divisor, normalized to leading coefficient 1 (zero stays
// zero). gcd(0, b) is b made monic.
MPoly gcd(const MPoly& a, const MPoly& b);

MPoly make_monic(const MPoly& p);

// Positive rational c such that p / c has coprime integer coefficients.
Rational rational_content(const MPoly& p);

// Coefficients of p viewed as a polynomial in `var`; entry k multiplies
// var^k and no longer contains var.
std::vector<MPoly> coefficients_in(const MPoly& p, std::size_t var);
MPoly from_coefficients_in(std::span<const MPoly> coeffs, std::size_t var, const VarAlphabet& alphabet);

// Evaluates p with variable i replaced by values[i], in any commutative ring
// T that supports T + T, T * T and T * Rational. `one` fixes the ring
// element used for the constant term.
template <class T>
T substitute(const MPoly& p, std::span<const T> values, const T& one) {
  if (values.size() != p.alphabet().size())
    throw AlphabetMismatch("substitute: expected " + std::to_string(p.alphabet().size()) + " values");
  std::vector<std::vector<T>> powers(values.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const T& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(values[v]);
    while (cache.size() < e) cache.push_back(cache.back() * values[v]);
    return cache[e - 1];
  };
  T sum = one * Rational(0);
  for (const auto& [exps, coeff] : p.terms()) {
    T term = one * coeff;
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) term = term * power(v, exps[v]);
    sum = sum + term;
  }
  return sum;
}

}  // namespace algcurv
