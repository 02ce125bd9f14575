#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algcurv/ratfunc.hpp"

namespace algcurv {

enum class JetFamily : std::uint8_t { X = 0, Y = 1, Phi = 2 };

// A jet variable x^(i), y_j^(i) or phi^(i). The defaulted ordering
// (family, j, index) is the canonical alphabet order.
struct JetVar {
  JetFamily family = JetFamily::X;
  std::uint32_t j = 0;  // 1..n for Y, 0 otherwise
  std::uint32_t index = 0;

  static JetVar x(std::uint32_t i) { return {JetFamily::X, 0, i}; }
  static JetVar y(std::uint32_t j, std::uint32_t i) { return {JetFamily::Y, j, i}; }
  static JetVar phi(std::uint32_t i) { return {JetFamily::Phi, 0, i}; }

  JetVar shifted(std::uint32_t by = 1) const { return {family, j, index + by}; }

  // Alphabet name: "x^(i)", "y<j>^(i)", "phi^(i)".
  std::string name() const;
  // Printed name: x, x^(1), x^(2), ...; the single Y family prints as "y" when n = 1.
  std::string display(unsigned n) const;

  auto operator<=>(const JetVar&) const = default;
};

VarAlphabet jet_alphabet(const std::vector<JetVar>& jets);

// Rational expression in jet variables. The alphabet holds exactly the jets
// that occur, in canonical order; `n` is the number of Y families.
class DiffExpr {
 public:
  DiffExpr();
  DiffExpr(const RatFunc& f, std::vector<JetVar> jets, unsigned n);

  static DiffExpr constant(const Rational& c, unsigned n = 1);
  static DiffExpr jet(const JetVar& v, unsigned n = 1);

  const RatFunc& rational() const noexcept { return f_; }
  const std::vector<JetVar>& jets() const noexcept { return jets_; }
  unsigned n() const noexcept { return n_; }

  bool is_zero() const noexcept { return f_.is_zero(); }
  bool is_constant() const noexcept { return jets_.empty(); }
  bool has_phi() const noexcept;
  // Largest jet index among x and y jets; nullopt when none occur.
  std::optional<std::uint32_t> max_xy_index() const noexcept;
  std::uint32_t max_index() const noexcept;

  DiffExpr with_n(unsigned n) const;

  friend DiffExpr operator+(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator-(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator/(const DiffExpr& a, const DiffExpr& b);
  friend DiffExpr operator*(const DiffExpr& a, const Rational& c);
  DiffExpr operator-() const;
  DiffExpr pow(int e) const;

  // Equal as rational functions; n is not compared.
  friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return a.jets_ == b.jets_ && a.f_ == b.f_; }

  std::string to_string() const;

 private:
  RatFunc f_;
  std::vector<JetVar> jets_;
  unsigned n_ = 1;
};

// Substitutes values[k] for variable k of f (num and den separately) and
// divides. Throws IndeterminateSubstitution when the denominator maps to 0.
DiffExpr substitute_jets(const RatFunc& f, const std::vector<DiffExpr>& values, unsigned n);

// Re-expresses e over a superset `jets` of its jets.
RatFunc express_over(const DiffExpr& e, const std::vector<JetVar>& jets, const VarAlphabet& alphabet);

}  // namespace algcurv
