#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "algcurv/diffexpr.hpp"
#include "algcurv/mpoly.hpp"
#include "algcurv/ratfunc.hpp"
#include "algcurv/series.hpp"

namespace algcurv {

// Coordinates of ambient (n+1)-space: (x, y) for plane curves, (x, y1..yn)
// otherwise. x is the distinguished coordinate.
VarAlphabet curve_alphabet(unsigned n);

// An implicit curve f_1 = ... = f_r = 0 over curve_alphabet(n), r >= n, with
// the n rows used for the square Jacobian block.
class CurveIdeal {
 public:
  // n is read off the alphabet; rows default to 0..n-1.
  explicit CurveIdeal(std::vector<MPoly> generators, std::vector<std::size_t> row_choice = {});

  unsigned n() const noexcept { return n_; }
  const VarAlphabet& alphabet() const noexcept { return generators_.front().alphabet(); }
  const std::vector<MPoly>& generators() const noexcept { return generators_; }
  const std::vector<std::size_t>& row_choice() const noexcept { return rows_; }

  CurveIdeal with_rows(std::vector<std::size_t> rows) const;
  // Substitutes x_k -> x_k + point_k, moving `point` to the origin.
  CurveIdeal translated(std::span<const Rational> point) const;
  // Exchanges x with y_j (j in 1..n).
  CurveIdeal swapped(unsigned j) const;

  bool contains(std::span<const Rational> point) const;

 private:
  unsigned n_ = 1;
  std::vector<MPoly> generators_;
  std::vector<std::size_t> rows_;
};

// J[r][k] = d f_row(r) / d y_(k+1), b[r] = -d f_row(r) / dx.
struct JacobianBlock {
  std::vector<std::vector<MPoly>> J;
  std::vector<MPoly> b;
};

JacobianBlock jacobian_block(const CurveIdeal& ideal);

// Laplace expansion; fine for the small blocks met here.
MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m);

// kappa_{i,j}(t) of a parametrization: kappa_symbol(i, j) evaluated on its jets.
TruncSeries kappa_series(const Parametrization& gamma, unsigned i, unsigned j);

// Chooses the lexicographically first n rows whose Jacobian block is
// invertible at `point`. Throws PointNotOnCurve or SingularOrBadChart.
CurveIdeal select_rows(const CurveIdeal& ideal, std::span<const Rational> point);

// kappa~_{0,j} = det J_j / det J (Cramer's rule), j = 1..n.
std::vector<RatFunc> implicit_slopes(const CurveIdeal& ideal);

class ImplicitCurvatureTable {
 public:
  ImplicitCurvatureTable(unsigned n, unsigned i_max) : n_(n), i_max_(i_max) {}

  unsigned n() const noexcept { return n_; }
  unsigned i_max() const noexcept { return i_max_; }
  // j in 1..n
  const RatFunc& at(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, RatFunc f) { entries_.insert_or_assign({i, j}, std::move(f)); }

 private:
  unsigned n_;
  unsigned i_max_;
  std::map<std::pair<unsigned, unsigned>, RatFunc> entries_;
};

// kappa~_{i+1,j} = d_x kappa~_{i,j} + sum_k d_{y_k} kappa~_{i,j} * kappa~_{0,k}.
ImplicitCurvatureTable implicit_kappa(const CurveIdeal& ideal, unsigned i_max);

// -(f_xx f_y^2 - 2 f_xy f_x f_y + f_yy f_x^2) / f_y^3 for a plane curve f.
RatFunc plane_kappa1_closed_form(const MPoly& f);

// Implicit form of an invariant: its generator expression with
// X0 -> x, Y0(j) -> y_j, K(i,j) -> kappa~_{i,j}.
RatFunc implicitize_invariant(const DiffExpr& p, const CurveIdeal& ideal);

struct ConsistencyEntry {
  unsigned i = 0;
  unsigned j = 0;
  std::uint32_t compared_order = 0;
  std::optional<std::size_t> first_disagreement;  // nullopt: consistent
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyEntry> entries;
  // Valuation of f_k(gamma(t)) per generator; nullopt means zero to the order.
  std::vector<std::optional<std::size_t>> residuals;
};

// Compares kappa~_{i,j}(gamma(t)) with kappa_{i,j}(t) for i <= i_max.
ConsistencyReport consistency_check(const CurveIdeal& ideal, const Parametrization& gamma, unsigned i_max,
                                    std::uint32_t order);

struct PointValue {
  enum class Status { Finite, Pole, Indeterminate };
  unsigned i = 0;
  unsigned j = 0;
  Status status = Status::Finite;
  Rational value;
};

// kappa~_{i,j} at an on-curve point, computed on the ideal translated to the
// origin. Poles are reported per entry.
std::vector<PointValue> kappa_at_point(const CurveIdeal& ideal, std::span<const Rational> point, unsigned i_max);

}  // namespace algcurv
