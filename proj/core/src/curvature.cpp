#include "algcurv/curvature.hpp"

#include <algorithm>
#include <sstream>

#include "algcurv/diffield.hpp"
#include "algcurv/linalg.hpp"

namespace algcurv {

VarAlphabet curve_alphabet(unsigned n) {
  if (n == 0) throw InputError("a curve needs at least one y coordinate");
  std::vector<std::string> names{"x"};
  if (n == 1) {
    names.emplace_back("y");
  } else {
    for (unsigned j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  }
  return VarAlphabet(std::move(names));
}

CurveIdeal::CurveIdeal(std::vector<MPoly> generators, std::vector<std::size_t> row_choice)
    : generators_(std::move(generators)), rows_(std::move(row_choice)) {
  if (generators_.empty()) throw InputError("a curve ideal needs at least one generator");
  const auto& alpha = generators_.front().alphabet();
  if (alpha.size() < 2) throw InputError("a curve ideal lives over (x, y_1..y_n), n >= 1");
  n_ = static_cast<unsigned>(alpha.size() - 1);
  if (!(alpha == curve_alphabet(n_))) throw AlphabetMismatch("curve ideal generators must use curve_alphabet(n)");
  for (const auto& g : generators_)
    if (!(g.alphabet() == alpha)) throw AlphabetMismatch("curve ideal generators over different alphabets");
  if (generators_.size() < n_)
    throw InputError("a curve in " + std::to_string(n_ + 1) + "-space needs at least " + std::to_string(n_) +
                     " generators");
  if (rows_.empty())
    for (std::size_t k = 0; k < n_; ++k) rows_.push_back(k);
  if (rows_.size() != n_) throw InputError("row choice must name exactly n generators");
  auto sorted = rows_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= generators_.size())
    throw InputError("row choice entries must be distinct generator indices");
}

CurveIdeal CurveIdeal::with_rows(std::vector<std::size_t> rows) const { return CurveIdeal(generators_, std::move(rows)); }

CurveIdeal CurveIdeal::translated(std::span<const Rational> point) const {
  if (point.size() != n_ + 1) throw InputError("point dimension does not match the curve");
  const auto& alpha = alphabet();
  std::vector<MPoly> shift;
  for (std::size_t k = 0; k <= n_; ++k) shift.push_back(MPoly::variable(alpha, k) + MPoly(alpha, point[k]));
  std::vector<MPoly> gens;
  for (const auto& g : generators_) gens.push_back(substitute<MPoly>(g, shift, MPoly(alpha, Rational(1))));
  return CurveIdeal(std::move(gens), rows_);
}

CurveIdeal CurveIdeal::swapped(unsigned j) const {
  if (j < 1 || j > n_) throw InputError("swap index must be in 1..n");
  std::vector<std::size_t> map(n_ + 1);
  for (std::size_t k = 0; k <= n_; ++k) map[k] = k;
  std::swap(map[0], map[j]);
  std::vector<MPoly> gens;
  for (const auto& g : generators_) gens.push_back(g.remap(alphabet(), map));
  return CurveIdeal(std::move(gens), rows_);
}

bool CurveIdeal::contains(std::span<const Rational> point) const {
  if (point.size() != n_ + 1) throw InputError("point dimension does not match the curve");
  return std::all_of(generators_.begin(), generators_.end(), [&](const MPoly& g) { return g.eval(point) == 0; });
}

JacobianBlock jacobian_block(const CurveIdeal& ideal) {
  JacobianBlock block;
  for (auto row : ideal.row_choice()) {
    const MPoly& f = ideal.generators()[row];
    std::vector<MPoly> r;
    for (unsigned k = 1; k <= ideal.n(); ++k) r.push_back(f.diff(k));
    block.J.push_back(std::move(r));
    block.b.push_back(-f.diff(std::size_t{0}));
  }
  return block;
}

MPoly poly_determinant(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MPoly det(m[0][0].alphabet());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const MPoly term = m[0][c] * poly_determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

TruncSeries kappa_series(const Parametrization& gamma, unsigned i, unsigned j) {
  if (j < 1 || j > gamma.n()) throw InputError("kappa_series: family index out of range");
  if (gamma.x().order() >= 1 && gamma.x().coeff(1) == 0)
    throw NonUnitDivisor("x'(0) = 0: x is not a local parameter; swap x with one of the y coordinates");
  return eval_diffexpr(kappa_symbol(i, j, std::max(kDefaultKappaDepth, i)), gamma);
}

namespace {

RatMatrix jacobian_at(const CurveIdeal& ideal, std::span<const Rational> point) {
  const auto& gens = ideal.generators();
  RatMatrix m(gens.size(), ideal.n() + 1);
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t c = 0; c <= ideal.n(); ++c) m(r, c) = gens[r].diff(c).eval(point);
  return m;
}

// Calls f on each k-subset of {0..n-1} in lexicographic order until it returns true.
template <class F>
bool for_each_subset(std::size_t n, std::size_t k, F f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::string point_string(std::span<const Rational> point) {
  std::string s = "(";
  for (std::size_t k = 0; k < point.size(); ++k) s += (k ? "," : "") + to_string(point[k]);
  return s + ")";
}

}  // namespace

CurveIdeal select_rows(const CurveIdeal& ideal, std::span<const Rational> point) {
  if (!ideal.contains(point)) throw PointNotOnCurve("point " + point_string(point) + " is not on the curve");
  const RatMatrix jac = jacobian_at(ideal, point);
  const std::size_t n = ideal.n();
  auto block_det = [&](const std::vector<std::size_t>& rows, std::size_t skip_col) {
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c <= n; ++c) {
        if (c == skip_col) continue;
        m(r, cc++) = jac(rows[r], c);
      }
    }
    return determinant(m);
  };
  std::vector<std::size_t> chosen;
  if (for_each_subset(ideal.generators().size(), n, [&](const std::vector<std::size_t>& rows) {
        if (block_det(rows, 0) == 0) return false;
        chosen = rows;
        return true;
      }))
    return ideal.with_rows(chosen);

  if (rank(jac) < n)
    throw SingularOrBadChart("the curve is singular at " + point_string(point) + " (Jacobian rank " +
                             std::to_string(rank(jac)) + " < " + std::to_string(n) + ")");
  std::string hint;
  for (std::size_t j = 1; j <= n && hint.empty(); ++j)
    for_each_subset(ideal.generators().size(), n, [&](const std::vector<std::size_t>& rows) {
      if (block_det(rows, j) == 0) return false;
      hint = n == 1 ? "swap x and y" : "swap x and y" + std::to_string(j);
      return true;
    });
  throw SingularOrBadChart("x is not a local parameter at " + point_string(point) +
                           " (tangent is orthogonal to the x axis); " + hint);
}

std::vector<RatFunc> implicit_slopes(const CurveIdeal& ideal) {
  const JacobianBlock block = jacobian_block(ideal);
  const MPoly det = poly_determinant(block.J);
  if (det.is_zero()) throw ZeroJacobianDeterminant("the Jacobian block with respect to y vanishes identically");
  std::vector<RatFunc> slopes;
  for (std::size_t j = 0; j < ideal.n(); ++j) {
    auto mj = block.J;
    for (std::size_t r = 0; r < mj.size(); ++r) mj[r][j] = block.b[r];
    slopes.emplace_back(poly_determinant(mj), det);
  }
  return slopes;
}

const RatFunc& ImplicitCurvatureTable::at(unsigned i, unsigned j) const {
  const auto it = entries_.find({i, j});
  if (it == entries_.end())
    throw InputError("curvature table has no entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

RatFunc plane_kappa1_closed_form(const MPoly& f) {
  const MPoly fx = f.diff(std::size_t{0}), fy = f.diff(1);
  const MPoly fxx = fx.diff(std::size_t{0}), fxy = fx.diff(1), fyy = fy.diff(1);
  const MPoly num = fxx * fy * fy - Rational(2) * (fxy * fx * fy) + fyy * fx * fx;
  return RatFunc(-num, fy.pow(3));
}

ImplicitCurvatureTable implicit_kappa(const CurveIdeal& ideal, unsigned i_max) {
  const unsigned n = ideal.n();
  ImplicitCurvatureTable table(n, i_max);
  const auto slopes = implicit_slopes(ideal);
  for (unsigned j = 1; j <= n; ++j) table.set(0, j, slopes[j - 1]);
  for (unsigned i = 0; i < i_max; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      const RatFunc& prev = table.at(i, j);
      RatFunc next = prev.diff(std::size_t{0});
      for (unsigned k = 1; k <= n; ++k) next += prev.diff(k) * slopes[k - 1];
      table.set(i + 1, j, std::move(next));
    }
  }
  if (n == 1 && i_max >= 1) {
    const MPoly& f = ideal.generators()[ideal.row_choice().front()];
    if (!(table.at(1, 1) == plane_kappa1_closed_form(f)))
      throw Error("internal: recursion and closed form disagree on kappa~_1");
  }
  return table;
}

RatFunc implicitize_invariant(const DiffExpr& p, const CurveIdeal& ideal) {
  const GeneratorExpr g = rewrite_in_generators(p);
  unsigned i_max = 0;
  for (const auto& gen : g.generators()) {
    if (gen.kind == Generator::Kind::X0) continue;
    if (gen.j > ideal.n())
      throw InputError("invariant uses family y" + std::to_string(gen.j) + " but the curve has n = " +
                       std::to_string(ideal.n()));
    if (gen.kind == Generator::Kind::K) i_max = std::max(i_max, gen.i);
  }
  const ImplicitCurvatureTable table = implicit_kappa(ideal, i_max);
  const VarAlphabet& alpha = ideal.alphabet();
  std::vector<RatFunc> values;
  for (const auto& gen : g.generators()) {
    switch (gen.kind) {
      case Generator::Kind::X0:
        values.emplace_back(MPoly::variable(alpha, 0));
        break;
      case Generator::Kind::Y0:
        values.emplace_back(MPoly::variable(alpha, gen.j));
        break;
      case Generator::Kind::K:
        values.push_back(table.at(gen.i, gen.j));
        break;
    }
  }
  const RatFunc num = substitute_rational(g.rational().num(), values, alpha);
  const RatFunc den = substitute_rational(g.rational().den(), values, alpha);
  if (den.is_zero()) throw DivisionByZero("the invariant's denominator vanishes identically on this curve");
  return num / den;
}

ConsistencyReport consistency_check(const CurveIdeal& ideal, const Parametrization& gamma, unsigned i_max,
                                    std::uint32_t order) {
  if (gamma.n() != ideal.n()) throw InputError("parametrization and ideal live in different dimensions");
  const Parametrization g = order < gamma.order() ? gamma.truncate(order) : gamma;
  ConsistencyReport report;
  for (const auto& f : ideal.generators()) report.residuals.push_back(eval_along(f, g).valuation());
  const ImplicitCurvatureTable table = implicit_kappa(ideal, i_max);
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned j = 1; j <= ideal.n(); ++j) {
      const TruncSeries parametric = kappa_series(g, i, j);
      const TruncSeries implicit = eval_along(table.at(i, j), g);
      ConsistencyEntry e{i, j, std::min(parametric.order(), implicit.order()), first_difference(parametric, implicit)};
      if (e.first_disagreement) report.consistent = false;
      report.entries.push_back(e);
    }
  }
  return report;
}

std::vector<PointValue> kappa_at_point(const CurveIdeal& ideal, std::span<const Rational> point, unsigned i_max) {
  if (!ideal.contains(point)) throw PointNotOnCurve("point " + point_string(point) + " is not on the curve");
  const CurveIdeal local = ideal.translated(point);
  const std::vector<Rational> origin(ideal.n() + 1, Rational(0));
  const CurveIdeal chart = select_rows(local, origin);
  const ImplicitCurvatureTable table = implicit_kappa(chart, i_max);
  std::vector<PointValue> out;
  for (unsigned i = 0; i <= i_max; ++i) {
    for (unsigned j = 1; j <= ideal.n(); ++j) {
      PointValue v{i, j, PointValue::Status::Finite, Rational(0)};
      try {
        v.value = table.at(i, j).eval(origin);
      } catch (const PoleError&) {
        v.status = PointValue::Status::Pole;
      } catch (const IndeterminateError&) {
        v.status = PointValue::Status::Indeterminate;
      }
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace algcurv
