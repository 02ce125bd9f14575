#include "algcurv/branch.hpp"

namespace algcurv {

BranchSeries reconstruct(const CurveIdeal& ideal, std::span<const Rational> point, std::uint32_t order) {
  if (order == 0) throw InputError("branch order must be at least 1");
  const auto values = kappa_at_point(ideal, point, order - 1);
  BranchSeries b;
  b.base_point.assign(point.begin(), point.end());
  b.order = order;
  b.graphs.assign(ideal.n(), TruncSeries(order));
  for (const auto& v : values) {
    if (v.status != PointValue::Status::Finite) {
      throw CurvaturePole("kappa~_" + std::to_string(v.i) + (ideal.n() > 1 ? "," + std::to_string(v.j) : "") +
                          " is not finite at the base point");
    }
    b.graphs[v.j - 1].set_coeff(v.i + 1, v.value / factorial(v.i + 1));
  }
  return b;
}

std::vector<std::optional<std::size_t>> residual_order(const CurveIdeal& ideal, const BranchSeries& branch) {
  if (ideal.n() != branch.n()) throw InputError("branch and ideal live in different dimensions");
  const CurveIdeal local = ideal.translated(branch.base_point);
  std::vector<TruncSeries> comps{TruncSeries::variable(branch.order)};
  comps.insert(comps.end(), branch.graphs.begin(), branch.graphs.end());
  const Parametrization gamma(std::move(comps));
  std::vector<std::optional<std::size_t>> out;
  for (const auto& f : local.generators()) out.push_back(eval_along(f, gamma).valuation());
  return out;
}

ContactResult contact_order(const BranchSeries& a, const BranchSeries& b) {
  if (a.base_point != b.base_point || a.n() != b.n())
    throw BasePointMismatch("branches must share the base point and the ambient dimension");
  ContactResult r;
  r.compared_order = std::min(a.order, b.order);
  for (unsigned j = 0; j < a.n(); ++j) {
    const auto d = first_difference(a.graphs[j], b.graphs[j]);
    if (d && (!r.order || *d < *r.order)) r.order = d;
  }
  return r;
}

}  // namespace algcurv
