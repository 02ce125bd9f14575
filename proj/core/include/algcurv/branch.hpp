#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "algcurv/curvature.hpp"
#include "algcurv/series.hpp"

namespace algcurv {

// The branch through a nonsingular point written as graphs over x:
// y_j = base_j + sum_{m>=1} c_{j,m} (x - base_x)^m, in local coordinates
// centred at the base point.
struct BranchSeries {
  std::vector<Rational> base_point;
  std::vector<TruncSeries> graphs;  // local graphs Y_j(X), Y_j(0) = 0
  std::uint32_t order = 0;

  unsigned n() const noexcept { return static_cast<unsigned>(graphs.size()); }
};

// c_{j,i+1} = kappa~_{i,j}(point) / (i+1)!, for i < order. Throws
// CurvaturePole if some kappa~ entry is not finite at the point.
BranchSeries reconstruct(const CurveIdeal& ideal, std::span<const Rational> point, std::uint32_t order);

// Per generator of the ideal translated to the base point: the first power of
// X at which f(X, Y(X)) is nonzero, or nullopt when it vanishes to the order.
std::vector<std::optional<std::size_t>> residual_order(const CurveIdeal& ideal, const BranchSeries& branch);

struct ContactResult {
  // First power where some graph differs; nullopt when identical to the order.
  std::optional<std::size_t> order;
  std::uint32_t compared_order = 0;
};

// Throws BasePointMismatch unless both branches share base point and dimension.
ContactResult contact_order(const BranchSeries& a, const BranchSeries& b);

}  // namespace algcurv
