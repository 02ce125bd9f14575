#pragma once

#include <cstddef>
#include <vector>

#include "algcurv/rational.hpp"

namespace algcurv {

// Dense row-major matrix over Q, just enough for rank and kernel work.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan elimination with first-nonzero pivoting, so the result is
// deterministic.
RowEchelon row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);

// One basis vector per free column, in increasing column order.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

Rational determinant(RatMatrix m);

// Scales a nonzero vector to coprime integers whose first nonzero entry is positive.
std::vector<Rational> clear_to_integers(std::vector<Rational> v);

}  // namespace algcurv
