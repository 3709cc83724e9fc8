#pragma once

// Dense data-parallel kernels.
//
// Every kernel exists twice: a serial reference in kernels::serial and an
// OpenMP version in kernels::parallel.  The parallel versions only distribute
// independent per-row work and reduce in row order afterwards, so both
// variants return bit-identical results; tests compare them exactly.

#include <cstddef>
#include <span>

#include "linsup/core.hpp"

namespace linsup::kernels {

int max_threads();

double dot(std::span<const double> a, std::span<const double> b);

// Sum of squares of each row of A.
Vector row_norms_sq(const DenseMatrix& A);

namespace serial {

void matvec(const DenseMatrix& A, std::span<const double> x, std::span<double> out);

// (1/2I) sum_i ((<a^i,x> - b_i)_+)^2 / norm_sq_i  +  (1/2J) sum_j ((-x_j)_+)^2
double proximity(const DenseMatrix& A, std::span<const double> b, std::span<const double> norm_sq,
                 std::span<const double> x);

// Gauss-Jordan elimination step on a row-major tableau with `cols` columns:
// scales the pivot row so the pivot becomes 1 and clears column `pivot_col`
// from every other row.
void eliminate(std::span<double> tableau, std::size_t cols, std::size_t pivot_row, std::size_t pivot_col);

}  // namespace serial

namespace parallel {

void matvec(const DenseMatrix& A, std::span<const double> x, std::span<double> out);

double proximity(const DenseMatrix& A, std::span<const double> b, std::span<const double> norm_sq,
                 std::span<const double> x);

void eliminate(std::span<double> tableau, std::size_t cols, std::size_t pivot_row, std::size_t pivot_col);

}  // namespace parallel

}  // namespace linsup::kernels
