#include "linsup/kernels.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linsup::kernels {

namespace {

// Below this many multiply-adds the fork/join cost dominates.
constexpr std::size_t kParallelWork = 1 << 15;

double row_violation_term(std::span<const double> a, double b, double norm_sq, std::span<const double> x) {
    const double d = std::max(dot(a, x) - b, 0.0);
    return d * d / norm_sq;
}

double nonnegativity_sum(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        const double d = std::max(-v, 0.0);
        s += d * d;
    }
    return s;
}

double combine(double row_sum, double neg_sum, std::size_t I, std::size_t J) {
    return row_sum / (2.0 * static_cast<double>(I)) + neg_sum / (2.0 * static_cast<double>(J));
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) s += a[j] * b[j];
    return s;
}

Vector row_norms_sq(const DenseMatrix& A) {
    Vector out(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const auto r = A.row(i);
        out[i] = dot(r, r);
    }
    return out;
}

namespace serial {

void matvec(const DenseMatrix& A, std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < A.rows(); ++i) out[i] = dot(A.row(i), x);
}

double proximity(const DenseMatrix& A, std::span<const double> b, std::span<const double> norm_sq,
                 std::span<const double> x) {
    double row_sum = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i) row_sum += row_violation_term(A.row(i), b[i], norm_sq[i], x);
    return combine(row_sum, nonnegativity_sum(x), A.rows(), A.cols());
}

void eliminate(std::span<double> tableau, std::size_t cols, std::size_t pivot_row, std::size_t pivot_col) {
    const std::size_t rows = tableau.size() / cols;
    double* prow = tableau.data() + pivot_row * cols;
    const double inv = 1.0 / prow[pivot_col];
    for (std::size_t j = 0; j < cols; ++j) prow[j] *= inv;
    prow[pivot_col] = 1.0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row) continue;
        double* row = tableau.data() + r * cols;
        const double f = row[pivot_col];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < cols; ++j) row[j] -= f * prow[j];
        row[pivot_col] = 0.0;
    }
}

}  // namespace serial

namespace parallel {

void matvec(const DenseMatrix& A, std::span<const double> x, std::span<double> out) {
    const auto rows = static_cast<std::int64_t>(A.rows());
    const bool go = A.rows() * A.cols() >= kParallelWork;
#pragma omp parallel for schedule(static) if (go)
    for (std::int64_t i = 0; i < rows; ++i) out[i] = dot(A.row(i), x);
}

double proximity(const DenseMatrix& A, std::span<const double> b, std::span<const double> norm_sq,
                 std::span<const double> x) {
    const auto rows = static_cast<std::int64_t>(A.rows());
    std::vector<double> terms(A.rows());
    const bool go = A.rows() * A.cols() >= kParallelWork;
#pragma omp parallel for schedule(static) if (go)
    for (std::int64_t i = 0; i < rows; ++i) terms[i] = row_violation_term(A.row(i), b[i], norm_sq[i], x);

    // Row-order reduction keeps the result identical to the serial kernel.
    double row_sum = 0.0;
    for (double t : terms) row_sum += t;
    return combine(row_sum, nonnegativity_sum(x), A.rows(), A.cols());
}

void eliminate(std::span<double> tableau, std::size_t cols, std::size_t pivot_row, std::size_t pivot_col) {
    const auto rows = static_cast<std::int64_t>(tableau.size() / cols);
    double* prow = tableau.data() + pivot_row * cols;
    const double inv = 1.0 / prow[pivot_col];
    for (std::size_t j = 0; j < cols; ++j) prow[j] *= inv;
    prow[pivot_col] = 1.0;
    const auto p = static_cast<std::int64_t>(pivot_row);
    const bool go = tableau.size() >= kParallelWork;
#pragma omp parallel for schedule(static) if (go)
    for (std::int64_t r = 0; r < rows; ++r) {
        if (r == p) continue;
        double* row = tableau.data() + r * cols;
        const double f = row[pivot_col];
        if (f == 0.0) continue;
        for (std::size_t j = 0; j < cols; ++j) row[j] -= f * prow[j];
        row[pivot_col] = 0.0;
    }
}

}  // namespace parallel

}  // namespace linsup::kernels
