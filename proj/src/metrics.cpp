#include "linsup/metrics.hpp"

#include <cmath>

#include "linsup/kernels.hpp"

namespace linsup {

double proximity(const Problem& problem, std::span<const double> x) {
    const Vector norms = kernels::row_norms_sq(problem.A);
    return proximity(problem, norms, x);
}

double proximity(const Problem& problem, std::span<const double> row_norms_sq, std::span<const double> x) {
    return kernels::parallel::proximity(problem.A, problem.b, row_norms_sq, x);
}

double target_value(const Problem& problem, std::span<const double> x) { return kernels::dot(problem.c, x); }

double relative_error(double phi_linsup, double phi_simplex) {
    if (phi_simplex == 0.0) {
        throw Error(ErrorCode::DivisionByZeroObjective, "reference objective is zero");
    }
    return std::abs(phi_linsup - phi_simplex) / std::abs(phi_simplex);
}

double time_ratio(double t_linsup, double t_simplex) {
    if (!(t_simplex > 0.0)) {
        throw Error(ErrorCode::NonPositiveDenominator, "reference time must be positive");
    }
    return t_linsup / t_simplex;
}

ComparisonStats compare(double phi_linsup, double phi_simplex, double t_linsup, double t_simplex) {
    return {phi_linsup, phi_simplex, relative_error(phi_linsup, phi_simplex),
            t_linsup,   t_simplex,   time_ratio(t_linsup, t_simplex)};
}

}  // namespace linsup
