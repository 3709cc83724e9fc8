#pragma once

// The measured quantities: proximity to the target set, target value,
// relative error against a reference objective, and time ratio.

#include <span>

#include "linsup/core.hpp"

namespace linsup {

// Normalized violation of Ax <= b (per-row squared distances to each
// half-space) plus the squared negative parts of x.  Zero exactly on M and
// invariant under positive scaling of any row (a^i, b_i).
double proximity(const Problem& problem, std::span<const double> x);

// Same, with precomputed squared row norms.
double proximity(const Problem& problem, std::span<const double> row_norms_sq, std::span<const double> x);

double target_value(const Problem& problem, std::span<const double> x);

// |phi_linsup - phi_reference| / |phi_reference|; throws DivisionByZeroObjective.
double relative_error(double phi_linsup, double phi_simplex);

// t_linsup / t_simplex; throws NonPositiveDenominator.
double time_ratio(double t_linsup, double t_simplex);

struct ComparisonStats {
    double phi_linsup = 0.0;
    double phi_simplex = 0.0;
    double re = 0.0;
    double t_linsup = 0.0;
    double t_simplex = 0.0;
    double tr = 0.0;
};

ComparisonStats compare(double phi_linsup, double phi_simplex, double t_linsup, double t_simplex);

}  // namespace linsup
