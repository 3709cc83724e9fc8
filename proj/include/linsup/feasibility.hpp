#pragma once

// Half-space projections and the cyclic relaxation method of Agmon, Motzkin
// and Schoenberg (AMS), the feasibility-seeking operator used by LinSup.

#include <span>

#include "linsup/core.hpp"

namespace linsup {

// Half-space { x : <a, x> <= b } with its cached squared normal norm.
struct HalfspaceView {
    std::span<const double> a;
    double b = 0.0;
    double norm_sq = 0.0;

    static HalfspaceView of(std::span<const double> a, double b);
};

// Relaxed projection: identity when <a,z> <= b, otherwise
// z - lambda * (<a,z> - b) / |a|^2 * a.  lambda = 1 is the orthogonal projection.
Vector project_halfspace(std::span<const double> z, const HalfspaceView& h, double lambda);
void project_halfspace_in_place(std::span<double> z, const HalfspaceView& h, double lambda);

Vector clamp_nonnegative(Vector x);
void clamp_nonnegative_in_place(std::span<double> x);

// One application of the basic operator: relaxed projections onto rows
// 0..I-1 in order, then a single nonnegativity clamp.  Holds a reference to
// the problem, which must outlive the operator.
class AmsOperator {
public:
    AmsOperator(const Problem& problem, double lambda);

    void apply(std::span<double> y) const;

    HalfspaceView halfspace(std::size_t i) const;
    const Vector& row_norms_sq() const noexcept { return norms_sq_; }
    double lambda() const noexcept { return lambda_; }

private:
    const Problem& problem_;
    Vector norms_sq_;
    double lambda_;
};

Vector ams_sweep(std::span<const double> y, const Problem& problem, double lambda);

// Plain feasibility-seeking: y^{k+1} = ams_sweep(y^k) until the proximity
// drops to config.prox_epsilon (or the iterate-change rule fires, or
// max_sweeps).  config.superiorize is ignored; beta_sum is always 0.
RunReport seek_feasible(const Problem& problem, const SolverConfig& config);

}  // namespace linsup
