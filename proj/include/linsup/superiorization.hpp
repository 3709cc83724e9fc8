#pragma once

// Linear superiorization (LinSup): each outer sweep performs N target-reduction
// steps along -c/|c| with summable step sizes alpha^l, then one AMS sweep.
// There is deliberately no comparison of target values inside the inner loop.

#include <cstddef>
#include <functional>
#include <span>

#include "linsup/core.hpp"
#include "linsup/rng.hpp"

namespace linsup {

// Geometric step-size sequence eta_l = alpha^l with a moving power index.
struct StepSchedule {
    double alpha = 0.99;
    std::size_t ell = 0;
};

struct BetaStep {
    double beta;
    StepSchedule next;
};

// beta = alpha^ell, next.ell = ell + 1.
BetaStep next_beta(const StepSchedule& schedule);

// Power index at the start of sweep k: uniform integer on the inclusive range
// between k and the previous sweep's final index (order-normalized).  Returns
// k without consuming a draw when the range is a single point.
std::size_t atl2_reset(std::size_t k, std::size_t ell_prev, CounterRng& rng);

// y - beta * c / |c|_2.  Lowers <c, y> by exactly beta * |c|_2.
Vector perturb(std::span<const double> y, std::span<const double> c, double beta);

bool proximity_stop_check(std::span<const double> y, const Problem& problem, double epsilon);

struct StepEvent {
    std::size_t sweep;
    std::size_t n;
    std::size_t ell;
    double beta;
};

using StepObserver = std::function<void(const StepEvent&)>;

// Runs LinSup from config.init.  With config.superiorize = false the
// perturbation block is skipped and the run is plain feasibility-seeking.
// The stopping rules are evaluated once per outer sweep on the new iterate.
RunReport linsup_run(const Problem& problem, const SolverConfig& config, const StepObserver& observer = {});

}  // namespace linsup
