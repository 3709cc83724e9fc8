#pragma once

// Dense two-phase primal Simplex for
//
//   minimize <c, x>  subject to  Ax <= b,  x >= 0,
//
// used as the reference solver that LinSup is compared against.  Slack
// variables turn the rows into equalities; rows with negative b get an
// artificial variable and phase 1 minimizes their sum.  Both phases use
// Bland's smallest-index rule, so the method cannot cycle.

#include <cstddef>
#include <limits>
#include <vector>

#include "linsup/core.hpp"

namespace linsup {

enum class SimplexStatus { Optimal, Unbounded, Infeasible, BudgetExhausted };

const char* to_string(SimplexStatus status);

struct SimplexSample {
    TraceSample sample;  // k = pivot count; elapsed_s still includes instrumentation
    int phase = 2;
};

struct SimplexResult {
    SimplexStatus status = SimplexStatus::Infeasible;
    Vector x;
    double objective = 0.0;
    std::size_t pivots = 0;
    std::vector<SimplexSample> trace;
    // Wall time of the solve minus instrumentation.
    double net_seconds = 0.0;
};

struct SimplexOptions {
    // Net seconds (instrumentation excluded) before BudgetExhausted.
    double budget_s = std::numeric_limits<double>::infinity();
    // Record a sample every this many pivots; 0 records only start and end.
    std::size_t sample_every = 0;
    // 0 selects a size-dependent default.
    std::size_t max_pivots = 0;
    bool parallel = true;
};

// Reduced costs below -kOptimalityTol make a column eligible to enter.
inline constexpr double kOptimalityTol = 1e-9;
// Ratio-test candidates need a column entry above this.
inline constexpr double kPivotTol = 1e-9;
// Pivots smaller than this are reported as NumericalBreakdown.
inline constexpr double kBreakdownPivot = 1e-11;

SimplexResult solve(const Problem& problem, const SimplexOptions& options = {});

SimplexResult solve_budgeted(const Problem& problem, double budget_s, std::size_t sample_every);

}  // namespace linsup
