#include "linsup/simplex.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "linsup/kernels.hpp"
#include "linsup/metrics.hpp"

namespace linsup {

const char* to_string(SimplexStatus status) {
    switch (status) {
        case SimplexStatus::Optimal: return "Optimal";
        case SimplexStatus::Unbounded: return "Unbounded";
        case SimplexStatus::Infeasible: return "Infeasible";
        case SimplexStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Row-major tableau: I constraint rows, then the phase-2 cost row, then (when
// artificials exist) the phase-1 cost row.  Last column is the right-hand side.
// Cost rows hold reduced costs and -objective in the rhs column.
class Tableau {
public:
    explicit Tableau(const Problem& p) : I_(p.rows()), J_(p.cols()) {
        for (double bi : p.b) {
            if (bi < 0.0) ++artificials_;
        }
        vars_ = J_ + I_ + artificials_;
        cols_ = vars_ + 1;
        const std::size_t cost_rows = artificials_ ? 2 : 1;
        data_.assign((I_ + cost_rows) * cols_, 0.0);
        basis_.resize(I_);

        std::size_t art = 0;
        for (std::size_t i = 0; i < I_; ++i) {
            const double sign = p.b[i] < 0.0 ? -1.0 : 1.0;
            double* row = row_ptr(i);
            for (std::size_t j = 0; j < J_; ++j) row[j] = sign * p.A(i, j);
            row[J_ + i] = sign;
            row[vars_] = sign * p.b[i];
            if (sign < 0.0) {
                const std::size_t a = J_ + I_ + art++;
                row[a] = 1.0;
                basis_[i] = a;
            } else {
                basis_[i] = J_ + i;
            }
        }

        double* cost = row_ptr(I_);
        for (std::size_t j = 0; j < J_; ++j) cost[j] = p.c[j];

        if (artificials_) {
            // Phase-1 reduced costs: 1 on artificials minus the rows they are basic in.
            double* w = row_ptr(I_ + 1);
            for (std::size_t a = J_ + I_; a < vars_; ++a) w[a] = 1.0;
            for (std::size_t i = 0; i < I_; ++i) {
                if (!is_artificial(basis_[i])) continue;
                const double* row = row_ptr(i);
                for (std::size_t j = 0; j < cols_; ++j) w[j] -= row[j];
            }
        }
    }

    std::size_t rows() const noexcept { return I_; }
    std::size_t vars() const noexcept { return vars_; }
    std::size_t structural() const noexcept { return J_; }
    bool has_phase1() const noexcept { return artificials_ > 0; }
    bool is_artificial(std::size_t j) const noexcept { return j >= J_ + I_; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    double at(std::size_t r, std::size_t j) const { return data_[r * cols_ + j]; }
    double rhs(std::size_t r) const { return data_[r * cols_ + vars_]; }

    const double* cost_row(int phase) const { return row_ptr(phase == 1 ? I_ + 1 : I_); }

    std::size_t basic(std::size_t r) const { return basis_[r]; }

    void pivot(std::size_t r, std::size_t q, bool parallel) {
        if (parallel) {
            kernels::parallel::eliminate(data_, cols_, r, q);
        } else {
            kernels::serial::eliminate(data_, cols_, r, q);
        }
        basis_[r] = q;
    }

    Vector structural_point() const {
        Vector x(J_, 0.0);
        for (std::size_t r = 0; r < I_; ++r) {
            if (basis_[r] < J_) x[basis_[r]] = rhs(r);
        }
        return x;
    }

    bool finite() const {
        return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
    }

private:
    std::size_t I_;
    std::size_t J_;
    std::size_t artificials_ = 0;
    std::size_t vars_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
    std::vector<std::size_t> basis_;
};

enum class StepOutcome { Pivoted, Optimal, Unbounded };

class SimplexDriver {
public:
    SimplexDriver(const Problem& problem, const SimplexOptions& options)
        : problem_(problem),
          options_(options),
          tableau_(problem),
          norms_(kernels::row_norms_sq(problem.A)),
          start_(Clock::now()) {
        max_pivots_ = options.max_pivots
                          ? options.max_pivots
                          : std::max<std::size_t>(100000, 50 * (problem.rows() + tableau_.vars()));
    }

    SimplexResult run() {
        SimplexResult result;
        record(result, tableau_.has_phase1() ? 1 : 2);

        if (tableau_.has_phase1()) {
            if (!iterate(1, result)) return finish(result, SimplexStatus::BudgetExhausted, 1);
            double max_b = 0.0;
            for (double bi : problem_.b) max_b = std::max(max_b, std::abs(bi));
            const double infeasibility = -tableau_.rhs(tableau_.rows() + 1);
            if (infeasibility > 1e-9 * (1.0 + max_b)) return finish(result, SimplexStatus::Infeasible, 1);
            drive_out_artificials(result);
        }

        if (!iterate(2, result)) return finish(result, SimplexStatus::BudgetExhausted, 2);
        return finish(result, unbounded_ ? SimplexStatus::Unbounded : SimplexStatus::Optimal, 2);
    }

private:
    // Pivots until the phase ends; false when the budget ran out first.
    bool iterate(int phase, SimplexResult& result) {
        while (true) {
            if (net_seconds() > options_.budget_s) return false;
            const StepOutcome outcome = step(phase, result);
            if (outcome == StepOutcome::Optimal) return true;
            if (outcome == StepOutcome::Unbounded) {
                unbounded_ = true;
                return true;
            }
            if (options_.sample_every && result.pivots % options_.sample_every == 0) record(result, phase);
        }
    }

    StepOutcome step(int phase, SimplexResult& result) {
        const double* cost = tableau_.cost_row(phase);
        const std::size_t vars = tableau_.vars();

        std::size_t q = vars;
        for (std::size_t j = 0; j < vars; ++j) {
            if (phase == 2 && tableau_.is_artificial(j)) continue;
            if (cost[j] < -kOptimalityTol) {
                q = j;
                break;
            }
        }
        if (q == vars) return StepOutcome::Optimal;

        std::size_t leave = tableau_.rows();
        double best_ratio = 0.0;
        double largest_small = 0.0;
        for (std::size_t r = 0; r < tableau_.rows(); ++r) {
            const double entry = tableau_.at(r, q);
            if (!(entry > kPivotTol)) {
                if (entry > largest_small) largest_small = entry;
                continue;
            }
            const double ratio = std::max(tableau_.rhs(r), 0.0) / entry;
            if (leave == tableau_.rows()) {
                leave = r;
                best_ratio = ratio;
                continue;
            }
            const double tie = 1e-12 * std::max(1.0, best_ratio);
            if (ratio < best_ratio - tie ||
                (ratio <= best_ratio + tie && tableau_.basic(r) < tableau_.basic(leave))) {
                leave = r;
                best_ratio = std::min(ratio, best_ratio);
            }
        }
        if (leave == tableau_.rows()) {
            if (largest_small > kBreakdownPivot) {
                throw Error(ErrorCode::NumericalBreakdown, "entering column has only tiny positive entries");
            }
            return StepOutcome::Unbounded;
        }

        pivot(leave, q, result);
        return StepOutcome::Pivoted;
    }

    void pivot(std::size_t r, std::size_t q, SimplexResult& result) {
        if (std::abs(tableau_.at(r, q)) < kBreakdownPivot) {
            throw Error(ErrorCode::NumericalBreakdown, "pivot element below breakdown threshold");
        }
        tableau_.pivot(r, q, options_.parallel);
        if (++result.pivots > max_pivots_) {
            throw Error(ErrorCode::NumericalBreakdown,
                        "pivot cap of " + std::to_string(max_pivots_) + " exceeded");
        }
        if (result.pivots % 256 == 0 && !tableau_.finite()) {
            throw Error(ErrorCode::NumericalBreakdown, "tableau became non-finite");
        }
    }

    // Artificial variables left basic at level zero are swapped for any
    // non-artificial column with a usable entry; rows with none are redundant.
    void drive_out_artificials(SimplexResult& result) {
        for (std::size_t r = 0; r < tableau_.rows(); ++r) {
            if (!tableau_.is_artificial(tableau_.basic(r))) continue;
            for (std::size_t j = 0; j < tableau_.vars(); ++j) {
                if (tableau_.is_artificial(j)) continue;
                if (std::abs(tableau_.at(r, j)) > kPivotTol) {
                    pivot(r, j, result);
                    break;
                }
            }
        }
    }

    double net_seconds() const { return seconds_since(start_) - instrumentation_; }

    void record(SimplexResult& result, int phase) {
        const auto t0 = Clock::now();
        const Vector x = tableau_.structural_point();
        const double prox = proximity(problem_, norms_, x);
        const double phi = target_value(problem_, x);
        instrumentation_ += seconds_since(t0);
        TraceSample s;
        s.sweep = result.trace.size();
        s.k = result.pivots;
        s.elapsed_s = seconds_since(start_);
        s.instrumentation_s = instrumentation_;
        s.prox = prox;
        s.phi = phi;
        result.trace.push_back({s, phase});
    }

    SimplexResult& finish(SimplexResult& result, SimplexStatus status, int phase) {
        if (!tableau_.finite()) throw Error(ErrorCode::NumericalBreakdown, "tableau became non-finite");
        result.status = status;
        result.x = tableau_.structural_point();
        result.objective = target_value(problem_, result.x);
        if (result.trace.empty() || result.trace.back().sample.k != result.pivots) record(result, phase);
        result.net_seconds = net_seconds();
        return result;
    }

    const Problem& problem_;
    SimplexOptions options_;
    Tableau tableau_;
    Vector norms_;
    Clock::time_point start_;
    double instrumentation_ = 0.0;
    std::size_t max_pivots_ = 0;
    bool unbounded_ = false;
};

}  // namespace

SimplexResult solve(const Problem& problem, const SimplexOptions& options) {
    validate(problem);
    SimplexDriver driver(problem, options);
    return driver.run();
}

SimplexResult solve_budgeted(const Problem& problem, double budget_s, std::size_t sample_every) {
    if (!(budget_s > 0.0)) throw Error(ErrorCode::InvalidConfig, "budget must be positive");
    SimplexOptions options;
    options.budget_s = budget_s;
    options.sample_every = sample_every;
    return solve(problem, options);
}

}  // namespace linsup
