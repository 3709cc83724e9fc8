#include "linsup/superiorization.hpp"

#include <cmath>

#include "linsup/feasibility.hpp"
#include "linsup/kernels.hpp"
#include "linsup/metrics.hpp"
#include "linsup/problem_gen.hpp"
#include "trace_recorder.hpp"

namespace linsup {

BetaStep next_beta(const StepSchedule& schedule) {
    return {std::pow(schedule.alpha, static_cast<double>(schedule.ell)), {schedule.alpha, schedule.ell + 1}};
}

std::size_t atl2_reset(std::size_t k, std::size_t ell_prev, CounterRng& rng) {
    if (k == ell_prev) return k;
    return static_cast<std::size_t>(rng.uniform_int(k, ell_prev));
}

namespace {

Vector unit_direction(std::span<const double> c) {
    const double norm = std::sqrt(kernels::dot(c, c));
    Vector u(c.size());
    for (std::size_t j = 0; j < c.size(); ++j) u[j] = c[j] / norm;
    return u;
}

void step_against(std::span<double> y, std::span<const double> unit, double beta) {
    const std::size_t n = y.size();
    for (std::size_t j = 0; j < n; ++j) y[j] -= beta * unit[j];
}

}  // namespace

Vector perturb(std::span<const double> y, std::span<const double> c, double beta) {
    Vector out(y.begin(), y.end());
    step_against(out, unit_direction(c), beta);
    return out;
}

bool proximity_stop_check(std::span<const double> y, const Problem& problem, double epsilon) {
    return proximity(problem, y) <= epsilon;
}

RunReport linsup_run(const Problem& problem, const SolverConfig& config, const StepObserver& observer) {
    config.validate();
    RunReport report;
    detail::TraceRecorder recorder(problem, report.trace);

    CounterRng init_rng(config.seed, RngStream::Initialization);
    CounterRng ell_rng(config.seed, RngStream::EllReset);
    Vector y = initial_point(problem, config.init, init_rng);

    const AmsOperator ams(problem, config.lambda);
    const auto& norms = ams.row_norms_sq();
    const Vector unit = unit_direction(problem.c);

    double prox = proximity(problem, norms, y);
    recorder.sample(0, 0, y, prox);

    Vector sweep_start;
    std::size_t k = 0;
    std::size_t ell_prev = 0;
    while (true) {
        if (prox <= config.prox_epsilon) {
            report.stop_reason = StopReason::ProxBelowEpsilon;
            break;
        }
        if (k > 0 && config.iterate_change_epsilon &&
            detail::relative_change(y, sweep_start) <= *config.iterate_change_epsilon) {
            report.stop_reason = StopReason::IterateChangeBelowEpsilon;
            break;
        }
        if (k >= config.max_sweeps) {
            report.stop_reason = StopReason::MaxSweeps;
            break;
        }
        if (config.iterate_change_epsilon) sweep_start = y;

        if (config.superiorize) {
            const std::size_t inner = config.inner_steps_at(k);
            if (inner < 1) throw Error(ErrorCode::InvalidConfig, "inner step schedule returned 0");
            StepSchedule schedule{config.alpha, atl2_reset(k, ell_prev, ell_rng)};
            const std::size_t ell_start = schedule.ell;
            for (std::size_t n = 0; n < inner; ++n) {
                const auto [beta, next] = next_beta(schedule);
                if (observer) observer({k, n, schedule.ell, beta});
                step_against(y, unit, beta);
                report.beta_sum += beta;
                schedule = next;
            }
            ell_prev = schedule.ell;
            report.ell_log.push_back({ell_start, ell_prev});
        }

        ams.apply(y);
        ++k;
        prox = proximity(problem, norms, y);
        recorder.sample(k, k, y, prox);
    }

    report.sweeps = k;
    report.final_point = std::move(y);
    return report;
}

}  // namespace linsup
