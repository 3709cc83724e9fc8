#include "linsup/feasibility.hpp"

#include <algorithm>

#include "linsup/kernels.hpp"
#include "linsup/metrics.hpp"
#include "linsup/problem_gen.hpp"
#include "trace_recorder.hpp"

namespace linsup {

HalfspaceView HalfspaceView::of(std::span<const double> a, double b) { return {a, b, kernels::dot(a, a)}; }

void project_halfspace_in_place(std::span<double> z, const HalfspaceView& h, double lambda) {
    const double excess = kernels::dot(h.a, z) - h.b;
    if (!(excess > 0.0)) return;
    const double step = lambda * excess / h.norm_sq;
    const std::size_t n = z.size();
    for (std::size_t j = 0; j < n; ++j) z[j] -= step * h.a[j];
}

Vector project_halfspace(std::span<const double> z, const HalfspaceView& h, double lambda) {
    Vector out(z.begin(), z.end());
    project_halfspace_in_place(out, h, lambda);
    return out;
}

void clamp_nonnegative_in_place(std::span<double> x) {
    for (double& v : x) v = std::max(v, 0.0);
}

Vector clamp_nonnegative(Vector x) {
    clamp_nonnegative_in_place(x);
    return x;
}

AmsOperator::AmsOperator(const Problem& problem, double lambda)
    : problem_(problem), norms_sq_(kernels::row_norms_sq(problem.A)), lambda_(lambda) {}

HalfspaceView AmsOperator::halfspace(std::size_t i) const {
    return {problem_.A.row(i), problem_.b[i], norms_sq_[i]};
}

void AmsOperator::apply(std::span<double> y) const {
    for (std::size_t i = 0; i < problem_.rows(); ++i) project_halfspace_in_place(y, halfspace(i), lambda_);
    clamp_nonnegative_in_place(y);
}

Vector ams_sweep(std::span<const double> y, const Problem& problem, double lambda) {
    Vector out(y.begin(), y.end());
    AmsOperator(problem, lambda).apply(out);
    return out;
}

RunReport seek_feasible(const Problem& problem, const SolverConfig& config) {
    config.validate();
    RunReport report;
    detail::TraceRecorder recorder(problem, report.trace);

    CounterRng init_rng(config.seed, RngStream::Initialization);
    Vector y = initial_point(problem, config.init, init_rng);
    const AmsOperator ams(problem, config.lambda);
    const auto& norms = ams.row_norms_sq();

    double prox = proximity(problem, norms, y);
    recorder.sample(0, 0, y, prox);

    Vector previous;
    std::size_t k = 0;
    while (true) {
        if (prox <= config.prox_epsilon) {
            report.stop_reason = StopReason::ProxBelowEpsilon;
            break;
        }
        if (k > 0 && config.iterate_change_epsilon &&
            detail::relative_change(y, previous) <= *config.iterate_change_epsilon) {
            report.stop_reason = StopReason::IterateChangeBelowEpsilon;
            break;
        }
        if (k >= config.max_sweeps) {
            report.stop_reason = StopReason::MaxSweeps;
            break;
        }
        if (config.iterate_change_epsilon) previous = y;
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
