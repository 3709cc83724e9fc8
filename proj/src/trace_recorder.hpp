#pragma once

#include <chrono>
#include <cmath>
#include <span>
#include <vector>

#include "linsup/core.hpp"
#include "linsup/kernels.hpp"
#include "linsup/metrics.hpp"

namespace linsup::detail {

// Appends trace samples; phi evaluation is charged to instrumentation time.
class TraceRecorder {
public:
    using Clock = std::chrono::steady_clock;

    TraceRecorder(const Problem& problem, std::vector<TraceSample>& out)
        : problem_(problem), out_(out), start_(Clock::now()) {}

    void sample(std::size_t sweep, std::size_t k, std::span<const double> y, double prox) {
        const auto t0 = Clock::now();
        const double phi = target_value(problem_, y);
        const auto t1 = Clock::now();
        instrumentation_ += seconds(t1 - t0);
        out_.push_back({sweep, k, seconds(t1 - start_), instrumentation_, prox, phi});
    }

    // Wrap work that is not part of the algorithm being timed.
    template <typename F>
    auto instrument(F&& f) {
        const auto t0 = Clock::now();
        auto result = f();
        instrumentation_ += seconds(Clock::now() - t0);
        return result;
    }

private:
    static double seconds(Clock::duration d) { return std::chrono::duration<double>(d).count(); }

    const Problem& problem_;
    std::vector<TraceSample>& out_;
    Clock::time_point start_;
    double instrumentation_ = 0.0;
};

// ||y_next - y|| / ||y||, with 0/0 = 0 and x/0 = inf.
inline double relative_change(std::span<const double> y_next, std::span<const double> y) {
    double diff = 0.0;
    double base = 0.0;
    for (std::size_t j = 0; j < y.size(); ++j) {
        const double d = y_next[j] - y[j];
        diff += d * d;
        base += y[j] * y[j];
    }
    if (base == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
    return std::sqrt(diff / base);
}

}  // namespace linsup::detail
