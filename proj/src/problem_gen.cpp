#include "linsup/problem_gen.hpp"

#include <cmath>

#include "linsup/metrics.hpp"

namespace linsup {

void GenSpec::validate() const {
    auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
    if (rows == 0 || cols == 0) bad("generator needs positive dimensions");
    if (!(a_range.lo < a_range.hi)) bad("a_range must be a nonempty interval");
    if (!(c_range.lo < c_range.hi)) bad("c_range must be a nonempty interval");
    if (!(slack > 0.0)) bad("slack must be positive");
}

Problem generate(const GenSpec& spec) {
    spec.validate();
    CounterRng rng(spec.seed, RngStream::Generator);

    Problem p;
    p.A = DenseMatrix(spec.rows, spec.cols);
    for (double& a : p.A.data()) a = rng.uniform(spec.a_range.lo, spec.a_range.hi);

    p.c.assign(spec.cols, 0.0);
    double c_norm_sq = 0.0;
    do {
        c_norm_sq = 0.0;
        for (double& c : p.c) {
            c = rng.uniform(spec.c_range.lo, spec.c_range.hi);
            c_norm_sq += c * c;
        }
    } while (c_norm_sq == 0.0);

    p.b.resize(spec.rows);
    for (std::size_t i = 0; i < spec.rows; ++i) {
        double row_sum = 0.0;
        for (double a : p.A.row(i)) row_sum += a;
        p.b[i] = row_sum + spec.slack;
    }

    // A row can only vanish if every draw hits exactly 0; validate anyway.
    validate(p);
    return p;
}

Vector initial_point(const Problem& problem, const Initialization& init, CounterRng& rng) {
    const std::size_t J = problem.cols();
    switch (init.policy) {
        case InitPolicy::AllTens:
            return Vector(J, 10.0);
        case InitPolicy::Explicit:
            if (init.point.size() != J) {
                throw Error(ErrorCode::DimensionMismatch, "initial point has length " +
                                                              std::to_string(init.point.size()) + ", expected " +
                                                              std::to_string(J));
            }
            return init.point;
        case InitPolicy::RandomEscalated: {
            Vector y(J);
            for (double& v : y) v = rng.uniform01();
            for (int step = 0; step <= kMaxEscalations; ++step) {
                if (proximity(problem, y) > 0.0) return y;
                for (double& v : y) v *= 10.0;
            }
            throw Error(ErrorCode::EscalationFailed,
                        "no infeasible point found after " + std::to_string(kMaxEscalations) + " escalations");
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown initialization policy");
}

}  // namespace linsup
