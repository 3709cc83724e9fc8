// End-to-end acceptance checks.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.  Thresholds here are fixed targets;
// a red line is a finding, not something to tune away.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "linsup/feasibility.hpp"
#include "linsup/harness.hpp"
#include "linsup/kernels.hpp"
#include "linsup/metrics.hpp"
#include "linsup/problem_gen.hpp"
#include "linsup/simplex.hpp"
#include "linsup/superiorization.hpp"
#include "support/vertex_oracle.hpp"

using namespace linsup;

namespace {

constexpr std::uint64_t kMasterSeed = 20240611;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const Outcome& o, double seconds) {
    std::printf("[%s] criterion %2d  %-34s (%.1fs)  %s\n", o.pass ? "PASS" : "FAIL", id, title, seconds,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

struct Timed {
    Outcome outcome;
    double seconds = 0.0;
};

template <typename F>
Timed evaluate(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    return {o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
}

template <typename F>
void run_criterion(int id, const char* title, F&& body) {
    const Timed t = evaluate(std::forward<F>(body));
    report(id, title, t.outcome, t.seconds);
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

// Collects step-law violations from every observed LinSup run.
class StepLawAudit {
public:
    std::function<void(const RunContext&, const StepEvent&)> observer() {
        return [this](const RunContext& ctx, const StepEvent& e) {
            const double expected = std::pow(ctx.alpha, static_cast<double>(e.ell));
            const double cap = std::pow(ctx.alpha, static_cast<double>(e.sweep));
            ++events_;
            if (e.beta != expected || e.beta > cap || !(e.beta > 0.0)) {
                std::lock_guard lock(mutex_);
                if (violations_++ == 0) {
                    first_ = fmt("beta=%.17g expected=%.17g cap=%.17g", e.beta, expected, cap);
                }
            }
        };
    }

    void check_sums(const ExperimentReport& r) {
        for (const auto& row : r.raw) {
            if (row.arm != "linsup") continue;
            ++runs_;
            const double bound = static_cast<double>(row.inner_steps) / (1.0 - row.alpha);
            if (row.beta_sum > bound) {
                std::lock_guard lock(mutex_);
                if (violations_++ == 0) first_ = fmt("beta_sum=%.17g bound=%.17g", row.beta_sum, bound);
            }
        }
    }

    Outcome outcome() const {
        std::ostringstream s;
        s << events_.load() << " steps over " << runs_ << " runs, " << violations_ << " violations";
        if (violations_) s << "; first: " << first_;
        return {violations_ == 0 && events_ > 0, s.str()};
    }

private:
    std::mutex mutex_;
    std::atomic<std::size_t> events_{0};
    std::size_t runs_ = 0;
    std::size_t violations_ = 0;
    std::string first_;
};

int worker_count() { return std::max(1, kernels::max_threads()); }

ExperimentSpec claim1_spec() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Task1;
    spec.sizes = {{80, 100}, {200, 250}};
    spec.reps = 10;
    spec.alphas = {0.99};
    spec.base_config.alpha = 0.99;
    spec.base_config.inner_steps = 30;
    spec.base_config.lambda = 1.0;
    spec.base_config.prox_epsilon = 1e-10;
    spec.base_config.init = Initialization::all_tens();
    spec.seed = kMasterSeed;
    spec.workers = worker_count();
    return spec;
}

Outcome claim1(const ExperimentReport& r) {
    Outcome o;
    std::ostringstream s;
    for (const auto& sum : r.summary) {
        if (sum.arm != "linsup") continue;
        const auto wins = static_cast<std::size_t>(std::lround(sum.claim_fraction * sum.count));
        s << sum.size.rows << "x" << sum.size.cols << ": " << wins << "/" << sum.count << "  ";
        if (wins * 10 < 9 * sum.count) o.pass = false;
        if (sum.flagged) {
            o.pass = false;
            s << "(" << sum.flagged << " hit max_sweeps) ";
        }
    }
    o.detail = s.str();
    return o;
}

// Random (z, half-space) pairs in dimensions 1..8.
Outcome projection_oracle() {
    CounterRng rng(kMasterSeed, RngStream::Instance);
    std::size_t bad_member = 0, bad_idem = 0, bad_min = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dim = 1 + rng.uniform_int(0, 7);
        Vector a(dim), z(dim);
        double norm_sq = 0.0;
        while (norm_sq == 0.0) {
            for (double& v : a) v = rng.uniform(-2.0, 2.0);
            norm_sq = kernels::dot(a, a);
        }
        const double b = rng.uniform(-5.0, 5.0);
        for (double& v : z) v = rng.uniform(-10.0, 10.0);
        const auto h = HalfspaceView::of(a, b);
        const Vector p = project_halfspace(z, h, 1.0);

        if (kernels::dot(a, p) > b + 1e-12 * (1.0 + std::abs(b))) ++bad_member;
        const Vector pp = project_halfspace(p, h, 1.0);
        for (std::size_t j = 0; j < dim; ++j) {
            if (std::abs(pp[j] - p[j]) > 1e-12) {
                ++bad_idem;
                break;
            }
        }
        double dp = 0.0;
        for (std::size_t j = 0; j < dim; ++j) dp += (z[j] - p[j]) * (z[j] - p[j]);
        dp = std::sqrt(dp);
        for (int s = 0; s < 100; ++s) {
            Vector w(dim);
            for (std::size_t j = 0; j < dim; ++j) w[j] = p[j] + rng.uniform(-2.0, 2.0);
            if (kernels::dot(a, w) > b) continue;
            double dw = 0.0;
            for (std::size_t j = 0; j < dim; ++j) dw += (z[j] - w[j]) * (z[j] - w[j]);
            if (std::sqrt(dw) + 1e-9 < dp) {
                ++bad_min;
                break;
            }
        }
    }
    std::ostringstream s;
    s << "1000 pairs; membership " << bad_member << ", idempotence " << bad_idem << ", minimality " << bad_min
      << " failures";
    return {bad_member + bad_idem + bad_min == 0, s.str()};
}

Outcome simplex_oracle() {
    CounterRng rng(kMasterSeed, RngStream::Instance);
    std::size_t mismatches = 0, optimal = 0, unbounded = 0, other = 0;
    double worst = 0.0;
    std::string first;
    for (int t = 0; t < 200; ++t) {
        GenSpec gen;
        gen.rows = 1 + rng.uniform_int(0, 7);
        gen.cols = 1 + rng.uniform_int(0, 5);
        gen.seed = rng.next_u64();
        const Problem p = generate(gen);
        const auto oracle = testing::vertex_enumeration_oracle(p);
        const auto got = solve(p);
        bool ok = got.status == oracle.status;
        if (ok && got.status == SimplexStatus::Optimal) {
            const double diff = std::abs(got.objective - oracle.objective);
            worst = std::max(worst, diff);
            ok = diff <= 1e-8;
        }
        if (!ok && mismatches++ == 0) {
            first = std::string(" first mismatch at trial ") + std::to_string(t) + ": " + to_string(got.status) +
                    " vs " + to_string(oracle.status);
        }
        if (oracle.status == SimplexStatus::Optimal) ++optimal;
        else if (oracle.status == SimplexStatus::Unbounded) ++unbounded;
        else ++other;
    }
    std::ostringstream s;
    s << "200 instances (" << optimal << " optimal, " << unbounded << " unbounded, " << other << " other), "
      << mismatches << " mismatches, worst |diff| " << worst << first;
    return {mismatches == 0, s.str()};
}

Outcome proximity_identities() {
    CounterRng rng(kMasterSeed, RngStream::Instance);
    std::size_t nonzero = 0, scaling = 0;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        GenSpec gen;
        gen.rows = 1 + rng.uniform_int(0, 199);
        gen.cols = 1 + rng.uniform_int(0, 249);
        gen.seed = rng.next_u64();
        const Problem p = generate(gen);
        if (proximity(p, Vector(p.cols(), 1.0)) != 0.0) ++nonzero;

        Vector x(p.cols());
        for (double& v : x) v = rng.uniform(-5.0, 15.0);
        Problem q = p;
        for (std::size_t i = 0; i < q.rows(); ++i) {
            const double s = std::exp(rng.uniform(-6.0, 6.0));
            for (double& a : q.A.row(i)) a *= s;
            q.b[i] *= s;
        }
        const double base = proximity(p, x);
        const double scaled = proximity(q, x);
        if (base == 0.0) {
            if (scaled != 0.0) ++scaling;
            continue;
        }
        const double rel = std::abs(scaled - base) / base;
        worst = std::max(worst, rel);
        if (!(rel <= 1e-12)) ++scaling;
    }
    std::ostringstream s;
    s << "Pr(1) != 0 on " << nonzero << "/100; scaling failures " << scaling << "/100 (worst rel " << worst << ")";
    return {nonzero == 0 && scaling == 0, s.str()};
}

Outcome task2_trends(const ExperimentReport& r) {
    std::vector<const SummaryRow*> rows;
    for (const auto& s : r.summary) {
        if (s.arm == "linsup") rows.push_back(&s);
    }
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->alpha < b->alpha; });
    bool re_down = true, time_up = true;
    std::ostringstream s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        s << "a=" << rows[i]->alpha << " RE=" << rows[i]->mean_re << " t=" << rows[i]->mean_time << "s  ";
        if (i > 0) {
            re_down = re_down && rows[i]->mean_re < rows[i - 1]->mean_re;
            time_up = time_up && rows[i]->mean_time > rows[i - 1]->mean_time;
        }
    }
    std::size_t prox_bad = 0;
    for (const auto& row : r.raw) {
        if (row.arm == "linsup" && row.prox > row.prox_simplex) ++prox_bad;
    }
    if (!re_down) s << "[RE not strictly decreasing] ";
    if (!time_up) s << "[time not strictly increasing] ";
    s << "prox above reference: " << prox_bad;
    return {re_down && time_up && prox_bad == 0 && rows.size() == 3, s.str()};
}

Outcome nsweep_shape(const ExperimentReport& r) {
    double re5 = NAN, re30 = NAN, re100 = NAN;
    for (const auto& s : r.summary) {
        if (s.arm != "linsup") continue;
        if (s.inner_steps == 5) re5 = s.mean_re;
        if (s.inner_steps == 30) re30 = s.mean_re;
        if (s.inner_steps == 100) re100 = s.mean_re;
    }
    const double gap = std::abs(re30 - re100) / re100;
    const bool plateau = gap <= 0.10;
    const bool early = re5 > re30;
    std::ostringstream s;
    s << "RE(5)=" << re5 << " RE(30)=" << re30 << " RE(100)=" << re100 << "; |RE30-RE100|/RE100=" << gap
      << (plateau ? "" : " [> 0.10]") << (early ? "" : " [RE(5) <= RE(30)]");
    return {plateau && early, s.str()};
}

bool same_trace(const RunReport& a, const RunReport& b) {
    if (a.trace.size() != b.trace.size() || a.final_point != b.final_point) return false;
    for (std::size_t k = 0; k < a.trace.size(); ++k) {
        if (a.trace[k].phi != b.trace[k].phi || a.trace[k].prox != b.trace[k].prox) return false;
    }
    return true;
}

// Second pass of the Claim 1 protocol: the harness report must repeat bit
// for bit, and so must the full per-sweep traces of each run.
Outcome determinism(const ExperimentSpec& spec, const ExperimentReport& first) {
    const ExperimentReport second = run_task1(spec);
    std::size_t row_mismatch = first.raw.size() == second.raw.size() ? 0 : 1;
    for (std::size_t i = 0; !row_mismatch && i < first.raw.size(); ++i) {
        const auto& a = first.raw[i];
        const auto& b = second.raw[i];
        if (a.phi != b.phi || a.prox != b.prox || a.sweeps != b.sweeps || a.seed != b.seed) ++row_mismatch;
    }

    std::size_t trace_mismatch = 0, runs = 0;
    for (const auto& row : first.raw) {
        GenSpec gen;
        gen.rows = row.size.rows;
        gen.cols = row.size.cols;
        gen.seed = row.seed;
        const Problem p = generate(gen);
        SolverConfig config = spec.base_config;
        config.seed = row.seed;
        config.superiorize = row.arm == "linsup";
        const RunReport a = linsup_run(p, config);
        const RunReport b = linsup_run(p, config);
        ++runs;
        if (!same_trace(a, b) || a.trace.back().phi != row.phi || a.trace.back().prox != row.prox) ++trace_mismatch;
    }
    std::ostringstream s;
    s << "report rows differing: " << row_mismatch << "; traces differing: " << trace_mismatch << "/" << runs;
    return {row_mismatch == 0 && trace_mismatch == 0, s.str()};
}

Outcome control_arm() {
    CounterRng rng(kMasterSeed, RngStream::Instance);
    std::size_t mismatches = 0, checkpoints = 0;
    for (int t = 0; t < 20; ++t) {
        GenSpec gen;
        gen.rows = 10 + rng.uniform_int(0, 90);
        gen.cols = gen.rows + rng.uniform_int(0, 40);
        gen.seed = rng.next_u64();
        const Problem p = generate(gen);
        SolverConfig config;
        config.seed = gen.seed;
        config.superiorize = false;
        config.lambda = rng.uniform(0.5, 1.9);
        config.prox_epsilon = 1e-10;
        if (t % 2) config.init = Initialization::random_escalated();

        const RunReport a = linsup_run(p, config);
        const RunReport b = seek_feasible(p, config);
        if (!same_trace(a, b) || a.sweeps != b.sweeps || a.stop_reason != b.stop_reason) ++mismatches;
        // Intermediate iterates, via sweep caps.
        for (std::size_t cap : {1, 2, 3, 5, 8, 13}) {
            SolverConfig capped = config;
            capped.max_sweeps = cap;
            ++checkpoints;
            if (linsup_run(p, capped).final_point != seek_feasible(p, capped).final_point) ++mismatches;
        }
    }
    std::ostringstream s;
    s << "20 instances, " << checkpoints << " intermediate checkpoints, " << mismatches << " mismatches";
    return {mismatches == 0, s.str()};
}

Outcome suboptimal_race() {
    ExperimentSpec spec;
    spec.kind = ExperimentKind::Suboptimal;
    spec.sizes = {{800, 1000}};
    spec.reps = 1;
    spec.alphas = {0.99, 0.995};
    spec.base_config.iterate_change_epsilon = 1e-16;
    spec.seed = kMasterSeed;
    const ExperimentReport r = run_suboptimal(spec);

    std::size_t unsorted = 0, rising = 0, linsup_points = 0, simplex_points = 0;
    for (std::size_t i = 0; i < r.series.size(); ++i) {
        const auto& cur = r.series[i];
        (cur.run == "simplex" ? simplex_points : linsup_points)++;
        if (i == 0) continue;
        const auto& prev = r.series[i - 1];
        const bool same_run =
            prev.run == cur.run && prev.instance == cur.instance &&
            ((std::isnan(prev.alpha) && std::isnan(cur.alpha)) || prev.alpha == cur.alpha);
        if (!same_run) continue;
        if (cur.net_time_s < prev.net_time_s) ++unsorted;
        if (cur.run == "simplex" && prev.phase == 2 && cur.phase == 2 && cur.phi > prev.phi) ++rising;
    }
    std::ostringstream s;
    s << linsup_points << " LinSup + " << simplex_points << " Simplex samples; unsorted " << unsorted
      << ", phase-2 rises " << rising;
    for (const auto& row : r.raw) {
        s << "; " << row.arm;
        if (row.arm == "linsup") s << "(a=" << row.alpha << ")";
        s << " phi=" << row.phi << " Pr=" << row.prox << " t=" << row.time_s << "s " << row.stop;
    }
    const auto it = r.metadata.find("crossover_time_s.0");
    s << "; exploratory crossover at " << (it == r.metadata.end() ? "n/a" : it->second) << "s";
    return {unsorted == 0 && rising == 0 && linsup_points > 0 && simplex_points > 1, s.str()};
}

}  // namespace

int main() {
    StepLawAudit audit;
    const ExperimentSpec c1 = [&] {
        ExperimentSpec s = claim1_spec();
        s.step_observer = audit.observer();
        return s;
    }();

    ExperimentReport task1;
    run_criterion(1, "superiorized target is lower", [&] {
        task1 = run_task1(c1);
        audit.check_sums(task1);
        return claim1(task1);
    });
    run_criterion(2, "projection oracle", projection_oracle);
    run_criterion(3, "simplex vs vertex enumeration", simplex_oracle);
    run_criterion(4, "proximity identities", proximity_identities);

    // The step-law audit also covers the task2 runs, so 6 is evaluated first.
    const Timed c6 = evaluate([&] {
        ExperimentSpec spec;
        spec.kind = ExperimentKind::Task2;
        spec.sizes = {{200, 250}};
        spec.reps = 10;
        spec.alphas = {0.9, 0.99, 0.999};
        spec.seed = kMasterSeed;
        spec.step_observer = audit.observer();
        const ExperimentReport task2 = run_task2(spec);
        audit.check_sums(task2);
        return task2_trends(task2);
    });
    run_criterion(5, "step-size law (runs of 1 and 6)", [&] { return audit.outcome(); });
    report(6, "task2 trends in alpha", c6.outcome, c6.seconds);

    run_criterion(7, "N-sweep shape", [&] {
        ExperimentSpec spec;
        spec.kind = ExperimentKind::NSweep;
        spec.sizes = {{200, 250}};
        spec.reps = 10;
        spec.alphas = {0.99};
        spec.n_values = {5, 30, 100};
        spec.base_config.prox_epsilon = 1e-10;
        spec.seed = kMasterSeed;
        spec.workers = worker_count();
        return nsweep_shape(run_nsweep(spec));
    });
    run_criterion(8, "determinism", [&] {
        ExperimentSpec spec = c1;
        spec.step_observer = nullptr;
        return determinism(spec, task1);
    });
    run_criterion(9, "control arm equals bare AMS", control_arm);
    run_criterion(10, "suboptimal race plumbing", suboptimal_race);

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
