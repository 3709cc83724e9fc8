#include "linsup/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <string_view>
#include <tuple>

#include "json.hpp"
#include "linsup/metrics.hpp"
#include "linsup/problem_gen.hpp"
#include "linsup/rng.hpp"

namespace linsup {

const char* to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::NSweep: return "nsweep";
        case ExperimentKind::Task1: return "task1";
        case ExperimentKind::Task2: return "task2";
        case ExperimentKind::Suboptimal: return "suboptimal";
    }
    return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& text) {
    if (text == "nsweep") return ExperimentKind::NSweep;
    if (text == "task1") return ExperimentKind::Task1;
    if (text == "task2") return ExperimentKind::Task2;
    if (text == "suboptimal") return ExperimentKind::Suboptimal;
    throw Error(ErrorCode::InvalidConfig, "unknown experiment kind '" + text + "'");
}

std::vector<ProblemSize> parse_sizes(const std::string& text) {
    auto parse_dim = [](std::string_view field, std::size_t& out) {
        const auto* end = field.data() + field.size();
        const auto [ptr, ec] = std::from_chars(field.data(), end, out);
        return !field.empty() && ec == std::errc{} && ptr == end && out > 0;
    };
    std::vector<ProblemSize> sizes;
    std::string_view rest = text;
    while (true) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto x = item.find('x');
        ProblemSize size;
        if (x == std::string_view::npos || !parse_dim(item.substr(0, x), size.rows) ||
            !parse_dim(item.substr(x + 1), size.cols)) {
            throw Error(ErrorCode::InvalidConfig, "malformed size '" + std::string(item) + "', expected IxJ");
        }
        sizes.push_back(size);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return sizes;
}

void ExperimentSpec::validate() const {
    auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
    if (reps < 1) bad("reps must be at least 1");
    if (sizes.empty()) bad("sizes must be nonempty");
    if (alphas.empty()) bad("alphas must be nonempty");
    for (double a : alphas) {
        if (!(a > 0.0 && a < 1.0)) bad("every alpha must lie in (0,1)");
    }
    if (kind == ExperimentKind::NSweep) {
        if (n_values.empty()) bad("n_values must be nonempty");
        for (std::size_t n : n_values) {
            if (n < 1) bad("every N must be at least 1");
        }
    }
    if (!(budget_multiplier > 0.0)) bad("budget multiplier must be positive");
    if (max_regenerations < 1) bad("max_regenerations must be at least 1");
    if (workers < 1) bad("workers must be at least 1");
    base_config.validate();
}

std::uint64_t instance_seed(std::uint64_t master, ProblemSize size, std::size_t rep, std::size_t attempt) {
    std::uint64_t h = derive_key(master, static_cast<std::uint64_t>(RngStream::Instance));
    h = mix64(h ^ size.rows);
    h = mix64(h ^ (size.cols * CounterRng::kGamma));
    h = mix64(h ^ rep);
    h = mix64(h ^ (attempt + 0x5851F42D4C957F2DULL));
    return h;
}

namespace {

constexpr double kNotApplicable = std::numeric_limits<double>::quiet_NaN();

struct SolvedInstance {
    Problem problem;
    std::uint64_t seed = 0;
    SimplexResult simplex;
};

Problem make_instance(ProblemSize size, std::uint64_t seed) {
    GenSpec gen;
    gen.rows = size.rows;
    gen.cols = size.cols;
    gen.seed = seed;
    return generate(gen);
}

// Instances the reference solver cannot bring to Optimal are replaced.
SolvedInstance solvable_instance(const ExperimentSpec& spec, ProblemSize size, std::size_t rep) {
    for (std::size_t attempt = 0; attempt < spec.max_regenerations; ++attempt) {
        const std::uint64_t seed = instance_seed(spec.seed, size, rep, attempt);
        Problem problem = make_instance(size, seed);
        try {
            SimplexResult simplex = solve(problem);
            if (simplex.status == SimplexStatus::Optimal && simplex.objective != 0.0) {
                return {std::move(problem), seed, std::move(simplex)};
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NumericalBreakdown) throw;
        }
    }
    throw Error(ErrorCode::RegenerationExhausted, "no Simplex-solvable instance of size " +
                                                      std::to_string(size.rows) + "x" + std::to_string(size.cols) +
                                                      " after " + std::to_string(spec.max_regenerations) +
                                                      " attempts");
}

RunReport observed_run(const ExperimentSpec& spec, const Problem& problem, const SolverConfig& config,
                       const RunContext& context) {
    if (!spec.step_observer || !config.superiorize) return linsup_run(problem, config);
    return linsup_run(problem, config,
                      [&](const StepEvent& event) { spec.step_observer(context, event); });
}

InstanceRow row_from_run(ProblemSize size, std::size_t instance, std::uint64_t seed, const char* arm,
                         const SolverConfig& config, const RunReport& run) {
    InstanceRow row;
    row.size = size;
    row.instance = instance;
    row.seed = seed;
    row.arm = arm;
    row.alpha = config.superiorize ? config.alpha : kNotApplicable;
    row.inner_steps = config.superiorize ? config.inner_steps : 0;
    row.phi = run.trace.back().phi;
    row.prox = run.trace.back().prox;
    row.time_s = run.trace.back().net_s();
    row.sweeps = run.sweeps;
    row.stop = to_string(run.stop_reason);
    row.beta_sum = run.beta_sum;
    row.flagged = run.stop_reason == StopReason::MaxSweeps;
    return row;
}

InstanceRow simplex_row(ProblemSize size, std::size_t instance, const SolvedInstance& solved) {
    InstanceRow row;
    row.size = size;
    row.instance = instance;
    row.seed = solved.seed;
    row.arm = "simplex";
    row.alpha = kNotApplicable;
    row.phi = solved.simplex.objective;
    row.prox = proximity(solved.problem, solved.simplex.x);
    row.time_s = solved.simplex.net_seconds;
    row.sweeps = solved.simplex.pivots;
    row.stop = to_string(solved.simplex.status);
    row.phi_simplex = row.phi;
    row.prox_simplex = row.prox;
    row.time_simplex = row.time_s;
    row.re = 0.0;
    row.tr = 1.0;
    return row;
}

void attach_comparison(InstanceRow& row, const InstanceRow& reference) {
    row.phi_simplex = reference.phi;
    row.prox_simplex = reference.prox;
    row.time_simplex = reference.time_s;
    row.re = relative_error(row.phi, reference.phi);
    row.tr = reference.time_s > 0.0 ? time_ratio(row.time_s, reference.time_s) : kNotApplicable;
}

// Runs cell(i) for i in [0, count) on up to `workers` threads, keeping
// results in index order.  The first exception (by index) is rethrown.
template <typename Cell>
std::vector<std::vector<InstanceRow>> run_cells(std::size_t count, int workers, Cell cell) {
    std::vector<std::vector<InstanceRow>> out(count);
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[i] = cell(static_cast<std::size_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

std::vector<InstanceRow> flatten(std::vector<std::vector<InstanceRow>> cells) {
    std::vector<InstanceRow> rows;
    for (auto& cell : cells) {
        for (auto& r : cell) rows.push_back(std::move(r));
    }
    return rows;
}

std::string join_sizes(const std::vector<ProblemSize>& sizes) {
    std::string s;
    for (const auto& sz : sizes) {
        if (!s.empty()) s += ',';
        s += std::to_string(sz.rows) + "x" + std::to_string(sz.cols);
    }
    return s;
}

template <typename T>
std::string join_values(const std::vector<T>& values) {
    std::string s;
    for (const auto& v : values) {
        if (!s.empty()) s += ',';
        if constexpr (std::is_floating_point_v<T>) {
            s += format_double(v);
        } else {
            s += std::to_string(v);
        }
    }
    return s;
}

const char* init_name(InitPolicy policy) {
    switch (policy) {
        case InitPolicy::AllTens: return "tens";
        case InitPolicy::RandomEscalated: return "random";
        case InitPolicy::Explicit: return "explicit";
    }
    return "unknown";
}

ExperimentReport start_report(const ExperimentSpec& spec) {
    ExperimentReport report;
    report.kind = spec.kind;
    auto& m = report.metadata;
    m["kind"] = to_string(spec.kind);
    m["seed"] = std::to_string(spec.seed);
    m["reps"] = std::to_string(spec.reps);
    m["sizes"] = join_sizes(spec.sizes);
    m["alphas"] = join_values(spec.alphas);
    if (spec.kind == ExperimentKind::NSweep) m["n_values"] = join_values(spec.n_values);
    m["config.alpha"] = format_double(spec.base_config.alpha);
    m["config.inner_steps"] = std::to_string(spec.base_config.inner_steps);
    m["config.lambda"] = format_double(spec.base_config.lambda);
    m["config.prox_epsilon"] = format_double(spec.base_config.prox_epsilon);
    m["config.max_sweeps"] = std::to_string(spec.base_config.max_sweeps);
    m["config.init"] = init_name(spec.base_config.init.policy);
    m["build"] = std::string("linsup 1.0.0; ") + __VERSION__;
    m["raw_columns"] =
        "rows,cols,instance,seed,arm,alpha,n,phi,prox,time_s,sweeps,stop,phi_simplex,prox_simplex,"
        "time_simplex,re,tr,beta_sum,flagged";
    m["summary_columns"] =
        "rows,cols,arm,alpha,n,count,mean_phi,mean_prox,mean_time_s,mean_re,mean_tr,claim_fraction,flagged";
    m["time_unit"] = "seconds, instrumentation excluded";
    return report;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<InstanceRow>& raw, ExperimentKind kind) {
    using Key = std::tuple<std::size_t, std::size_t, std::string, std::string, std::size_t>;
    auto key_of = [](const InstanceRow& r) {
        return Key{r.size.rows, r.size.cols, r.arm, format_double(r.alpha), r.inner_steps};
    };

    std::vector<Key> order;
    std::map<Key, std::vector<const InstanceRow*>> groups;
    for (const auto& r : raw) {
        const Key k = key_of(r);
        auto [it, inserted] = groups.try_emplace(k);
        if (inserted) order.push_back(k);
        it->second.push_back(&r);
    }

    // task1: plain-arm phi per (size, instance, seed) for the claim check.
    std::map<std::tuple<std::size_t, std::size_t, std::size_t, std::uint64_t>, double> plain_phi;
    if (kind == ExperimentKind::Task1) {
        for (const auto& r : raw) {
            if (r.arm == "feasibility") plain_phi[{r.size.rows, r.size.cols, r.instance, r.seed}] = r.phi;
        }
    }

    std::vector<SummaryRow> out;
    for (const Key& k : order) {
        const auto& rows = groups.at(k);
        SummaryRow s;
        s.size = rows.front()->size;
        s.arm = rows.front()->arm;
        s.alpha = rows.front()->alpha;
        s.inner_steps = rows.front()->inner_steps;
        s.count = rows.size();
        std::size_t claims = 0;
        for (const InstanceRow* r : rows) {
            s.mean_phi += r->phi;
            s.mean_prox += r->prox;
            s.mean_time += r->time_s;
            s.mean_re += r->re;
            s.mean_tr += r->tr;
            if (r->flagged) ++s.flagged;
            if (kind == ExperimentKind::Task1 && r->arm == "linsup") {
                const auto it = plain_phi.find({r->size.rows, r->size.cols, r->instance, r->seed});
                if (it != plain_phi.end() && r->phi < it->second) ++claims;
            }
        }
        const double n = static_cast<double>(s.count);
        s.mean_phi /= n;
        s.mean_prox /= n;
        s.mean_time /= n;
        s.mean_re /= n;
        s.mean_tr /= n;
        s.claim_fraction = kind == ExperimentKind::Task1 && s.arm == "linsup" ? claims / n : kNotApplicable;
        out.push_back(s);
    }
    return out;
}

ExperimentReport run_task1(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentReport report = start_report(spec);
    const std::size_t cells = spec.sizes.size() * spec.reps;

    auto cell = [&](std::size_t index) {
        const ProblemSize size = spec.sizes[index / spec.reps];
        const std::size_t rep = index % spec.reps;
        const std::uint64_t seed = instance_seed(spec.seed, size, rep, 0);
        const Problem problem = make_instance(size, seed);

        std::vector<InstanceRow> rows;
        for (double alpha : spec.alphas) {
            SolverConfig with = spec.base_config;
            with.alpha = alpha;
            with.seed = seed;
            with.superiorize = true;
            SolverConfig without = with;
            without.superiorize = false;

            const RunReport a = observed_run(spec, problem, with, {size, rep, alpha, with.inner_steps});
            const RunReport b = linsup_run(problem, without);
            rows.push_back(row_from_run(size, rep, seed, "linsup", with, a));
            InstanceRow plain = row_from_run(size, rep, seed, "feasibility", without, b);
            plain.alpha = alpha;
            rows.push_back(plain);
        }
        return rows;
    };

    report.raw = flatten(run_cells(cells, spec.workers, cell));
    report.summary = summarize(report.raw, spec.kind);
    return report;
}

ExperimentReport run_task2(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentReport report = start_report(spec);

    // Timed cells run one at a time.
    for (const ProblemSize size : spec.sizes) {
        for (std::size_t rep = 0; rep < spec.reps; ++rep) {
            const SolvedInstance solved = solvable_instance(spec, size, rep);
            const InstanceRow reference = simplex_row(size, rep, solved);
            report.raw.push_back(reference);

            for (double alpha : spec.alphas) {
                SolverConfig config = spec.base_config;
                config.alpha = alpha;
                config.seed = solved.seed;
                config.superiorize = true;
                config.prox_epsilon = reference.prox;
                const RunReport run =
                    observed_run(spec, solved.problem, config, {size, rep, alpha, config.inner_steps});
                InstanceRow row = row_from_run(size, rep, solved.seed, "linsup", config, run);
                attach_comparison(row, reference);
                report.raw.push_back(row);
            }
        }
    }
    report.summary = summarize(report.raw, spec.kind);
    report.metadata["prox_epsilon_source"] = "per-instance proximity of the Simplex solution";
    return report;
}

ExperimentReport run_nsweep(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentReport report = start_report(spec);
    const std::size_t cells = spec.sizes.size() * spec.reps;
    const double alpha = spec.alphas.front();

    auto cell = [&](std::size_t index) {
        const ProblemSize size = spec.sizes[index / spec.reps];
        const std::size_t rep = index % spec.reps;
        const SolvedInstance solved = solvable_instance(spec, size, rep);
        const InstanceRow reference = simplex_row(size, rep, solved);

        std::vector<InstanceRow> rows{reference};
        for (std::size_t n : spec.n_values) {
            SolverConfig config = spec.base_config;
            config.alpha = alpha;
            config.inner_steps = n;
            config.seed = solved.seed;
            config.superiorize = true;
            const RunReport run = observed_run(spec, solved.problem, config, {size, rep, alpha, n});
            InstanceRow row = row_from_run(size, rep, solved.seed, "linsup", config, run);
            attach_comparison(row, reference);
            rows.push_back(row);
        }
        return rows;
    };

    report.raw = flatten(run_cells(cells, spec.workers, cell));
    report.summary = summarize(report.raw, spec.kind);
    return report;
}

ExperimentReport run_suboptimal(const ExperimentSpec& spec) {
    spec.validate();
    ExperimentReport report = start_report(spec);
    const double change_eps = spec.base_config.iterate_change_epsilon.value_or(1e-16);
    report.metadata["iterate_change_epsilon"] = format_double(change_eps);
    report.metadata["budget_multiplier"] = format_double(spec.budget_multiplier);
    report.metadata["series_columns"] = "instance,run,alpha,sample,k,phase,time_s,net_time_s,phi,prox";

    std::size_t instance = 0;
    for (const ProblemSize size : spec.sizes) {
        for (std::size_t rep = 0; rep < spec.reps; ++rep, ++instance) {
            const std::uint64_t seed = instance_seed(spec.seed, size, rep, 0);
            const Problem problem = make_instance(size, seed);

            double slowest = 0.0;
            std::vector<std::pair<double, RunReport>> runs;
            for (double alpha : spec.alphas) {
                SolverConfig config = spec.base_config;
                config.alpha = alpha;
                config.seed = seed;
                config.superiorize = true;
                config.prox_epsilon = 0.0;
                config.iterate_change_epsilon = change_eps;
                RunReport run = observed_run(spec, problem, config, {size, rep, alpha, config.inner_steps});
                report.raw.push_back(row_from_run(size, rep, seed, "linsup", config, run));
                slowest = std::max(slowest, run.trace.back().net_s());
                runs.emplace_back(alpha, std::move(run));
            }

            const double budget = std::max(spec.budget_multiplier * slowest, 1e-3);
            const std::size_t every = spec.sample_every ? spec.sample_every : std::max<std::size_t>(1, size.rows / 16);
            const SimplexResult simplex = solve_budgeted(problem, budget, every);
            report.metadata["budget_s." + std::to_string(instance)] = format_double(budget);

            InstanceRow srow;
            srow.size = size;
            srow.instance = rep;
            srow.seed = seed;
            srow.arm = "simplex";
            srow.alpha = kNotApplicable;
            srow.phi = simplex.objective;
            srow.prox = proximity(problem, simplex.x);
            srow.time_s = simplex.net_seconds;
            srow.sweeps = simplex.pivots;
            srow.stop = to_string(simplex.status);
            report.raw.push_back(srow);

            for (const auto& [alpha, run] : runs) {
                for (const auto& s : run.trace) {
                    report.series.push_back(
                        {instance, "linsup", alpha, s.sweep, s.k, 0, s.elapsed_s, s.net_s(), s.phi, s.prox});
                }
            }
            for (const auto& [s, phase] : simplex.trace) {
                report.series.push_back(
                    {instance, "simplex", kNotApplicable, s.sweep, s.k, phase, s.elapsed_s, s.net_s(), s.phi, s.prox});
            }

            // Exploratory: earliest LinSup sample (largest alpha) that beats the
            // latest Simplex sample taken no later, on both phi and proximity.
            const auto& best = std::max_element(runs.begin(), runs.end(),
                                                [](const auto& a, const auto& b) { return a.first < b.first; })
                                   ->second;
            std::string crossover = "none";
            for (const auto& ls : best.trace) {
                const TraceSample* latest = nullptr;
                for (const auto& [ss, phase] : simplex.trace) {
                    if (ss.net_s() <= ls.net_s()) latest = &ss;
                }
                if (latest && ls.phi < latest->phi && ls.prox < latest->prox) {
                    crossover = format_double(ls.net_s());
                    break;
                }
            }
            report.metadata["crossover_time_s." + std::to_string(instance)] = crossover;
        }
    }
    report.summary = summarize(report.raw, spec.kind);
    return report;
}

ExperimentReport run_experiment(const ExperimentSpec& spec) {
    switch (spec.kind) {
        case ExperimentKind::NSweep: return run_nsweep(spec);
        case ExperimentKind::Task1: return run_task1(spec);
        case ExperimentKind::Task2: return run_task2(spec);
        case ExperimentKind::Suboptimal: return run_suboptimal(spec);
    }
    throw Error(ErrorCode::InvalidConfig, "unknown experiment kind");
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    return out;
}

void check_written(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace

void emit_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "rows,cols,instance,seed,arm,alpha,n,phi,prox,time_s,sweeps,stop,phi_simplex,prox_simplex,"
           "time_simplex,re,tr,beta_sum,flagged\n";
    for (const auto& r : report.raw) {
        out << r.size.rows << ',' << r.size.cols << ',' << r.instance << ',' << r.seed << ',' << r.arm << ','
            << format_double(r.alpha) << ',' << r.inner_steps << ',' << format_double(r.phi) << ','
            << format_double(r.prox) << ',' << format_double(r.time_s) << ',' << r.sweeps << ',' << r.stop << ','
            << format_double(r.phi_simplex) << ',' << format_double(r.prox_simplex) << ','
            << format_double(r.time_simplex) << ',' << format_double(r.re) << ',' << format_double(r.tr) << ','
            << format_double(r.beta_sum) << ',' << (r.flagged ? 1 : 0) << '\n';
    }
    check_written(out, path);
}

void emit_summary_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "rows,cols,arm,alpha,n,count,mean_phi,mean_prox,mean_time_s,mean_re,mean_tr,claim_fraction,flagged\n";
    for (const auto& s : report.summary) {
        out << s.size.rows << ',' << s.size.cols << ',' << s.arm << ',' << format_double(s.alpha) << ','
            << s.inner_steps << ',' << s.count << ',' << format_double(s.mean_phi) << ','
            << format_double(s.mean_prox) << ',' << format_double(s.mean_time) << ',' << format_double(s.mean_re)
            << ',' << format_double(s.mean_tr) << ',' << format_double(s.claim_fraction) << ',' << s.flagged
            << '\n';
    }
    check_written(out, path);
}

void emit_series_csv(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "instance,run,alpha,sample,k,phase,time_s,net_time_s,phi,prox\n";
    for (const auto& s : report.series) {
        out << s.instance << ',' << s.run << ',' << format_double(s.alpha) << ',' << s.sample << ',' << s.k << ','
            << s.phase << ',' << format_double(s.time_s) << ',' << format_double(s.net_time_s) << ','
            << format_double(s.phi) << ',' << format_double(s.prox) << '\n';
    }
    check_written(out, path);
}

void emit_plotdata(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "x,y,series\n";
    auto emit = [&out](double x, double y, const std::string& series) {
        out << format_double(x) << ',' << format_double(y) << ',' << series << '\n';
    };
    auto size_label = [](ProblemSize s) { return std::to_string(s.rows) + "x" + std::to_string(s.cols); };

    switch (report.kind) {
        case ExperimentKind::NSweep:
            for (const auto& s : report.summary) {
                if (s.arm == "linsup") emit(static_cast<double>(s.inner_steps), s.mean_re, "re/" + size_label(s.size));
            }
            break;
        case ExperimentKind::Task1:
            for (const auto& s : report.summary) {
                emit(static_cast<double>(s.size.cols), s.mean_phi, "phi/" + s.arm + "/alpha=" + format_double(s.alpha));
                emit(static_cast<double>(s.size.cols), s.mean_time, "time/" + s.arm + "/alpha=" + format_double(s.alpha));
            }
            break;
        case ExperimentKind::Task2:
            for (const auto& s : report.summary) {
                const std::string tag = s.arm == "linsup" ? "linsup/alpha=" + format_double(s.alpha) : s.arm;
                emit(static_cast<double>(s.size.cols), s.mean_phi, "phi/" + tag);
                emit(static_cast<double>(s.size.cols), s.mean_time, "time/" + tag);
                if (s.arm == "linsup") {
                    emit(static_cast<double>(s.size.cols), s.mean_re, "re/" + tag);
                    emit(static_cast<double>(s.size.cols), s.mean_tr, "tr/" + tag);
                }
            }
            break;
        case ExperimentKind::Suboptimal:
            for (const auto& s : report.series) {
                const std::string tag = s.run == "linsup" ? "linsup/alpha=" + format_double(s.alpha) : s.run;
                emit(s.net_time_s, s.phi, "phi/" + tag + "/" + std::to_string(s.instance));
                emit(s.net_time_s, s.prox, "prox/" + tag + "/" + std::to_string(s.instance));
            }
            break;
    }
    check_written(out, path);
}

void emit_metadata(const ExperimentReport& report, const std::filesystem::path& path) {
    auto out = open_out(path);
    nlohmann::json j(report.metadata);
    out << j.dump(2) << '\n';
    check_written(out, path);
}

void write_trace_csv(const std::vector<TraceSample>& trace, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "sweep,k,elapsed_s,instrumentation_s,prox,phi\n";
    for (const auto& s : trace) {
        out << s.sweep << ',' << s.k << ',' << format_double(s.elapsed_s) << ','
            << format_double(s.instrumentation_s) << ',' << format_double(s.prox) << ',' << format_double(s.phi)
            << '\n';
    }
    check_written(out, path);
}

// Plain comma splitting; the writers above never emit quoted fields.
CsvTable read_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        return cells;
    };
    CsvTable table;
    std::string line;
    if (std::getline(in, line)) table.header = split(line);
    while (std::getline(in, line)) {
        if (!line.empty()) table.rows.push_back(split(line));
    }
    return table;
}

}  // namespace linsup
