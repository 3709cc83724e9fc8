// linsup: command-line front end for instance generation, single runs,
// the Simplex baseline, and the experiment drivers.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "linsup/core.hpp"
#include "linsup/feasibility.hpp"
#include "linsup/harness.hpp"
#include "linsup/metrics.hpp"
#include "linsup/problem_gen.hpp"
#include "linsup/simplex.hpp"
#include "linsup/superiorization.hpp"

namespace {

using namespace linsup;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::IoError:
        case ErrorCode::ParseError:
            return 3;
        case ErrorCode::EscalationFailed:
        case ErrorCode::DivisionByZeroObjective:
        case ErrorCode::NonPositiveDenominator:
        case ErrorCode::NumericalBreakdown:
        case ErrorCode::RegenerationExhausted:
            return 2;
        default:
            return 1;
    }
}

Initialization parse_init(const std::string& text) {
    if (text == "tens") return Initialization::all_tens();
    if (text == "random") return Initialization::random_escalated();
    if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        std::ifstream in(path);
        if (!in) throw Error(ErrorCode::IoError, "cannot open initial point file " + path);
        Vector point;
        for (double v; in >> v;) point.push_back(v);
        if (!in.eof()) throw Error(ErrorCode::ParseError, "malformed initial point file " + path);
        return Initialization::explicit_point(std::move(point));
    }
    throw Error(ErrorCode::InvalidConfig, "--init must be tens, random, or file:PATH");
}

std::vector<double> parse_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidConfig, "malformed number list '" + text + "'");
        }
    }
    return out;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_doubles(text)) {
        if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v))) {
            throw Error(ErrorCode::InvalidConfig, "malformed count list '" + text + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear superiorization and Simplex baseline"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a random test instance");
    std::size_t gen_rows = 80;
    std::size_t gen_cols = 100;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--rows", gen_rows, "Row count I")->required();
    gen->add_option("--cols", gen_cols, "Column count J")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output problem file")->required();

    // run
    auto* run = app.add_subcommand("run", "Run LinSup or plain AMS feasibility-seeking");
    std::string run_problem;
    std::string run_mode = "linsup";
    std::string run_init = "tens";
    std::string run_trace;
    std::optional<double> run_change_eps;
    SolverConfig config;
    run->add_option("--problem", run_problem, "Problem file")->required();
    run->add_option("--mode", run_mode, "feasibility or linsup")
        ->check(CLI::IsMember({"feasibility", "linsup"}));
    run->add_option("--alpha", config.alpha, "Step-size kernel in (0,1)");
    run->add_option("--n", config.inner_steps, "Perturbations per sweep");
    run->add_option("--lambda", config.lambda, "AMS relaxation in (0,2)");
    run->add_option("--eps", config.prox_epsilon, "Stop when proximity <= eps");
    run->add_option("--iterate-change-eps", run_change_eps, "Stop when relative iterate change <= value");
    run->add_option("--init", run_init, "tens, random, or file:PATH");
    run->add_option("--seed", config.seed, "Run seed");
    run->add_option("--max-sweeps", config.max_sweeps, "Sweep cap");
    run->add_option("--trace", run_trace, "Trace CSV output");

    // simplex
    auto* simplex = app.add_subcommand("simplex", "Solve with the dense Simplex baseline");
    std::string simplex_problem;
    std::optional<double> simplex_budget;
    std::size_t simplex_every = 0;
    std::string simplex_trace;
    simplex->add_option("--problem", simplex_problem, "Problem file")->required();
    simplex->add_option("--budget", simplex_budget, "Wall-clock budget in seconds");
    simplex->add_option("--sample-every", simplex_every, "Trace sample interval in pivots");
    simplex->add_option("--trace", simplex_trace, "Trace CSV output");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Run an experiment and write CSV reports");
    std::string exp_kind;
    std::string exp_sizes = "80x100,200x250,400x500,800x1000";
    std::string exp_alphas;
    std::string exp_n_values = "5,10,20,30,50,70,100";
    std::string exp_out = "results";
    ExperimentSpec spec;
    exp->add_option("--kind", exp_kind, "nsweep, task1, task2, or suboptimal")
        ->required()
        ->check(CLI::IsMember({"nsweep", "task1", "task2", "suboptimal"}));
    exp->add_option("--sizes", exp_sizes, "Comma-separated IxJ list");
    exp->add_option("--reps", spec.reps, "Instances per size");
    exp->add_option("--alphas", exp_alphas, "Comma-separated kernels");
    exp->add_option("--n-values", exp_n_values, "Comma-separated N list (nsweep)");
    exp->add_option("--seed", spec.seed, "Master seed");
    exp->add_option("--out-dir", exp_out, "Output directory");
    exp->add_option("--eps", spec.base_config.prox_epsilon, "Proximity stop (task1, nsweep)");
    exp->add_option("--max-sweeps", spec.base_config.max_sweeps, "Sweep cap per run");
    exp->add_option("--n", spec.base_config.inner_steps, "Perturbations per sweep");
    exp->add_option("--budget-multiplier", spec.budget_multiplier, "Simplex budget relative to LinSup (suboptimal)");
    exp->add_option("--workers", spec.workers, "Worker threads for untimed cells");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            GenSpec g;
            g.rows = gen_rows;
            g.cols = gen_cols;
            g.seed = gen_seed;
            write_problem(generate(g), gen_out);
            std::printf("wrote %zux%zu instance to %s\n", gen_rows, gen_cols, gen_out.c_str());
        } else if (*run) {
            const Problem problem = read_problem(run_problem);
            config.init = parse_init(run_init);
            config.iterate_change_epsilon = run_change_eps;
            config.superiorize = run_mode == "linsup";
            const RunReport report = config.superiorize ? linsup_run(problem, config) : seek_feasible(problem, config);
            if (!run_trace.empty()) write_trace_csv(report.trace, run_trace);
            const auto& last = report.trace.back();
            std::printf("stop=%s sweeps=%zu phi=%s prox=%s beta_sum=%s seconds=%s\n", to_string(report.stop_reason),
                        report.sweeps, format_double(last.phi).c_str(), format_double(last.prox).c_str(),
                        format_double(report.beta_sum).c_str(), format_double(last.elapsed_s).c_str());
        } else if (*simplex) {
            const Problem problem = read_problem(simplex_problem);
            SimplexOptions options;
            if (simplex_budget) options.budget_s = *simplex_budget;
            options.sample_every = simplex_every;
            const SimplexResult result = solve(problem, options);
            if (!simplex_trace.empty()) {
                std::vector<TraceSample> trace;
                for (const auto& s : result.trace) trace.push_back(s.sample);
                write_trace_csv(trace, simplex_trace);
            }
            std::printf("status=%s pivots=%zu objective=%s prox=%s seconds=%s\n", to_string(result.status),
                        result.pivots, format_double(result.objective).c_str(),
                        format_double(proximity(problem, result.x)).c_str(),
                        format_double(result.net_seconds).c_str());
        } else if (*exp) {
            spec.kind = parse_experiment_kind(exp_kind);
            spec.sizes = parse_sizes(exp_sizes);
            if (!exp_alphas.empty()) {
                spec.alphas = parse_doubles(exp_alphas);
            } else if (spec.kind == ExperimentKind::Task2) {
                spec.alphas = {0.9, 0.99, 0.999};
            } else if (spec.kind == ExperimentKind::Suboptimal) {
                spec.alphas = {0.99, 0.995};
            }
            spec.n_values = parse_counts(exp_n_values);

            const ExperimentReport report = run_experiment(spec);
            std::error_code ec;
            std::filesystem::create_directories(exp_out, ec);
            if (ec) throw Error(ErrorCode::IoError, "cannot create " + exp_out + ": " + ec.message());
            const std::filesystem::path dir(exp_out);
            const std::string stem = to_string(spec.kind);
            emit_csv(report, dir / (stem + "_raw.csv"));
            emit_summary_csv(report, dir / (stem + "_summary.csv"));
            emit_plotdata(report, dir / (stem + "_plot.csv"));
            emit_metadata(report, dir / (stem + "_meta.json"));
            if (!report.series.empty()) emit_series_csv(report, dir / (stem + "_series.csv"));
            std::printf("%s: %zu raw rows, %zu summary rows written to %s\n", stem.c_str(), report.raw.size(),
                        report.summary.size(), exp_out.c_str());
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
