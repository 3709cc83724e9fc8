#pragma once

// Experiment drivers: the N calibration sweep, superiorized versus plain
// feasibility-seeking (task1), LinSup versus Simplex at matched proximity
// (task2), and the race against a time-budgeted Simplex (suboptimal).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linsup/core.hpp"
#include "linsup/simplex.hpp"
#include "linsup/superiorization.hpp"

namespace linsup {

enum class ExperimentKind { NSweep, Task1, Task2, Suboptimal };

const char* to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& text);

struct ProblemSize {
    std::size_t rows = 0;
    std::size_t cols = 0;

    bool operator==(const ProblemSize&) const = default;
};

// "80x100,200x250" -> sizes.  Throws InvalidConfig on malformed input.
std::vector<ProblemSize> parse_sizes(const std::string& text);

inline const std::vector<ProblemSize>& default_sizes() {
    static const std::vector<ProblemSize> sizes{{80, 100}, {200, 250}, {400, 500}, {800, 1000}};
    return sizes;
}

// Context handed to the step observer: which run the emission belongs to.
struct RunContext {
    ProblemSize size;
    std::size_t instance = 0;
    double alpha = 0.0;
    std::size_t inner_steps = 0;
};

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::Task1;
    std::vector<ProblemSize> sizes = default_sizes();
    std::size_t reps = 10;
    std::vector<double> alphas{0.99};
    std::vector<std::size_t> n_values{5, 10, 20, 30, 50, 70, 100};
    SolverConfig base_config;
    std::uint64_t seed = 0;

    // Simplex budget in the suboptimal race, relative to the slowest LinSup run.
    double budget_multiplier = 1.1;
    // Simplex trace sampling interval in pivots; 0 picks one from the size.
    std::size_t sample_every = 0;
    // Attempts per instance slot before giving up on a Simplex-solvable instance.
    std::size_t max_regenerations = 20;
    // Worker threads for cells that are not timed against each other.
    int workers = 1;

    // Called for every perturbation step of every LinSup run; must be
    // thread-safe when workers > 1.
    std::function<void(const RunContext&, const StepEvent&)> step_observer;

    void validate() const;
};

// One row per (instance, alpha or N, arm).
struct InstanceRow {
    ProblemSize size;
    std::size_t instance = 0;
    std::uint64_t seed = 0;
    std::string arm;  // "linsup", "feasibility", "simplex"
    double alpha = 0.0;
    std::size_t inner_steps = 0;
    double phi = 0.0;
    double prox = 0.0;
    double time_s = 0.0;
    std::size_t sweeps = 0;  // pivots for the simplex arm
    std::string stop;
    double phi_simplex = 0.0;
    double prox_simplex = 0.0;
    double time_simplex = 0.0;
    double re = 0.0;
    double tr = 0.0;
    double beta_sum = 0.0;
    bool flagged = false;
};

// Mean over the raw rows sharing (size, arm, alpha, inner_steps).
struct SummaryRow {
    ProblemSize size;
    std::string arm;
    double alpha = 0.0;
    std::size_t inner_steps = 0;
    std::size_t count = 0;
    double mean_phi = 0.0;
    double mean_prox = 0.0;
    double mean_time = 0.0;
    double mean_re = 0.0;
    double mean_tr = 0.0;
    // task1: fraction of instances where the superiorized run ended lower.
    double claim_fraction = 0.0;
    std::size_t flagged = 0;
};

// One point of a time series in the suboptimal race.
struct SeriesRow {
    std::size_t instance = 0;
    std::string run;  // "linsup" or "simplex"
    double alpha = 0.0;
    std::size_t sample = 0;
    std::size_t k = 0;
    int phase = 0;
    double time_s = 0.0;
    double net_time_s = 0.0;
    double phi = 0.0;
    double prox = 0.0;
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::Task1;
    std::vector<InstanceRow> raw;
    std::vector<SummaryRow> summary;
    std::vector<SeriesRow> series;
    std::map<std::string, std::string> metadata;
};

std::uint64_t instance_seed(std::uint64_t master, ProblemSize size, std::size_t rep, std::size_t attempt);

ExperimentReport run_task1(const ExperimentSpec& spec);
ExperimentReport run_task2(const ExperimentSpec& spec);
ExperimentReport run_nsweep(const ExperimentSpec& spec);
ExperimentReport run_suboptimal(const ExperimentSpec& spec);
ExperimentReport run_experiment(const ExperimentSpec& spec);

// Groups raw rows and averages them; used by every driver.
std::vector<SummaryRow> summarize(const std::vector<InstanceRow>& raw, ExperimentKind kind);

// Raw rows as CSV, header always present.
void emit_csv(const ExperimentReport& report, const std::filesystem::path& path);
void emit_summary_csv(const ExperimentReport& report, const std::filesystem::path& path);
// (x, y, series) triples.
void emit_plotdata(const ExperimentReport& report, const std::filesystem::path& path);
void emit_series_csv(const ExperimentReport& report, const std::filesystem::path& path);
void emit_metadata(const ExperimentReport& report, const std::filesystem::path& path);

// Columns: sweep,k,elapsed_s,instrumentation_s,prox,phi
void write_trace_csv(const std::vector<TraceSample>& trace, const std::filesystem::path& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace linsup
