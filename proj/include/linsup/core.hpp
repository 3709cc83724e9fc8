#pragma once

// Problem and configuration data model shared by every solver in the library.
//
// A Problem describes the target set M = { x : Ax <= b, x >= 0 } together with
// the linear target function phi(x) = <c, x>.  Storage is dense and row-major
// because the projection methods consume whole rows at a time.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace linsup {

using Vector = std::vector<double>;

enum class ErrorCode {
    ZeroRow,
    ZeroCost,
    DimensionMismatch,
    NonFiniteEntry,
    ParseError,
    InvalidConfig,
    EscalationFailed,
    DivisionByZeroObjective,
    NonPositiveDenominator,
    NumericalBreakdown,
    OracleTooLarge,
    RegenerationExhausted,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index = std::nullopt);

    ErrorCode code() const noexcept { return code_; }

    // Row index for ZeroRow, line number for ParseError.
    std::optional<std::size_t> index() const noexcept { return index_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> index_;
};

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct Problem {
    DenseMatrix A;
    Vector b;
    Vector c;

    std::size_t rows() const noexcept { return A.rows(); }
    std::size_t cols() const noexcept { return A.cols(); }

    bool operator==(const Problem&) const = default;
};

// Throws Error unless every Problem invariant holds.
void validate(const Problem& problem);

// Text format: "I J", then I rows of A, then b, then c; whitespace separated.
Problem parse_problem(std::istream& in);
void format_problem(const Problem& problem, std::ostream& out);
Problem read_problem(const std::filesystem::path& path);
void write_problem(const Problem& problem, const std::filesystem::path& path);

// Shortest-round-trip is not required; 17 significant digits always reproduce a double.
std::string format_double(double value);

enum class InitPolicy { AllTens, RandomEscalated, Explicit };

struct Initialization {
    InitPolicy policy = InitPolicy::AllTens;
    Vector point;  // used only by Explicit

    static Initialization all_tens() { return {}; }
    static Initialization random_escalated() { return {InitPolicy::RandomEscalated, {}}; }
    static Initialization explicit_point(Vector p) { return {InitPolicy::Explicit, std::move(p)}; }
};

struct SolverConfig {
    double alpha = 0.99;
    std::size_t inner_steps = 30;
    double lambda = 1.0;
    double prox_epsilon = 1e-10;
    std::size_t max_sweeps = 200000;
    std::uint64_t seed = 0;
    Initialization init;
    bool superiorize = true;
    std::optional<double> iterate_change_epsilon;

    // Optional replacement of the fixed inner count by a per-sweep count N_k.
    // Must return at least 1.  Unset means inner_steps for every sweep.
    std::function<std::size_t(std::size_t sweep)> inner_steps_schedule;

    std::size_t inner_steps_at(std::size_t sweep) const;

    // Throws Error(InvalidConfig) on out-of-range tunables.
    void validate() const;
};

enum class StopReason { ProxBelowEpsilon, IterateChangeBelowEpsilon, MaxSweeps };

const char* to_string(StopReason reason);

struct TraceSample {
    std::size_t sweep = 0;
    // Outer index for projection runs, pivot count for Simplex runs.
    std::size_t k = 0;
    double elapsed_s = 0.0;
    // Cumulative time spent producing samples that the solver itself does not need.
    double instrumentation_s = 0.0;
    double prox = 0.0;
    double phi = 0.0;

    double net_s() const noexcept { return elapsed_s - instrumentation_s; }
};

struct SweepRecord {
    std::size_t ell_start = 0;
    std::size_t ell_end = 0;
};

struct RunReport {
    std::vector<TraceSample> trace;
    Vector final_point;
    StopReason stop_reason = StopReason::MaxSweeps;
    double beta_sum = 0.0;
    std::size_t sweeps = 0;
    // One entry per outer sweep; empty for plain feasibility-seeking.
    std::vector<SweepRecord> ell_log;

    double elapsed_s() const noexcept { return trace.empty() ? 0.0 : trace.back().elapsed_s; }
};

}  // namespace linsup
