#include "linsup/core.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace linsup {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroRow: return "ZeroRow";
        case ErrorCode::ZeroCost: return "ZeroCost";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::EscalationFailed: return "EscalationFailed";
        case ErrorCode::DivisionByZeroObjective: return "DivisionByZeroObjective";
        case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
        case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
        case ErrorCode::OracleTooLarge: return "OracleTooLarge";
        case ErrorCode::RegenerationExhausted: return "RegenerationExhausted";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::ProxBelowEpsilon: return "ProxBelowEpsilon";
        case StopReason::IterateChangeBelowEpsilon: return "IterateChangeBelowEpsilon";
        case StopReason::MaxSweeps: return "MaxSweeps";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix data does not have rows*cols entries");
    }
}

void validate(const Problem& problem) {
    const std::size_t I = problem.rows();
    const std::size_t J = problem.cols();
    if (I == 0 || J == 0) {
        throw Error(ErrorCode::DimensionMismatch, "problem needs at least one row and one column");
    }
    if (problem.A.data().size() != I * J) {
        throw Error(ErrorCode::DimensionMismatch, "A has the wrong number of entries");
    }
    if (problem.b.size() != I) {
        throw Error(ErrorCode::DimensionMismatch, "b has length " + std::to_string(problem.b.size()) +
                                                      ", expected " + std::to_string(I));
    }
    if (problem.c.size() != J) {
        throw Error(ErrorCode::DimensionMismatch, "c has length " + std::to_string(problem.c.size()) +
                                                      ", expected " + std::to_string(J));
    }
    auto all_finite = [](std::span<const double> v) {
        for (double x : v) {
            if (!std::isfinite(x)) return false;
        }
        return true;
    };
    if (!all_finite(problem.A.data()) || !all_finite(problem.b) || !all_finite(problem.c)) {
        throw Error(ErrorCode::NonFiniteEntry, "problem contains a non-finite value");
    }
    for (std::size_t i = 0; i < I; ++i) {
        double norm_sq = 0.0;
        for (double a : problem.A.row(i)) norm_sq += a * a;
        if (!(norm_sq > 0.0)) {
            throw Error(ErrorCode::ZeroRow, "row " + std::to_string(i) + " has zero norm", i);
        }
    }
    double c_norm_sq = 0.0;
    for (double x : problem.c) c_norm_sq += x * x;
    if (!(c_norm_sq > 0.0)) {
        throw Error(ErrorCode::ZeroCost, "cost vector has zero norm");
    }
}

namespace {

// Whitespace tokenizer that remembers the line each token came from.
class TokenReader {
public:
    explicit TokenReader(std::istream& in) : in_(in) {}

    std::optional<std::string> next() {
        while (true) {
            if (std::string tok; line_stream_ >> tok) return tok;
            std::string line;
            if (!std::getline(in_, line)) return std::nullopt;
            ++line_no_;
            line_stream_.clear();
            line_stream_.str(line);
        }
    }

    std::size_t line() const noexcept { return line_no_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + msg, line_no_);
    }

    double real(const char* what) {
        auto tok = next();
        if (!tok) fail(std::string("unexpected end of file while reading ") + what);
        double value = 0.0;
        const char* first = tok->data();
        const char* last = first + tok->size();
        if (*first == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail("malformed number '" + *tok + "' in " + what);
        return value;
    }

    std::size_t count(const char* what) {
        auto tok = next();
        if (!tok) fail(std::string("unexpected end of file while reading ") + what);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(tok->data(), tok->data() + tok->size(), value);
        if (ec != std::errc() || ptr != tok->data() + tok->size() || value == 0) {
            fail("expected a positive integer for " + std::string(what) + ", got '" + *tok + "'");
        }
        return value;
    }

private:
    std::istream& in_;
    std::istringstream line_stream_;
    std::size_t line_no_ = 0;
};

}  // namespace

Problem parse_problem(std::istream& in) {
    TokenReader reader(in);
    const std::size_t I = reader.count("row count");
    const std::size_t J = reader.count("column count");

    Problem p;
    std::vector<double> a(I * J);
    for (double& v : a) v = reader.real("matrix A");
    p.A = DenseMatrix(I, J, std::move(a));
    p.b.resize(I);
    for (double& v : p.b) v = reader.real("vector b");
    p.c.resize(J);
    for (double& v : p.c) v = reader.real("vector c");
    if (auto extra = reader.next()) reader.fail("trailing token '" + *extra + "'");

    validate(p);
    return p;
}

std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void format_problem(const Problem& problem, std::ostream& out) {
    auto write_row = [&out](std::span<const double> v) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (j) out << ' ';
            out << format_double(v[j]);
        }
        out << '\n';
    };
    out << problem.rows() << ' ' << problem.cols() << '\n';
    for (std::size_t i = 0; i < problem.rows(); ++i) write_row(problem.A.row(i));
    write_row(problem.b);
    write_row(problem.c);
}

Problem read_problem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return parse_problem(in);
}

void write_problem(const Problem& problem, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    format_problem(problem, out);
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::size_t SolverConfig::inner_steps_at(std::size_t sweep) const {
    return inner_steps_schedule ? inner_steps_schedule(sweep) : inner_steps;
}

void SolverConfig::validate() const {
    auto bad = [](const std::string& msg) { throw Error(ErrorCode::InvalidConfig, msg); };
    if (!(alpha > 0.0 && alpha < 1.0)) bad("alpha must lie in (0,1)");
    if (inner_steps < 1) bad("inner step count N must be at least 1");
    if (!(lambda > 0.0 && lambda < 2.0)) bad("relaxation lambda must lie in (0,2)");
    if (!(prox_epsilon >= 0.0) || !std::isfinite(prox_epsilon)) {
        bad("proximity epsilon must be finite and nonnegative");
    }
    if (max_sweeps < 1) bad("max_sweeps must be at least 1");
    if (iterate_change_epsilon && !(*iterate_change_epsilon >= 0.0 && std::isfinite(*iterate_change_epsilon))) {
        bad("iterate-change epsilon must be finite and nonnegative");
    }
    if (init.policy == InitPolicy::Explicit && init.point.empty()) bad("explicit initialization needs a point");
}

}  // namespace linsup
