#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "linsup/core.hpp"
#include "linsup/problem_gen.hpp"

namespace linsup {
namespace {

Problem identity_problem() {
    Problem p;
    p.A = DenseMatrix(2, 2, {1, 0, 0, 1});
    p.b = {1, 1};
    p.c = {1, 1};
    return p;
}

ErrorCode code_of(const Problem& p) {
    try {
        validate(p);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "validate accepted an invalid problem";
    return ErrorCode::IoError;
}

TEST(Validate, AcceptsWellFormedInstance) { EXPECT_NO_THROW(validate(identity_problem())); }

TEST(Validate, RejectsZeroRow) {
    Problem p = identity_problem();
    p.A(1, 0) = 0.0;
    p.A(1, 1) = 0.0;
    try {
        validate(p);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroRow);
        EXPECT_EQ(e.index(), 1u);
    }
}

TEST(Validate, RejectsZeroCost) {
    Problem p = identity_problem();
    p.c = {0, 0};
    EXPECT_EQ(code_of(p), ErrorCode::ZeroCost);
}

TEST(Validate, RejectsDimensionMismatch) {
    Problem p = identity_problem();
    p.b = {1};
    EXPECT_EQ(code_of(p), ErrorCode::DimensionMismatch);
    p = identity_problem();
    p.c = {1, 1, 1};
    EXPECT_EQ(code_of(p), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of(Problem{}), ErrorCode::DimensionMismatch);
}

TEST(Validate, RejectsNonFinite) {
    Problem p = identity_problem();
    p.A(0, 1) = std::numeric_limits<double>::infinity();
    EXPECT_EQ(code_of(p), ErrorCode::NonFiniteEntry);
    p = identity_problem();
    p.b[0] = std::nan("");
    EXPECT_EQ(code_of(p), ErrorCode::NonFiniteEntry);
}

TEST(ProblemFormat, ParsesDefinitionExample) {
    std::istringstream in("2 2\n1 0\n0 1\n1 1\n1 1\n");
    const Problem p = parse_problem(in);
    EXPECT_EQ(p, identity_problem());
}

TEST(ProblemFormat, TruncatedFileIsParseError) {
    std::istringstream in("2 2\n1 0\n0 1\n1 1\n1\n");
    try {
        parse_problem(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.index(), 5u);
    }
}

TEST(ProblemFormat, MalformedTokenReportsLine) {
    std::istringstream in("2 2\n1 0\n0 x\n1 1\n1 1\n");
    try {
        parse_problem(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ParseError);
        EXPECT_EQ(e.index(), 3u);
    }
}

TEST(ProblemFormat, TrailingTokensRejected) {
    std::istringstream in("1 1\n1\n1\n1\n7\n");
    EXPECT_THROW(parse_problem(in), Error);
}

TEST(ProblemFormat, ParsedProblemIsValidated) {
    std::istringstream in("1 2\n0 0\n1\n1 1\n");
    try {
        parse_problem(in);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroRow);
    }
}

TEST(ProblemFormat, GeneratedInstanceRoundTripsThroughFile) {
    GenSpec spec;
    spec.rows = 80;
    spec.cols = 100;
    spec.seed = 11;
    const Problem p = generate(spec);
    const auto path = std::filesystem::temp_directory_path() / "linsup_roundtrip.txt";
    write_problem(p, path);
    EXPECT_EQ(read_problem(path), p);
    std::filesystem::remove(path);
}

// Property: the 17-digit text form reproduces every double exactly, including
// awkward magnitudes and subnormals.
TEST(ProblemFormat, RoundTripIsExactForArbitraryDoubles) {
    CounterRng rng(99, RngStream::Generator);
    for (int trial = 0; trial < 50; ++trial) {
        Problem p;
        const std::size_t I = 1 + rng.uniform_int(0, 5);
        const std::size_t J = 1 + rng.uniform_int(0, 5);
        p.A = DenseMatrix(I, J);
        auto wild = [&rng] {
            const double mant = rng.uniform(-1.0, 1.0);
            const int exp = static_cast<int>(rng.uniform_int(0, 600)) - 300;
            return std::ldexp(mant, exp) + (mant == 0.0 ? 1.0 : 0.0);
        };
        for (double& a : p.A.data()) a = wild();
        for (std::size_t i = 0; i < I; ++i) p.A(i, 0) = 1.0 + std::abs(wild());
        p.b.resize(I);
        for (double& v : p.b) v = wild();
        p.c.resize(J);
        for (double& v : p.c) v = wild();
        p.c[0] = 4.9e-324;  // smallest subnormal
        p.c.back() += 1.0;

        std::stringstream ss;
        format_problem(p, ss);
        EXPECT_EQ(parse_problem(ss), p);
    }
}

TEST(SolverConfig, RejectsOutOfRangeTunables) {
    SolverConfig ok;
    EXPECT_NO_THROW(ok.validate());

    auto rejects = [](auto mutate) {
        SolverConfig c;
        mutate(c);
        try {
            c.validate();
        } catch (const Error& e) {
            return e.code() == ErrorCode::InvalidConfig;
        }
        return false;
    };
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.alpha = 1.0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.alpha = 0.0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.inner_steps = 0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.lambda = 2.0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.lambda = 0.0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.prox_epsilon = -1e-3; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.prox_epsilon = std::numeric_limits<double>::infinity(); }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.max_sweeps = 0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.iterate_change_epsilon = -1.0; }));
    EXPECT_TRUE(rejects([](SolverConfig& c) { c.init = Initialization::explicit_point({}); }));
}

}  // namespace
}  // namespace linsup
