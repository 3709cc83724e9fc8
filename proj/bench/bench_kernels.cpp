// Serial reference kernels against their OpenMP counterparts, plus one full
// AMS sweep for scale.  Sizes follow the experiment grid.

#include <benchmark/benchmark.h>

#include <map>

#include "linsup/feasibility.hpp"
#include "linsup/kernels.hpp"
#include "linsup/problem_gen.hpp"

namespace {

using namespace linsup;

struct Fixture {
    Problem problem;
    Vector norms;
    Vector x;
    std::vector<double> tableau;
    std::size_t tableau_cols = 0;
};

Fixture make_fixture(std::size_t rows, std::size_t cols) {
    GenSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    spec.seed = 1;
    Fixture f;
    f.problem = generate(spec);
    f.norms = kernels::row_norms_sq(f.problem.A);
    f.x.assign(cols, 10.0);
    // [A | I | b], the shape of a slack-augmented tableau.
    f.tableau_cols = cols + rows + 1;
    f.tableau.assign(rows * f.tableau_cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i) {
        double* row = f.tableau.data() + i * f.tableau_cols;
        for (std::size_t j = 0; j < cols; ++j) row[j] = f.problem.A(i, j);
        row[cols + i] = 1.0;
        row[f.tableau_cols - 1] = f.problem.b[i];
    }
    return f;
}

const Fixture& fixture(std::size_t rows) {
    static std::map<std::size_t, Fixture> cache;
    auto it = cache.find(rows);
    if (it == cache.end()) it = cache.emplace(rows, make_fixture(rows, rows * 5 / 4)).first;
    return it->second;
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    Vector out(f.problem.rows());
    for (auto _ : state) {
        if constexpr (Parallel) kernels::parallel::matvec(f.problem.A, f.x, out);
        else kernels::serial::matvec(f.problem.A, f.x, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetBytesProcessed(state.iterations() * f.problem.A.data().size() * sizeof(double));
}

template <bool Parallel>
void BM_Proximity(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        double v = Parallel ? kernels::parallel::proximity(f.problem.A, f.problem.b, f.norms, f.x)
                            : kernels::serial::proximity(f.problem.A, f.problem.b, f.norms, f.x);
        benchmark::DoNotOptimize(v);
    }
    state.SetBytesProcessed(state.iterations() * f.problem.A.data().size() * sizeof(double));
}

template <bool Parallel>
void BM_Eliminate(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    std::vector<double> work;
    std::size_t pivot = 0;
    for (auto _ : state) {
        state.PauseTiming();
        work = f.tableau;
        pivot = (pivot + 1) % f.problem.rows();
        state.ResumeTiming();
        if constexpr (Parallel) kernels::parallel::eliminate(work, f.tableau_cols, pivot, pivot % f.problem.cols());
        else kernels::serial::eliminate(work, f.tableau_cols, pivot, pivot % f.problem.cols());
        benchmark::DoNotOptimize(work.data());
    }
}

void BM_AmsSweep(benchmark::State& state) {
    const Fixture& f = fixture(static_cast<std::size_t>(state.range(0)));
    const AmsOperator ams(f.problem, 1.0);
    Vector y = f.x;
    for (auto _ : state) {
        y = f.x;
        ams.apply(y);
        benchmark::DoNotOptimize(y.data());
    }
}

#define LINSUP_SIZES Arg(200)->Arg(400)->Arg(800)->Arg(1600)->Unit(benchmark::kMicrosecond)

BENCHMARK(BM_Matvec<false>)->Name("matvec/serial")->LINSUP_SIZES;
BENCHMARK(BM_Matvec<true>)->Name("matvec/parallel")->LINSUP_SIZES;
BENCHMARK(BM_Proximity<false>)->Name("proximity/serial")->LINSUP_SIZES;
BENCHMARK(BM_Proximity<true>)->Name("proximity/parallel")->LINSUP_SIZES;
BENCHMARK(BM_Eliminate<false>)->Name("eliminate/serial")->LINSUP_SIZES;
BENCHMARK(BM_Eliminate<true>)->Name("eliminate/parallel")->LINSUP_SIZES;
BENCHMARK(BM_AmsSweep)->Name("ams_sweep/serial")->LINSUP_SIZES;

}  // namespace

BENCHMARK_MAIN();
