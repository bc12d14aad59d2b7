#include <benchmark/benchmark.h>

#include <random>

#include "hgpred/classical_code.hpp"
#include "hgpred/coloring.hpp"
#include "hgpred/graphs.hpp"
#include "hgpred/hgp.hpp"
#include "hgpred/memsim.hpp"
#include "hgpred/planner.hpp"
#include "hgpred/reducer.hpp"
#include "hgpred/sescheduler.hpp"
#include "hgpred/verifier.hpp"

using namespace hgpred;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1) m.set(r, c, true);
    return m;
}

void BM_rank(benchmark::State& state) {
    BitMatrix m = random_matrix(state.range(0), 2 * state.range(0), 11);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(128)->Arg(512)->Arg(1024);

void BM_matmul(benchmark::State& state) {
    BitMatrix a = random_matrix(state.range(0), state.range(0), 3);
    BitMatrix b = random_matrix(state.range(0), state.range(0), 4);
    for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}
BENCHMARK(BM_matmul)->Arg(128)->Arg(512);

void BM_kron(benchmark::State& state) {
    BitMatrix a = random_matrix(29, 45, 5);   // Tutte-Coxeter incidence shape
    BitMatrix id = BitMatrix::identity(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, id));
}
BENCHMARK(BM_kron)->Arg(21)->Arg(45);

void BM_build_hgp(benchmark::State& state) {
    ClassicalCode c = cycle_code(heawood_graph());
    for (auto _ : state) benchmark::DoNotOptimize(build_hgp(c, c));
}
BENCHMARK(BM_build_hgp);

void BM_reduction_pipeline(benchmark::State& state) {
    ClassicalCode c = cycle_code(heawood_graph());
    for (auto _ : state) {
        CssCode code = build_hgp(c, c);
        CheckColoring col = greedy_color(check_adjacency_graph(c));
        ProductColoring pc = product_coloring(col, col, code.layout);
        ReductionPlan plan = build_reduction(code, pc, choose_schedule(pc));
        benchmark::DoNotOptimize(apply_reduction(code, plan));
    }
}
BENCHMARK(BM_reduction_pipeline);

struct SimFixture {
    CssCode reduced;
    DecodingGraph graph;
    SimFixture() {
        ClassicalCode c = cycle_code(complete_bipartite_graph(3, 3));
        CssCode code = build_hgp(c, c);
        canonical_logicals(code, c, c);
        CheckColoring col = greedy_color(check_adjacency_graph(c));
        ProductColoring pc = product_coloring(col, col, code.layout);
        ReductionPlan plan = build_reduction(code, pc, choose_schedule(pc));
        reduced = apply_reduction(code, plan);
        graph = build_decoding_graph(reduced, 5);
        attach_priors(graph, NoiseModel{3e-3, 3e-3, 5});
    }
};

void BM_bp_decode(benchmark::State& state) {
    static SimFixture fx;
    NoiseModel noise{3e-3, 3e-3, 5};
    std::uint64_t seed = 0;
    for (auto _ : state) {
        MemorySample s = sample_memory(fx.reduced, fx.graph, noise, ++seed);
        benchmark::DoNotOptimize(bp_decode(fx.graph, s.detectors));
    }
}
BENCHMARK(BM_bp_decode);

void BM_distance_certification(benchmark::State& state) {
    static SimFixture fx;
    for (auto _ : state)
        benchmark::DoNotOptimize(certify_distance(fx.reduced, 4, state.range(0), Pauli::X));
}
BENCHMARK(BM_distance_certification)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
