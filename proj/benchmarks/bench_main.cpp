#include <benchmark/benchmark.h>

#include <loopblocks/linkage.hpp>
#include <loopblocks/spectral.hpp>
#include <loopblocks/twisted.hpp>

using namespace loopblocks;

static void BM_FiberD4Triality(benchmark::State &state)
{
    const FoldedSystem fs = build_folding("D4", 3);
    const auto c = static_cast<std::int64_t>(state.range(0));
    TwistedPoly p = twisted_pi_lambda_a(fs, Weight{c, c}, {"a", 0});
    p = twisted_multiply(p, twisted_pi_lambda_a(fs, Weight{c, 0}, {"b", 1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fiber(fs, p));
    }
    state.counters["members"] = static_cast<double>(fiber_size(fs, p));
}
BENCHMARK(BM_FiberD4Triality)->DenseRange(1, 3);

static void BM_BlockLabelE6(benchmark::State &state)
{
    const FoldedSystem fs = build_folding("E6", 2);
    const TwistedPoly p = twisted_pi_lambda_a(fs, Weight{1, 2, 0, 1}, {"a", 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_label(fs, p));
    }
}
BENCHMARK(BM_BlockLabelE6);

static void BM_AdjointDecompose(benchmark::State &state, const char *type)
{
    const RootSystem rs = build_root_system(type);
    Weight mu(rs.rank());
    for (auto &x : mu) {
        x = state.range(0);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(adjoint_tensor_decompose(rs, mu));
    }
}
BENCHMARK_CAPTURE(BM_AdjointDecompose, A3, "A3")->Arg(1)->Arg(3);
BENCHMARK_CAPTURE(BM_AdjointDecompose, E6, "E6")->Arg(1)->Arg(3);

static void BM_Freudenthal(benchmark::State &state, const char *type)
{
    const RootSystem rs = build_root_system(type);
    Weight lam(rs.rank());
    for (auto &x : lam) {
        x = state.range(0);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(weight_multiplicities(rs, lam));
    }
}
BENCHMARK_CAPTURE(BM_Freudenthal, D4, "D4")->Arg(1)->Arg(2);
BENCHMARK_CAPTURE(BM_Freudenthal, E6, "E6")->Arg(1);

static void BM_LinkageChainA2(benchmark::State &state)
{
    const RootSystem rs = build_root_system("A2");
    const Weight lam{state.range(0), 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(linkage_chain(rs, lam, Weight{0, 0}));
    }
}
BENCHMARK(BM_LinkageChainA2)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
