// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS to vary the
// thread count, e.g. OMP_NUM_THREADS=8 ./dyck_bench.

#include <benchmark/benchmark.h>

#include "dyck/batch.hpp"
#include "dyck/catalan.hpp"
#include "dyck/generate.hpp"
#include "dyck/kernels.hpp"
#include "dyck/triangle.hpp"

namespace {

using namespace dyck;

Exec exec_of(const benchmark::State& state) {
    return state.range(0) ? Exec::Parallel : Exec::Serial;
}

void BM_FillTriangle(benchmark::State& state) {
    const auto exec = exec_of(state);
    const auto columns = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        PackedTriangle tri;
        tri.isolines.reserve(columns);
        while (tri.columns < columns)
            kernels::fill_column(tri, exec);
        benchmark::DoNotOptimize(tri.isolines.back().back());
    }
    state.SetLabel(exec == Exec::Parallel ? "omp" : "serial");
}
BENCHMARK(BM_FillTriangle)->ArgsProduct({{0, 1}, {500, 2000}})->Unit(benchmark::kMillisecond);

void BM_ColumnSquareSum(benchmark::State& state) {
    const auto exec = exec_of(state);
    const auto column = DynamicsTable::shared().column(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::square_sum(column, exec));
    state.SetLabel(exec == Exec::Parallel ? "omp" : "serial");
}
BENCHMARK(BM_ColumnSquareSum)->ArgsProduct({{0, 1}, {1000, 4000}})->Unit(benchmark::kMicrosecond);

void BM_RankBatch(benchmark::State& state) {
    const auto exec = exec_of(state);
    std::vector<DyckWord> words;
    for (const auto& w : generate(static_cast<std::size_t>(state.range(1))))
        words.push_back(w);
    const Codec& codec = Codec::standard();
    codec.prepare(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::rank_batch(codec, words, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
    state.SetLabel(exec == Exec::Parallel ? "omp" : "serial");
}
BENCHMARK(BM_RankBatch)->ArgsProduct({{0, 1}, {10, 12}})->Unit(benchmark::kMillisecond);

void BM_UnrankBatch(benchmark::State& state) {
    const auto exec = exec_of(state);
    const auto n = static_cast<std::size_t>(state.range(1));
    const BigInt first = catalan_prefix_sum(n - 1) + 1;
    const auto count = static_cast<std::size_t>(catalan(n));
    const Codec& codec = Codec::standard();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::unrank_batch(codec, first, count, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count));
    state.SetLabel(exec == Exec::Parallel ? "omp" : "serial");
}
BENCHMARK(BM_UnrankBatch)->ArgsProduct({{0, 1}, {10, 12}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
