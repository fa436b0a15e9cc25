#include <benchmark/benchmark.h>

#include "fhseq/construction.hpp"
#include "fhseq/correlation.hpp"
#include "fhseq/cyclotomy.hpp"
#include "fhseq/theory.hpp"

namespace {

using namespace fhseq;

void BM_BuildTables(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    const std::int64_t q = state.range(1);
    Params params = build_params(p, q);
    for (auto _ : state) {
        CyclotomicTables tables = build_tables(params);
        benchmark::DoNotOptimize(tables.cell_index.data());
    }
    state.SetComplexityN(params.L);
}
BENCHMARK(BM_BuildTables)->Args({5, 17})->Args({101, 151})->Args({997, 1009})->Complexity();

void BM_SequenceSet(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    const std::int64_t q = state.range(1);
    Partition partition = build_partition(build_tables(build_params(p, q)));
    for (auto _ : state) {
        FHSequenceSet set = build_sequence_set(partition);
        benchmark::DoNotOptimize(set.sequences.data());
    }
}
BENCHMARK(BM_SequenceSet)->Args({101, 151})->Args({997, 1009});

void BM_HammingCorrelation(benchmark::State& state) {
    FHSequenceSet set =
        build_sequence_set(build_partition(build_tables(build_params(997, 1009))));
    std::int64_t shift = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hamming_correlation(set.sequences[0], set.sequences[1], shift));
        shift = shift % (set.params.L - 1) + 1;
    }
}
BENCHMARK(BM_HammingCorrelation);

void BM_Profile(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    const std::int64_t q = state.range(1);
    FHSequenceSet set = build_sequence_set(build_partition(build_tables(build_params(p, q))));
    for (auto _ : state) {
        CorrelationProfile profile = correlation_profile(set, 1);
        benchmark::DoNotOptimize(profile.total_cross);
    }
}
BENCHMARK(BM_Profile)->Args({5, 17})->Args({13, 17})->Args({31, 61});

void BM_PredictCrossFullShiftRange(benchmark::State& state) {
    CyclotomicTables tables = build_tables(build_params(31, 61));
    for (auto _ : state) {
        std::int64_t sum = 0;
        for (std::int64_t w = 1; w < tables.params.L; ++w)
            sum += predict_cross(tables, 0, 1, w).value;
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_PredictCrossFullShiftRange);

void BM_StructureLemmas(benchmark::State& state) {
    CyclotomicTables tables = build_tables(build_params(13, 17));
    for (auto _ : state) {
        LemmaReport report = verify_structure_lemmas(tables);
        benchmark::DoNotOptimize(report.checks.data());
    }
}
BENCHMARK(BM_StructureLemmas);

}  // namespace

BENCHMARK_MAIN();
