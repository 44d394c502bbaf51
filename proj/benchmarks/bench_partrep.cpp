#include <benchmark/benchmark.h>

#include <vector>

#include "partrep/partition_engine.hpp"
#include "partrep/power_geometry.hpp"
#include "partrep/repulsion_tables.hpp"
#include "partrep/sun_verifier.hpp"

namespace {

using namespace partrep;

const PartitionTable& table_25000() {
    static const PartitionTable table = PartitionTable::build(kDefaultRepulsionNMax);
    return table;
}

void BM_TableBuild(benchmark::State& state) {
    const auto n_max = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(PartitionTable::build(n_max));
    }
}
BENCHMARK(BM_TableBuild)->Arg(1000)->Arg(5000)->Arg(25000)->Unit(benchmark::kMillisecond);

void BM_FloorKthRoot(benchmark::State& state) {
    const auto& value = table_25000()[kDefaultRepulsionNMax];
    const auto k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(floor_kth_root(value, k));
    }
}
BENCHMARK(BM_FloorKthRoot)->Arg(2)->Arg(3)->Arg(8)->Arg(50)->Arg(100);

void BM_DeltaColumn(benchmark::State& state) {
    const auto k = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_column(table_25000(), k, kDefaultRepulsionNMax));
    }
}
BENCHMARK(BM_DeltaColumn)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_GridRow(benchmark::State& state) {
    const std::vector<unsigned long> k = {static_cast<unsigned long>(state.range(0))};
    const auto exponents = default_d_exponents();
    for (auto _ : state) {
        benchmark::DoNotOptimize(mk_grid(table_25000(), k, exponents, kDefaultRepulsionNMax, 1));
    }
}
BENCHMARK(BM_GridRow)->Arg(2)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SunScan(benchmark::State& state) {
    const auto n_max = static_cast<Index>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sun_direct_scan(table_25000(), n_max, 1));
    }
}
BENCHMARK(BM_SunScan)->Arg(5000)->Arg(25000)->Unit(benchmark::kMillisecond);

void BM_SMembership(benchmark::State& state) {
    Index n = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s_membership(table_25000(), n));
        n = n == 2000 ? 2 : n + 1;
    }
}
BENCHMARK(BM_SMembership);

}  // namespace

BENCHMARK_MAIN();
