#include <benchmark/benchmark.h>

#include "sejc/types.hpp"
#include "sejc/value.hpp"

using namespace sejc;

static void BM_NumAdd(benchmark::State& state) {
    Value a = Value::ratio(355, 113);
    Value b = Value::ratio(-113, 355);
    for (auto _ : state) benchmark::DoNotOptimize(num_add(a, b));
}
BENCHMARK(BM_NumAdd);

static void BM_TypeLub(benchmark::State& state) {
    for (auto _ : state)
        for (SrcType a : kAllSrcTypes)
            for (SrcType b : kAllSrcTypes)
                benchmark::DoNotOptimize(type_lub(a, b));
}
BENCHMARK(BM_TypeLub);

BENCHMARK_MAIN();
