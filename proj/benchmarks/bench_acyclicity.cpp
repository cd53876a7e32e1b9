#include <benchmark/benchmark.h>

#include "skewac/acyclicity.hpp"
#include "skewac/decomposition.hpp"
#include "skewac/oracle.hpp"

namespace {

using namespace skewac;

SkewGraph composed_instance(std::uint32_t pairs, std::uint32_t arc_pairs, std::uint64_t seed) {
    oracle::GenSpec spec;
    spec.kind = oracle::GenSpec::Kind::WeaklyAcyclicComposed;
    spec.nodes = pairs;
    spec.edges = arc_pairs;
    spec.seed = seed;
    return *oracle::generate(spec).skew;
}

void BM_Check(benchmark::State& state) {
    const auto pairs = static_cast<std::uint32_t>(state.range(0));
    const SkewGraph g = composed_instance(pairs, 4 * pairs, 7);
    for (auto _ : state) {
        Verdict v = acyclicity_test(g);
        benchmark::DoNotOptimize(v.weakly_acyclic());
    }
    state.SetItemsProcessed(state.iterations() * (g.node_count() + g.arc_count()));
}
BENCHMARK(BM_Check)->Arg(5000)->Arg(50000)->Arg(500000)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
    const auto pairs = static_cast<std::uint32_t>(state.range(0));
    const SkewGraph g = composed_instance(pairs, 4 * pairs, 7);
    for (auto _ : state) {
        DecomposeResult d = decompose(g);
        benchmark::DoNotOptimize(d.weakly_acyclic());
    }
    state.SetItemsProcessed(state.iterations() * (g.node_count() + g.arc_count()));
}
BENCHMARK(BM_Decompose)->Arg(5000)->Arg(50000)->Arg(500000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
