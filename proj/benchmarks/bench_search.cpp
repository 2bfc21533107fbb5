#include <benchmark/benchmark.h>

#include <random>

#include "cyclex/constructions.hpp"
#include "cyclex/cycles.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/invariants.hpp"

namespace {

using namespace cyclex;

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) b.add_edge(u, v);
        }
    }
    return b.build();
}

const Graph& fixture(int which) {
    static const Graph graphs[] = {
        join(disjoint_copies(4, complete_graph(2)), complete_graph(3)),
        join(disjoint_copies(5, complete_graph(2)), complete_graph(4)),
        construct_H(1, 3, 5, 4),
        petersen_graph(),
        decode_graph6("R?~vfboA?G???????Bw?}?Fo?^C?M?"),
    };
    return graphs[which];
}

void BM_Circumference(benchmark::State& state) {
    const Graph& g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(circumference(g).length);
    state.SetLabel("n=" + std::to_string(g.order()));
}
BENCHMARK(BM_Circumference)->DenseRange(0, 4);

void BM_DominatingCycle(benchmark::State& state) {
    const Graph& g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(find_dominating_cycle(g).has_value());
}
BENCHMARK(BM_DominatingCycle)->DenseRange(0, 4);

void BM_Connectivity(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 11);
    for (auto _ : state) benchmark::DoNotOptimize(connectivity(g));
}
BENCHMARK(BM_Connectivity)->Arg(16)->Arg(32)->Arg(64);

void BM_Independence(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 12);
    for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_Independence)->Arg(16)->Arg(32)->Arg(48);

void BM_CircumferenceRandom(benchmark::State& state) {
    const Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 13);
    for (auto _ : state) benchmark::DoNotOptimize(circumference(g).length);
}
BENCHMARK(BM_CircumferenceRandom)->Arg(10)->Arg(14)->Arg(18);

void BM_Graph6RoundTrip(benchmark::State& state) {
    const Graph g = random_graph(62, 0.5, 14);
    for (auto _ : state) benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace
