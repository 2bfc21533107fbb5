#include <benchmark/benchmark.h>

#include <sstream>

#include "cyclex/constructions.hpp"
#include "cyclex/fragments.hpp"
#include "cyclex/graph6.hpp"
#include "cyclex/lemma_checks.hpp"
#include "cyclex/path_systems.hpp"
#include "cyclex/schemes.hpp"
#include "cyclex/statements.hpp"

namespace {

using namespace cyclex;

const Graph pairs5 = join(disjoint_copies(5, complete_graph(2)), complete_graph(4));
const Graph tie21 = decode_graph6("T?B~vrw}Fo?_?_????????@{?Fo?N_?Nb?@o");

void BM_Endfragments(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(endfragments_of(pairs5).size());
}
BENCHMARK(BM_Endfragments);

void BM_AllMaxUpSystems(benchmark::State& state) {
    const FragmentSides sides = endfragments_of(pairs5).front().sides;
    for (auto _ : state) benchmark::DoNotOptimize(all_max_up_systems(pairs5, sides).size());
}
BENCHMARK(BM_AllMaxUpSystems);

void BM_CombinedCycle(benchmark::State& state) {
    const FragmentSides sides = endfragments_of(pairs5).front().sides;
    for (auto _ : state) benchmark::DoNotOptimize(combined_cycle(pairs5, sides).has_value());
}
BENCHMARK(BM_CombinedCycle);

void BM_CheckLemmas(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(check_lemmas(tie21).results.size());
}
BENCHMARK(BM_CheckLemmas)->Unit(benchmark::kMillisecond);

void BM_SchemeSweep(benchmark::State& state) {
    SweepOptions opts;
    opts.max_length = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scheme_soundness_sweep(opts).schemes_checked);
}
BENCHMARK(BM_SchemeSweep)->Arg(8)->Arg(11)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_HuntTheorem1(benchmark::State& state) {
    std::string corpus;
    for (int m = 2; m <= 6; ++m) {
        for (int a = 1; a <= 3; ++a) corpus += encode_graph6(join(disjoint_copies(m, complete_graph(a)), complete_graph(4))) + "\n";
    }
    corpus += encode_graph6(construct_H(1, 3, 5, 4)) + "\n";
    HuntOptions opts;
    opts.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::istringstream in(corpus);
        benchmark::DoNotOptimize(hunt_counterexamples(in, StatementId::T1, opts).scanned);
    }
}
BENCHMARK(BM_HuntTheorem1)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
