#include <benchmark/benchmark.h>

#include <pcls/chromatic.hpp>
#include <pcls/corpus.hpp>
#include <pcls/independence.hpp>
#include <pcls/racg.hpp>
#include <pcls/root_theory.hpp>
#include <pcls/trace_monoid.hpp>

using namespace pcls;

namespace {

MarkedGraph cycle_graph(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        names.push_back("v" + std::to_string(v));
        edges.push_back({v, (v + 1) % n});
    }
    return make_graph(names, edges, {}, {});
}

void bm_ordinary_chromatic_cycle(benchmark::State& state) {
    SimpleGraph g = cycle_graph(static_cast<int>(state.range(0))).simple();
    for (auto _ : state) {
        QPoly p = ordinary_chromatic(g);
        benchmark::DoNotOptimize(p);
    }
}

void bm_marked_chromatic(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("k4-mixed");
    ExponentVec m = ExponentVec::dense({1, 1, 2, static_cast<int>(state.range(0))});
    for (auto _ : state) {
        QPoly p = marked_chromatic(g, m);
        benchmark::DoNotOptimize(p);
    }
}

void bm_marked_chromatic_partitions(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("k4-mixed");
    ExponentVec m = ExponentVec::dense({1, 1, 2, static_cast<int>(state.range(0))});
    for (auto _ : state) {
        QPoly p = marked_chromatic_via_partitions(g, m);
        benchmark::DoNotOptimize(p);
    }
}

void bm_series_inverse(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("tri-pendant");
    Truncation t = Truncation::by_total(g.n(), static_cast<int>(state.range(0)));
    MSeries f = indep_series(g, t, -1);
    for (auto _ : state) {
        MSeries inv = f.inverse();
        benchmark::DoNotOptimize(inv);
    }
}

void bm_trace_word_generation(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("path4");
    Truncation t = Truncation::by_total(g.n(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MSeries s = ug_hilbert(g, t, TraceEngine::WordGeneration);
        benchmark::DoNotOptimize(s);
    }
}

void bm_trace_class_bfs(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("path4");
    Truncation t = Truncation::by_total(g.n(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        MSeries s = ug_hilbert(g, t, TraceEngine::ClassBfs);
        benchmark::DoNotOptimize(s);
    }
}

void bm_racg_bfs(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("c4");
    for (auto _ : state) {
        MSeries s = racg_bfs(g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(s);
    }
}

void bm_root_enumeration(benchmark::State& state) {
    const MarkedGraph& g = corpus_graph("tri-pendant");
    for (auto _ : state) {
        auto roots = enumerate_roots(g, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(roots);
    }
}

BENCHMARK(bm_ordinary_chromatic_cycle)->Arg(8)->Arg(12)->Arg(16);
BENCHMARK(bm_marked_chromatic)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(bm_marked_chromatic_partitions)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK(bm_series_inverse)->Arg(6)->Arg(10)->Arg(14);
BENCHMARK(bm_trace_word_generation)->Arg(4)->Arg(6);
BENCHMARK(bm_trace_class_bfs)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bm_racg_bfs)->Arg(6)->Arg(9)->Arg(12);
BENCHMARK(bm_root_enumeration)->Arg(4)->Arg(6)->Arg(8);

} // namespace

BENCHMARK_MAIN();
