#include "domorder/canonical.hpp"
#include "domorder/catalog.hpp"
#include "domorder/dominance_order.hpp"
#include "domorder/forbidden_set.hpp"
#include "domorder/graph_expr.hpp"
#include "domorder/graphic.hpp"
#include "domorder/induced.hpp"
#include "domorder/monotone.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace domorder;

static void canonical_random(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937 rng(1);
    std::bernoulli_distribution edge(0.5);
    std::vector<SmallGraph> graphs;
    for (int i = 0; i < 64; ++i) {
        SmallGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        graphs.push_back(g);
    }
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
}
BENCHMARK(canonical_random)->Arg(8)->Arg(16)->Arg(24)->Arg(31);

static void canonical_structured(benchmark::State & state)
{
    const std::vector<SmallGraph> graphs = {
        cone(empty_graph(20)),
        cycle_graph(24),
        disjoint_copies(complete_graph(3), 8),
        build_named("co(6K2)"),
        subdivide_edge(complete_graph(6), 0, 1),
    };
    const auto & g = graphs[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(canonical_structured)->DenseRange(0, 4);

static void graphs_of_order_bench(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(graphs_of_order(static_cast<int>(state.range(0))));
}
BENCHMARK(graphs_of_order_bench)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void realizations_bench(benchmark::State & state)
{
    const std::vector<Partition> sequences = {
        {2, 2, 2, 2, 2},
        {3, 3, 3, 3, 2, 2, 2, 2},
        {4, 3, 3, 3, 2, 2, 2, 1},
        {3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
    };
    const auto & d = sequences[static_cast<std::size_t>(state.range(0))];
    for (auto _ : state)
        benchmark::DoNotOptimize(realizations(d));
    state.SetLabel(d.to_string());
}
BENCHMARK(realizations_bench)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

static void dominance_order_bench(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(build_dominance_order(static_cast<int>(state.range(0)), true));
}
BENCHMARK(dominance_order_bench)->Arg(12)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);

static void induced_bench(benchmark::State & state)
{
    const SmallGraph host = build_named("co(C9)+P5");
    const SmallGraph pattern = build_named("co(P3+K2)");
    for (auto _ : state)
        benchmark::DoNotOptimize(contains_induced(host, pattern));
}
BENCHMARK(induced_bench);

// Fresh context per iteration, so caching inside one search is measured but not across runs.
static void search_bench(benchmark::State & state)
{
    const std::vector<std::pair<const char *, int>> cases = {
        {"2K2, C4", 10},
        {"2K2, C4, C5", 14},
        {"2K2, P4, diamond", 14},
    };
    const auto & [text, max_sum] = cases[static_cast<std::size_t>(state.range(0))];
    const auto f = parse_forbidden_set(text);
    for (auto _ : state) {
        SearchContext ctx;
        benchmark::DoNotOptimize(search_counterexample(f, max_sum, ctx));
    }
    state.SetLabel(f.name() + " to " + std::to_string(max_sum));
}
BENCHMARK(search_bench)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void classify_pairs_bench(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(classify_sets(3, 2, 12));
}
BENCHMARK(classify_pairs_bench)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
