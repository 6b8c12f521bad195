#include <benchmark/benchmark.h>

#include "polyid/instance.hpp"
#include "polyid/report.hpp"
#include "polyid/toric.hpp"

namespace {

using namespace polyid;

const ToricMap& plus_map() {
    static ToricMap t = [] {
        Instance inst = parse_instance(
            "#####\n##.##\n#...#\n##.##\n#####\nQ: 3,2\nQ: 2,3\nQ: 3,3\nQ: 4,3\nQ: 3,4\n");
        return build_toric_map(inst.p, resolve_family(inst, false));
    }();
    return t;
}

GroebnerOptions mode(bool parallel) {
    GroebnerOptions o;
    o.parallel = parallel;
    return o;
}

void bm_minor_basis(benchmark::State& state) {
    const ToricMap& t = plus_map();
    std::vector<Binomial> gens = inner_minor_generators(t.p);
    GroebnerOptions o = mode(state.range(0) != 0);
    for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, t.canonical, o));
}

void bm_markov_sweep(benchmark::State& state) {
    const ToricMap& t = plus_map();
    GroebnerOptions o = mode(state.range(0) != 0);
    for (auto _ : state) benchmark::DoNotOptimize(markov_basis(t, o));
}

void bm_kernel_enumeration(benchmark::State& state) {
    const ToricMap& t = plus_map();
    bool parallel = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_kernel_binomials(t, 3, parallel));
}

}  // namespace

BENCHMARK(bm_minor_basis)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(bm_markov_sweep)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(bm_kernel_enumeration)->Arg(0)->Arg(1)->ArgName("parallel");

BENCHMARK_MAIN();
