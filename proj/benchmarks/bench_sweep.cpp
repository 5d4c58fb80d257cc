#include <benchmark/benchmark.h>

#include "stablepoly/dynamics.hpp"
#include "stablepoly/funcfield.hpp"

using namespace stablepoly;

namespace {

void BM_TheoremSweep(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    const unsigned threads = static_cast<unsigned>(state.range(1));
    uint64_t triples = 0;
    for (auto _ : state) {
        SweepReport r = verify_theorem_sweep(ctx, false, threads);
        benchmark::DoNotOptimize(r.count_fff_irred);
        triples += r.total_triples;
    }
    state.SetItemsProcessed(static_cast<int64_t>(triples));
}
BENCHMARK(BM_TheoremSweep)
    ->Args({4, 1})
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({6, 0})  // 0 = hardware thread count
    ->Unit(benchmark::kMillisecond);

void BM_ProofReplay(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    // first qualifying monic spec
    QuadSpec spec = make_quad_spec(ctx.one(), ctx.one(), ctx.one());
    bool found = false;
    for (uint64_t av = 1; av < ctx.order() && !found; ++av)
        for (uint64_t bv = 1; bv < ctx.order() && !found; ++bv) {
            QuadSpec cand = make_quad_spec(ctx.one(), ctx.elem(av), ctx.elem(bv));
            if (quad_irred_trace(cand.c, cand.a, cand.b) && is_irreducible(iterate(cand, 2))) {
                spec = cand;
                found = true;
            }
        }
    for (auto _ : state) {
        ProofTranscript t = proof_replay(spec);
        benchmark::DoNotOptimize(t.steps.size());
    }
}
BENCHMARK(BM_ProofReplay)->Arg(1)->Arg(4)->Arg(6);

void BM_StableExample(benchmark::State& state) {
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        StabilityTranscript t = verify_stable_example(n_max);
        benchmark::DoNotOptimize(t.size());
    }
}
BENCHMARK(BM_StableExample)->Arg(8)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
