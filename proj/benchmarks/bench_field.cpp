#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stablepoly/poly.hpp"

using namespace stablepoly;

namespace {

std::vector<FieldElem> random_elems(const FieldCtx& ctx, size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FieldElem> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.push_back(ctx.elem(1 + rng() % (ctx.order() - 1)));
    return out;
}

void BM_FieldMul(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    auto xs = random_elems(ctx, 1024, 1);
    auto ys = random_elems(ctx, 1024, 2);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xs[i & 1023] * ys[(i * 7) & 1023]);
        ++i;
    }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_FieldInv(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    auto xs = random_elems(ctx, 1024, 3);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.inv(xs[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_FieldInv)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_AbsTrace(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    auto xs = random_elems(ctx, 1024, 4);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ctx.abs_trace(xs[i & 1023]));
        ++i;
    }
}
BENCHMARK(BM_AbsTrace)->Arg(4)->Arg(8)->Arg(16);

void BM_IsIrreducibleDeg8(benchmark::State& state) {
    FieldCtx ctx = make_field(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(5);
    std::vector<Poly> polys;
    for (int k = 0; k < 64; ++k) {
        std::vector<FieldElem> cs;
        for (int i = 0; i < 8; ++i) cs.push_back(ctx.elem(rng() % ctx.order()));
        cs.push_back(ctx.one());
        polys.emplace_back(ctx, std::move(cs));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_irreducible(polys[i & 63]));
        ++i;
    }
}
BENCHMARK(BM_IsIrreducibleDeg8)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
