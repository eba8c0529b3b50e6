#include <benchmark/benchmark.h>

#include "twistmod/checks.hpp"
#include "twistmod/mode_table.hpp"
#include "twistmod/twisted_module.hpp"

using namespace twistmod;

namespace {

struct Fixture {
    LieAlgebraPtr g;
    InducedModulePtr v;
    explicit Fixture(int rank, int cutoff) : g(LieAlgebra::build('A', rank)), v(InducedModule::vacuum(g, Rational(2), Rational(cutoff))) {}
};

// apply_mode is memoized per module; a fresh module measures the uncached path
void BM_ApplyModeCold(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Fixture fx(1, depth + 1);
        long terms = 0;
        for (const auto& w : basis_vectors(*fx.v, depth))
            for (int gen = 0; gen < fx.g->dim(); ++gen) terms += static_cast<long>(fx.v->apply_mode(gen, 1, w).size());
        benchmark::DoNotOptimize(terms);
    }
}
BENCHMARK(BM_ApplyModeCold)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DeltaApply(benchmark::State& state) {
    Fixture fx(1, 4);
    const LieElt a = state.range(0) == 0 ? fx.g->element({{"h", Rational(1, 2)}}) : fx.g->element({{"e", Rational(1)}});
    const auto d = DeltaOperator::make(fx.v, a);
    const auto basis = basis_vectors(*fx.v, 3);
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& w : basis) n += d->apply(w).size();
        benchmark::DoNotOptimize(n);
    }
    state.SetLabel(state.range(0) == 0 ? "h/2" : "e");
}
BENCHMARK(BM_DeltaApply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VertexOperatorSeries(benchmark::State& state) {
    Fixture fx(static_cast<int>(state.range(0)), 3);
    const auto gens = generator_vectors(*fx.v);
    const auto basis = basis_vectors(*fx.v, 2);
    for (auto _ : state) {
        // fresh cache each iteration
        const VertexOperators y(fx.v, fx.v);
        std::size_t n = 0;
        for (const auto& v : gens)
            for (const auto& w : basis) n += y.series(v, w, Rational(-4), Rational(2)).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_VertexOperatorSeries)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ModeTable(benchmark::State& state) {
    Fixture fx(1, 3);
    const auto base = TwistedModule::untwisted(fx.v);
    const auto m = make_twisted(make_twisted(base, fx.g->element({{"h", Rational(1, 2)}})), fx.g->element({{"e", Rational(1)}}));
    const int range = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (int i = 0; i < fx.g->dim(); ++i) {
            auto t = mode_table(*m, fx.g->basis_vector(i), fx.g->name(i), range);
            benchmark::DoNotOptimize(t);
        }
    }
}
BENCHMARK(BM_ModeTable)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_TwistedGeneratorMode(benchmark::State& state) {
    Fixture fx(1, 4);
    const auto m = make_twisted(TwistedModule::untwisted(fx.v), fx.g->element({{"h", Rational(1, 3)}}));
    const auto basis = basis_vectors(*fx.v, 2);
    const LieElt e = fx.g->element({{"e", Rational(1)}});
    for (auto _ : state) {
        std::size_t n = 0;
        for (const auto& w : basis) n += m->generator_mode(e, Rational(2, 3), 0, w).size();
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_TwistedGeneratorMode)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
