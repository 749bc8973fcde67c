#include <benchmark/benchmark.h>

#include "qsl2/bases.hpp"
#include "qsl2/fusion.hpp"
#include "qsl2/qseries.hpp"

using namespace qsl2;

namespace {

RationalFunction sample_ratfun(int s) {
    // q^{-3}/(q^{-2};q^{-2})_s, a typical transition coefficient.
    return RationalFunction(LaurentPoly::q_power(-3), poch_q2m(s));
}

void BM_ratfun_mul(benchmark::State& state) {
    RationalFunction a = sample_ratfun(4);
    RationalFunction b = sample_ratfun(3) + sample_ratfun(5);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ratfun_mul);

void BM_ratfun_add(benchmark::State& state) {
    RationalFunction a = sample_ratfun(6);
    RationalFunction b = sample_ratfun(4);
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_ratfun_add);

void BM_ladder_product(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto [c2p, p2c] = ladder_matrices(n, n, -1);
        benchmark::DoNotOptimize(tm_mul(c2p, p2c).is_identity());
    }
}
BENCHMARK(BM_ladder_product)->Arg(4)->Arg(8);

void BM_fuse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Fuser fuser;
        benchmark::DoNotOptimize(fuser.fuse(n, n, -1));
    }
}
BENCHMARK(BM_fuse)->Arg(3)->Arg(5);

void BM_series_expand(benchmark::State& state) {
    RationalFunction r(LaurentPoly::q_power(-4), poch_q2m(4));
    for (auto _ : state) benchmark::DoNotOptimize(series_expand(r, 30));
}
BENCHMARK(BM_series_expand);

void BM_pairing_module_limit(benchmark::State& state) {
    const UdotElement x = UdotElement::basis(2, 2, -1);
    for (auto _ : state) benchmark::DoNotOptimize(pairing_module_limit(x, x));
}
BENCHMARK(BM_pairing_module_limit);

}  // namespace

BENCHMARK_MAIN();
