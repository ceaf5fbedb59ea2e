#include <benchmark/benchmark.h>

#include "wzsum/certificate.hpp"
#include "wzsum/congruence.hpp"
#include "wzsum/identity.hpp"
#include "wzsum/modular.hpp"

using namespace wzsum;

static void BM_FamilySumB(benchmark::State& state) {
    long n_max = state.range(0);
    for (auto _ : state) {
        Rational sum = family_sum(SumFamily::B, WeightKind::GuoB, n_max);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_FamilySumB)->Arg(40)->Arg(84)->Arg(364);

static void BM_FamilySumC(benchmark::State& state) {
    long n_max = state.range(0);
    for (auto _ : state) {
        Rational sum = family_sum(SumFamily::C, WeightKind::GuoC, n_max);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_FamilySumC)->Arg(40)->Arg(84);

static void BM_TheoremLhs(benchmark::State& state) {
    IdentityParams p{3, 2, state.range(0)};
    for (auto _ : state) {
        Rational lhs = theorem_lhs(Theorem::One, p);
        benchmark::DoNotOptimize(lhs);
    }
}
BENCHMARK(BM_TheoremLhs)->Arg(20)->Arg(60)->Arg(120);

static void BM_ReplayProof(benchmark::State& state) {
    IdentityParams p{2, 1, state.range(0)};
    for (auto _ : state) {
        ReplayReport r = replay_telescoping_proof(Theorem::Two, p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ReplayProof)->Arg(20)->Arg(60);

static void BM_SymbolicVerify(benchmark::State& state) {
    for (auto _ : state) {
        bool ok = verify_certificate_symbolic(CertificateId::ZeilbergerPair);
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_SymbolicVerify);

static void BM_PointwiseGrid(benchmark::State& state) {
    for (auto _ : state) {
        long failures = 0;
        for (long ell = 1; ell <= 3; ++ell)
            for (long s = 0; s <= 2; ++s)
                for (long n = s; n <= s + 6; ++n)
                    for (long k = 1; k <= n; ++k)
                        failures += check_recurrence_pointwise(CertificateId::WzPair,
                                                               {ell, s, n, k}) ? 0 : 1;
        benchmark::DoNotOptimize(failures);
    }
}
BENCHMARK(BM_PointwiseGrid);

static void BM_ModReduce(benchmark::State& state) {
    Rational sum = family_sum(SumFamily::B, WeightKind::GuoB, 84);
    PrimePowerModulus m(13, 7);
    for (auto _ : state) {
        Integer r = mod_reduce(sum, m);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ModReduce);

BENCHMARK_MAIN();
