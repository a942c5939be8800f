#include <benchmark/benchmark.h>

#include "sptri/balanced.hpp"
#include "sptri/crosspoly.hpp"

using namespace sptri;

static void BM_CrossPolytopeBoundary(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = cross_polytope_boundary(d);
        benchmark::DoNotOptimize(c.complex.facet_count());
    }
}
BENCHMARK(BM_CrossPolytopeBoundary)->Arg(5)->Arg(7)->Arg(8);

static void BM_FaceEnumeration(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = cross_polytope_boundary(d); // fresh cache each round
        benchmark::DoNotOptimize(f_vector(c.complex).f(d / 2));
    }
}
BENCHMARK(BM_FaceEnumeration)->Arg(6)->Arg(7);

static void BM_CsSphereProduct(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto p = cs_sphere_product(d);
        benchmark::DoNotOptimize(p.complex.facet_count());
    }
}
BENCHMARK(BM_CsSphereProduct)->Arg(5)->Arg(6);

static void BM_BuildSigma(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = build_sigma(d);
        benchmark::DoNotOptimize(s.complex.facet_count());
    }
}
BENCHMARK(BM_BuildSigma)->Arg(4)->Arg(5);

static void BM_ShellingVerification(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    int i = (d + 1) / 2;
    auto complex = belt_union(d, i);
    auto order = belt_shelling_order(d, i);
    for (auto _ : state) {
        auto cert = verify_shelling(complex, order);
        benchmark::DoNotOptimize(cert.restrictions.size());
    }
}
BENCHMARK(BM_ShellingVerification)->Arg(6)->Arg(7);

BENCHMARK_MAIN();
