#include <benchmark/benchmark.h>

#include "sptri/balanced.hpp"
#include "sptri/crosspoly.hpp"
#include "sptri/homology.hpp"
#include "sptri/verify.hpp"

using namespace sptri;

static void BM_BoundaryMatrices(benchmark::State& state) {
    auto c = cross_polytope_boundary(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto data = boundary_matrices(c.complex);
        benchmark::DoNotOptimize(data.matrices.size());
    }
}
BENCHMARK(BM_BoundaryMatrices)->Arg(5)->Arg(6);

static void BM_SmithNormalForm(benchmark::State& state) {
    // middle boundary map of the cross-polytope sphere
    auto c = cross_polytope_boundary(static_cast<int>(state.range(0)));
    auto data = boundary_matrices(c.complex);
    const auto& mid = data.matrices[data.matrices.size() / 2];
    for (auto _ : state) {
        auto s = smith_normal_form(mid);
        benchmark::DoNotOptimize(s.rank);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(5)->Arg(6);

static void BM_IntegerRank(benchmark::State& state) {
    auto c = cross_polytope_boundary(static_cast<int>(state.range(0)));
    auto data = boundary_matrices(c.complex);
    const auto& mid = data.matrices[data.matrices.size() / 2];
    for (auto _ : state) {
        benchmark::DoNotOptimize(integer_rank(mid));
    }
}
BENCHMARK(BM_IntegerRank)->Arg(5)->Arg(6);

static void BM_HomologyCsProduct(benchmark::State& state) {
    auto p = cs_sphere_product(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto c = p.complex; // shared face cache makes repeats unrealistic
        auto h = reduced_homology(c);
        benchmark::DoNotOptimize(h.betti.size());
    }
}
BENCHMARK(BM_HomologyCsProduct)->Arg(5)->Arg(6);

static void BM_HomologySigma(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = build_sigma(d);
        auto h = reduced_homology(s.complex);
        benchmark::DoNotOptimize(h.betti.size());
    }
}
BENCHMARK(BM_HomologySigma)->Arg(4)->Arg(5)->Arg(6);

static void BM_LinkSurveySigma(benchmark::State& state) {
    auto s = build_sigma(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = link_homology_survey(s.complex);
        benchmark::DoNotOptimize(r.passed);
    }
}
BENCHMARK(BM_LinkSurveySigma)->Arg(4)->Arg(5);
