#include "shalika/orbital.hpp"
#include "shalika/qtdeform.hpp"

#include <benchmark/benchmark.h>

using namespace shalika;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& st) { st.SetLabel(st.range(0) ? "parallel" : "serial"); }

void BM_SlopePlethysm(benchmark::State& st) {
    SymFun f = convert(SymFun::basis_element(Basis::TH, {2, 1}), Basis::E);
    slope_plethysm(f, 3, 2);  // warm the path memo
    for (auto _ : st) benchmark::DoNotOptimize(slope_plethysm(f, 3, 2, exec_of(st)));
    label(st);
}

void BM_PkmCompositions(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(pkm_compositions(5, 3, 2, exec_of(st)));
    label(st);
}

void BM_WeightPolynomials(benchmark::State& st) {
    GammaSpec g;
    g.branches.push_back(branch_from_newton({{2, 1}, {2, 1}, {2, 3}}));
    SymFun f = convert(master_symfun(g), Basis::E);
    const int d = dim_sp(g);
    for (auto _ : st) benchmark::DoNotOptimize(weight_polynomials(f, d, exec_of(st)));
    label(st);
}

void BM_TorusQt(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(torus_msf_qt(7, 5, exec_of(st)));
    label(st);
}

}  // namespace

BENCHMARK(BM_SlopePlethysm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PkmCompositions)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightPolynomials)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusQt)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
