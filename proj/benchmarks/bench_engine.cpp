#include "higgsgrass/degree.hpp"
#include "higgsgrass/grass.hpp"
#include "higgsgrass/groebner.hpp"
#include "higgsgrass/parse.hpp"
#include "higgsgrass/spectral.hpp"
#include "higgsgrass/structure.hpp"
#include "higgsgrass/systems.hpp"

#include <benchmark/benchmark.h>

using namespace higgsgrass;

namespace {

JordanSpec nilspec(int size) {
    auto X = VarSet::make({"x"});
    return make_jordan_spec(X, {{Poly::zero(X), size, 1}});
}

void BM_ParsePoly(benchmark::State& state) {
    auto V = VarSet::make({"x", "y", "z1", "z2", "z3"});
    for (auto _ : state) {
        Poly p = parse_poly("3*x^2*z1*z3 - 1/2*z2^2 + x*y - 7*z3^3 + z1*z2*z3", V);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ParsePoly);

void BM_PolyMul(benchmark::State& state) {
    auto V = VarSet::make({"x", "y", "z"});
    Poly a = parse_poly("(x + y + z + 1)^4", V);
    Poly b = parse_poly("(x - 2*y + 3*z - 1)^4", V);
    for (auto _ : state) {
        Poly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_PolyMul);

void BM_SingleBlockBasis(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GrassIdeal g = rank1_ideal(jordan_field(nilspec(r)));
        benchmark::DoNotOptimize(g.ideal.groebner().basis.size());
    }
}
BENCHMARK(BM_SingleBlockBasis)->Arg(3)->Arg(5)->Arg(7);

void BM_ComponentIntersection(benchmark::State& state) {
    auto X = VarSet::make({"x"});
    auto spec = make_jordan_spec(X, {{Poly::zero(X), 4, 1}, {Poly::zero(X), 2, 1}});
    for (auto _ : state) {
        Ideal meet = ideal_intersect(predicted_component_ideal(spec, 1).ideal,
                                     predicted_component_ideal(spec, 2).ideal);
        benchmark::DoNotOptimize(meet.groebner().basis.size());
    }
}
BENCHMARK(BM_ComponentIntersection);

void BM_SpectralPlaneExample(benchmark::State& state) {
    auto XY = VarSet::make({"x", "y"});
    PolyMat d = {{parse_poly("x", XY), parse_poly("0", XY)},
                 {parse_poly("0", XY), parse_poly("y", XY)}};
    HiggsField H = validate_higgs({d, d}, XY);
    for (auto _ : state) {
        SpectralIdeal S = spectral_ideal(H);
        benchmark::DoNotOptimize(S.indexed_generators.size());
    }
}
BENCHMARK(BM_SpectralPlaneExample);

void BM_FlagFiberLength(benchmark::State& state) {
    auto X = VarSet::make({"x"});
    PolyMat A = {{parse_poly("0", X), parse_poly("1", X), parse_poly("0", X)},
                 {parse_poly("0", X), parse_poly("0", X), parse_poly("1", X)},
                 {parse_poly("0", X), parse_poly("0", X), parse_poly("0", X)}};
    FlagIdeal F = flag_ideal(validate_higgs({A}, X));
    for (auto _ : state) {
        FlagFiberReport rep = flag_fiber_report(F, Rat(1));
        benchmark::DoNotOptimize(rep.length);
    }
}
BENCHMARK(BM_FlagFiberLength);

} // namespace

BENCHMARK_MAIN();
