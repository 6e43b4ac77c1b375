#include <benchmark/benchmark.h>

#include <random>

#include "kmu/groebner.hpp"
#include "kmu/unproject.hpp"

using namespace kmu;

namespace {

ContextPtr tom_ctx() {
    return VarContext::make({"x1", "x2", "x3", "x4", "z1", "z2", "z3", "z4"});
}

Polynomial pp(const ContextPtr& c, const std::string& s) {
    return Polynomial::parse(c, s);
}

SkewMatrix random_skew(const ContextPtr& c, std::mt19937& rng, std::size_t k) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<std::size_t> var(0, c->size() - 1);
    std::vector<Polynomial> upper;
    for (std::size_t i = 0; i < k * (k - 1) / 2; ++i) {
        Polynomial v = Polynomial::variable(c, c->name(var(rng)));
        upper.push_back(v * Int(coeff(rng)) +
                        Polynomial::constant(c, Int(coeff(rng))));
    }
    return SkewMatrix::from_upper_triangle(c, k, std::move(upper));
}

void bm_pfaffian(benchmark::State& state) {
    auto c = VarContext::make({"x", "y", "z", "w"});
    std::mt19937 rng(7);
    std::vector<SkewMatrix> mats;
    for (int i = 0; i < 16; ++i)
        mats.push_back(random_skew(c, rng, std::size_t(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfaffian_even(mats[i % mats.size()]));
        ++i;
    }
}
BENCHMARK(bm_pfaffian)->Arg(4)->Arg(6)->Arg(8);

void bm_determinant_bareiss(benchmark::State& state) {
    auto c = VarContext::make({"x", "y", "z", "w"});
    std::mt19937 rng(11);
    SkewMatrix a = random_skew(c, rng, std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(determinant(a.base()));
}
BENCHMARK(bm_determinant_bareiss)->Arg(6)->Arg(8);

void bm_tom_unprojection(benchmark::State& state) {
    auto c = tom_ctx();
    auto zero = Polynomial::zero(c);
    auto one = Polynomial::constant(c, 1);
    TomData d{c,
              {pp(c, "x1"), pp(c, "x2"), pp(c, "x3"), pp(c, "x4")},
              {pp(c, "z1"), pp(c, "z2"), pp(c, "z3"), pp(c, "z4")},
              {{{zero, zero, zero, zero},
                {one, zero, zero, zero},
                {zero, one, zero, zero},
                {zero, zero, one, zero},
                {zero, zero, zero, one},
                {zero, zero, zero, zero}}}};
    for (auto _ : state) benchmark::DoNotOptimize(unproject_tom(d));
}
BENCHMARK(bm_tom_unprojection);

void bm_groebner_original_tom(benchmark::State& state) {
    auto c = tom_ctx();
    Ideal i(c, {pp(c, "z2*z3 - z1*z4"), pp(c, "x3*z2 - x4*z1"),
                pp(c, "x3*z4 - x4*z3"), pp(c, "x1*z3 - x2*z1"),
                pp(c, "x1*z4 - x2*z2")});
    for (auto _ : state) benchmark::DoNotOptimize(GroebnerBasis::compute(i));
}
BENCHMARK(bm_groebner_original_tom);

void bm_normal_form(benchmark::State& state) {
    auto c = tom_ctx();
    GroebnerBasis g = GroebnerBasis::compute(
        Ideal(c, {pp(c, "z2*z3 - z1*z4"), pp(c, "x3*z2 - x4*z1"),
                  pp(c, "x3*z4 - x4*z3"), pp(c, "x1*z3 - x2*z1"),
                  pp(c, "x1*z4 - x2*z2")}));
    Polynomial p = pp(c, "x1*x3*z2 - x1*x4*z1 + x2*x3*z4^2 + 5*z1*z2*z3*z4");
    for (auto _ : state) benchmark::DoNotOptimize(g.normal_form(p));
}
BENCHMARK(bm_normal_form);

}  // namespace

BENCHMARK_MAIN();
