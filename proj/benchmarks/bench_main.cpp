#include <benchmark/benchmark.h>

#include <zetap/coleman.hpp>
#include <zetap/lambda_modules.hpp>
#include <zetap/lvalues.hpp>

using namespace zetap;

namespace {

void BM_PadicLog(benchmark::State& state) {
    Padic x = Padic::from_int(1 + 5 * 7, 5, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(padic_log(x));
}
BENCHMARK(BM_PadicLog)->Arg(20)->Arg(40);

void BM_Teichmuller(benchmark::State& state) {
    Padic x = Padic::from_int(3, 7, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(teichmuller(x));
}
BENCHMARK(BM_Teichmuller)->Arg(20)->Arg(40);

void BM_CycloMul(benchmark::State& state) {
    auto R = CycloRing::ramified(5, static_cast<int>(state.range(0)), 20);
    CycloElement a = CycloElement::root_power(R, 1) + CycloElement::from_int(R, 2);
    CycloElement b = a * a + CycloElement::from_int(R, 7);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(1)->Arg(2)->Arg(3);

void BM_MeasureBasisConversion(benchmark::State& state) {
    auto R = CycloRing::zp(5, 26);
    long N = state.range(0);
    Poly F = f_a_series(R->ctx(), 2, N);
    for (auto _ : state) benchmark::DoNotOptimize(Measure::from_series(R, F, N));
}
BENCHMARK(BM_MeasureBasisConversion)->Arg(64)->Arg(256);

void BM_TwistedMoment(benchmark::State& state) {
    auto R = CycloRing::zp(5, 26);
    long N = state.range(0);
    Measure mu = restrict_eigen(build_mu_a(R, 2, N), CycloElement::one(R)).truncated(N);
    auto chi = DirichletCharacter::teichmuller_power(5, 2);
    for (auto _ : state) {
        Measure tw = twist_by_character_coset(mu, chi);
        benchmark::DoNotOptimize(tw.moment(7));
    }
}
BENCHMARK(BM_TwistedMoment)->Arg(128)->Arg(256);

void BM_EvalPseudo(benchmark::State& state) {
    KLPlan plan = kl_plan(5, 20, 12, 256);
    auto zp = build_zeta_p(5, plan.M_work, plan.N);
    auto triv = DirichletCharacter::trivial();
    for (auto _ : state) benchmark::DoNotOptimize(zp.eval(triv, 8));
}
BENCHMARK(BM_EvalPseudo);

void BM_NormOperator(benchmark::State& state) {
    ModCtx m(5, 12);
    Poly c(state.range(0), 1);
    c[0] = 2;
    for (size_t i = 1; i < c.size(); ++i) c[i] = Int(i * 2654435761u) % m.pM;
    UnitPowerSeries f(m, std::move(c));
    for (auto _ : state) benchmark::DoNotOptimize(norm_operator(f));
}
BENCHMARK(BM_NormOperator)->Arg(32)->Arg(128)->Arg(300);

void BM_Bernoulli(benchmark::State& state) {
    for (auto _ : state) {
        Rat b = bernoulli(static_cast<unsigned long>(state.range(0)));
        benchmark::DoNotOptimize(b);
    }
}
BENCHMARK(BM_Bernoulli)->Arg(24)->Arg(60);

void BM_WeierstrassPrepare(benchmark::State& state) {
    ModCtx m(5, 20);
    Poly u{1, 1, 0, 5, 2};
    Poly f = poly_mul(m, Poly{5, 1}, u);
    f = poly_mul(m, f, Poly{25});
    for (auto _ : state) benchmark::DoNotOptimize(weierstrass_prepare(m, f, 32));
}
BENCHMARK(BM_WeierstrassPrepare);

void BM_QuotientSizeExponent(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(quotient_size_exponent(5, {-5, 0, 1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QuotientSizeExponent)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
