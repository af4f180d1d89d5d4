// Acceptance suite: every criterion runs at p in {3,5,7}, target precision
// M = 20 digits, base truncation degree N = 256 (the planner may raise N to
// cover deep moments). One pass/fail line per criterion; exit 1 on failure.

#include <zetap/coleman.hpp>
#include <zetap/eisenstein.hpp>
#include <zetap/json_io.hpp>
#include <zetap/lambda_modules.hpp>
#include <zetap/lvalues.hpp>

#include <chrono>
#include <cstdio>
#include <random>

using namespace zetap;

namespace {

constexpr int kTargetM = 20;
constexpr long kBaseN = 256;
const long kPrimes[3] = {3, 5, 7};

int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int idx, const char* name, bool pass, const std::string& detail, double secs) {
    std::printf("[%s] criterion %2d %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", idx, name,
                detail.c_str(), secs);
    if (!pass) ++g_failures;
}

Rat zeta_oracle(const Int& p, long k) {
    return (Rat(1) - Rat(pow_int(p, k - 1))) * zeta_neg(k - 1);
}

bool value_matches(const Padic& got, const Padic& want, long digits) {
    if (want.is_zero() || got.is_zero()) {
        bool g0 = got.is_zero() || got.valuation() >= digits;
        bool w0 = want.is_zero() || want.valuation() >= digits;
        return g0 && w0;
    }
    return Padic::agree_digits(got, want) >= digits;
}

// 1. interpolation at the trivial character, 1 <= k <= 12, >= M-3 digits
void criterion1() {
    Timer t;
    bool pass = true;
    long worst = 1000;
    for (long pl : kPrimes) {
        Int p(pl);
        KLPlan plan = kl_plan(p, kTargetM, 12, kBaseN);
        auto zp = build_zeta_p(p, plan.M_work, plan.N);
        for (long k = 1; k <= 12; ++k) {
            Padic got = zp.eval(DirichletCharacter::trivial(), k);
            Padic want = embed_rational(zeta_oracle(p, k), p, plan.M_work);
            if (!value_matches(got, want, kTargetM - 3)) pass = false;
            if (!got.is_zero() && !want.is_zero())
                worst = std::min(worst, Padic::agree_digits(got, want));
        }
        if (pl == 5) {
            auto triv = DirichletCharacter::trivial();
            pass = pass && Padic::agree_digits(zp.eval(triv, 2),
                                               embed_rational(Rat(1, 3), p, plan.M_work)) >= 17;
            pass = pass && Padic::agree_digits(zp.eval(triv, 4),
                                               embed_rational(Rat(-31, 30), p, plan.M_work)) >= 17;
            pass = pass && Padic::agree_digits(zp.eval(triv, 6),
                                               embed_rational(Rat(781, 63), p, plan.M_work)) >= 17;
        }
    }
    report(1, "interpolation", pass, "k <= 12, p in {3,5,7}, >= 17 digits (worst " +
           std::to_string(worst) + ")", t.secs());
}

// 2. twisted interpolation at p = 5 for omega, omega^2, omega^3, >= M-4
void criterion2() {
    Timer t;
    bool pass = true;
    Int p(5);
    KLPlan plan = kl_plan(p, kTargetM, 9, kBaseN);
    auto zp = build_zeta_p(p, plan.M_work, plan.N);
    for (long i = 1; i <= 3; ++i) {
        auto chi = DirichletCharacter::teichmuller_power(p, i);
        for (long k = 1; k <= 8; ++k) {
            Padic got = zp.eval(chi, k);
            bool parity_ok = chi.parity() == ((k % 2 == 0) ? 1 : -1);
            if (!parity_ok) {
                if (!(got.is_zero() || got.valuation() >= kTargetM - 4)) pass = false;
                if (!dirichlet_L_neg(chi, k).is_zero()) pass = false;
                continue;
            }
            Padic want = embed_cyclorat_zp(dirichlet_L_neg(chi, k), p, plan.M_work);
            if (!value_matches(got, want, kTargetM - 4)) pass = false;
        }
    }
    report(2, "twisted interpolation", pass, "p=5, omega^{1,2,3}, k <= 8, >= 16 digits", t.secs());
}

// 3. tame conductor: eta quadratic mod 3 and mod 4 at p = 5
void criterion3() {
    Timer t;
    bool pass = true;
    Int p(5);
    KLPlan plan = kl_plan(p, kTargetM, 7, kBaseN);
    for (unsigned long D : {3UL, 4UL}) {
        auto eta = DirichletCharacter::quadratic(D);
        Measure mu = build_mu_eta(eta, p, plan.M_work, plan.N);
        // psi(F_eta) = eta(p) F_eta within truncation
        auto vals = realize_character(eta, mu.ring());
        CycloElement etap = vals[5 % D];
        if (!trace_psi(mu).equals_mod(mu.scaled(etap), kTargetM - 4, 8)) pass = false;
        auto zeta = build_zeta_eta(eta, p, plan.M_work, plan.N);
        long etap_sign = eta.exponent_at(5) == 0 ? 1 : -1;
        for (long k = 1; k <= 6; ++k) {
            Padic got = zeta.eval(DirichletCharacter::trivial(), k);
            Rat oracle = (Rat(1) - Rat(etap_sign) * Rat(pow_int(p, k - 1))) *
                         dirichlet_L_neg_rat(eta, k);
            Padic want = embed_rational(oracle, p, plan.M_work);
            if (!value_matches(got, want, kTargetM - 4)) pass = false;
        }
    }
    report(3, "tame conductor", pass, "eta mod 3 and mod 4 at p=5, k <= 6, >= 16 digits", t.secs());
}

// 4. Kummer congruences: 50 sampled triples per prime + a mutation check
void criterion4() {
    Timer t;
    bool pass = true;
    std::string detail;
    for (long pl : kPrimes) {
        Int p(pl);
        std::mt19937_64 rng(1000 + pl);
        struct Triple {
            long k, l;
            int m;
        };
        std::vector<Triple> triples;
        long kmax = 1;
        while (static_cast<long>(triples.size()) < 50) {
            int m = 1 + static_cast<int>(rng() % 2);
            long step = (pl - 1) * pow_int(p, m - 1).convert_to<long>();
            long k = 1 + static_cast<long>(rng() % 16);
            if (k % (pl - 1) == 0) continue;
            long l = k + step * (1 + static_cast<long>(rng() % 2));
            triples.push_back({k, l, m});
            kmax = std::max(kmax, l);
        }
        KLPlan plan = kl_plan(p, 10, kmax, kBaseN);
        auto zp = build_zeta_p(p, plan.M_work, plan.N);
        auto triv = DirichletCharacter::trivial();
        for (const auto& tr : triples) {
            if (!Padic::agree_abs(zp.eval(triv, tr.k), zp.eval(triv, tr.l), tr.m)) pass = false;
        }
        // mutation: a perturbed numerator coefficient must be caught
        std::vector<CycloElement> tt(zp.numerator().t_coeffs());
        tt[1] = tt[1] + CycloElement::one(zp.numerator().ring());
        PseudoMeasure mutated(Measure::from_t_coeffs(zp.numerator().ring(), std::move(tt)),
                              zp.smoothing(), zp.shift());
        int caught = 0;
        for (const auto& tr : triples)
            if (!Padic::agree_abs(mutated.eval(triv, tr.k), mutated.eval(triv, tr.l), tr.m))
                ++caught;
        if (caught == 0) {
            pass = false;
            detail += " mutation-missed(p=" + std::to_string(pl) + ")";
        }
    }
    report(4, "Kummer congruences", pass, "50 sampled triples per prime; mutation caught" + detail,
           t.secs());
}

// 5. the Coleman chain
void criterion5() {
    Timer t;
    bool pass = true;
    const std::pair<long, std::pair<long, long>> smoothings[3] = {
        {3, {2, 5}}, {5, {2, 3}}, {7, {3, 5}}};
    for (const auto& [pl, pair] : smoothings) {
        Int p(pl);
        KLPlan plan = kl_plan(p, kTargetM, 9, kBaseN);
        ModCtx m(p, plan.M_work);
        for (long a : {pair.first, pair.second}) {
            auto f = coleman_closed_form(m, a);
            // Delta(f_{c(a)}) = (a-1) - F_a as series, exactly
            Poly delta = log_derivative(m, f.coeffs(), plan.N);
            Poly fa = f_a_series(m, a, plan.N);
            Poly want(plan.N, 0);
            for (long i = 0; i < plan.N; ++i)
                want[i] = mod_reduce((i == 0 ? Int(a - 1) : Int(0)) - fa[i], m.pM);
            poly_trim(delta);
            poly_trim(want);
            if (delta != want) pass = false;
            // N(f) = f exactly
            if (norm_operator(f).coeffs() != f.coeffs()) pass = false;
            // Col moments against the smoothed oracle
            auto col = coleman_map(f, plan.N);
            for (long k = 1; k <= 8; ++k) {
                Padic got = col.eval(DirichletCharacter::trivial(), k);
                Rat oracle = -(Rat(pow_int(Int(a), k)) - 1) * zeta_oracle(p, k);
                Padic wantv = embed_rational(oracle, p, plan.M_work);
                if (!value_matches(got, wantv, kTargetM - 4)) pass = false;
            }
        }
        // depth-3 tower reconstruction at the default smoothing, mod p^3
        long a0 = default_smoothing(p);
        auto tower = cyclotomic_tower(p, plan.M_work, a0, 3);
        if (!tower.norm_compatible(plan.M_work - 2)) pass = false;
        auto rec = coleman_reconstruct(tower);
        if (!rec.equals_mod(coleman_closed_form(ModCtx(p, 3), a0), 3)) pass = false;
    }
    report(5, "Coleman chain", pass,
           "Delta and N exact; Col moments >= 16 digits; depth-3 tower mod p^3", t.secs());
}

// 6. operator laws, >= 200 random cases each
void criterion6() {
    Timer t;
    bool pass = true;
    auto run_prime = [&](long pl, int cases, unsigned long seed) {
        Int p(pl);
        const int M = 10;
        const long N = 64;
        auto R = CycloRing::zp(p, M);
        auto Rc = CycloRing::ramified(p, 1, M);
        std::mt19937_64 rng(seed);
        auto rnd = [&](long n) {
            std::vector<CycloElement> tt;
            for (long k = 0; k < n; ++k) tt.push_back(CycloElement::from_int(R, Int(rng())));
            return Measure::from_t_coeffs(R, std::move(tt));
        };
        for (int i = 0; i < cases; ++i) {
            auto mu = rnd(N);
            // psi phi = id (exact)
            if (!trace_psi(frobenius_phi(mu)).equals_mod(mu, M)) pass = false;
            // Res = 1 - phi psi and psi Res = 0
            auto res = restrict_to_units(mu);
            auto res2 = mu - frobenius_phi(trace_psi(mu));
            if (!res.equals_mod(res2, M, N / (2 * pl))) pass = false;
            if (!trace_psi(res).is_zero_mod(M)) pass = false;
            // sigma functoriality on moments
            long a = 2 + static_cast<long>(rng() % 5);
            long b = 2 + static_cast<long>(rng() % 5);
            while (Int(a) % p == 0) ++a;
            while (Int(b) % p == 0 || Int(a * b) % p == 0) ++b;
            auto ab = act_sigma(act_sigma(mu, Int(a)), Int(b));
            auto ba = act_sigma(mu, Int(a * b));
            for (long k = 0; k <= 4; ++k)
                if (!ab.moment(k).equals_mod(ba.moment(k), M - 2)) pass = false;
            // plus/minus: idempotent projectors summing to the identity
            auto plus = plus_minus_project(mu, +1);
            auto minus = plus_minus_project(mu, -1);
            if (!(plus + minus).equals_mod(mu, M, N / 2)) pass = false;
            if (!plus_minus_project(plus, +1).equals_mod(plus, M - 2, 8)) pass = false;
            if (!plus_minus_project(minus, -1).equals_mod(minus, M - 2, 8)) pass = false;
            // twist path (i) = path (ii)
            if (i % 8 == 0) {
                auto chi = DirichletCharacter::teichmuller_power(p, 1 + static_cast<long>(i % (pl - 1)));
                auto path1 = twist_by_character_gauss(mu, chi, Rc);
                auto path2 = embed_measure(twist_by_character_coset(mu, chi), Rc);
                for (long k = 0; k <= 5; ++k)
                    if (!path1.moment(k).equals_mod(path2.moment(k), M - 3)) pass = false;
            }
            // ker(1 - phi) on psi-fixed inputs = constants
            if (i % 10 == 0) {
                auto g = restrict_to_units(rnd(N));
                Padic g0 = g.moment(0).to_padic();
                Measure oneT = Measure::from_series(R, Poly{1, 1}, N);
                if (!g0.is_zero()) g = g - oneT.scaled(CycloElement::from_padic(R, g0));
                Measure h = g, cur = g;
                while (true) {
                    cur = frobenius_phi(cur).truncated(N);
                    if (cur.is_zero_mod(M)) break;
                    h = h + cur;
                }
                Measure back = h - frobenius_phi(h).truncated(N);
                bool h_const = h.equals_mod(
                    Measure::dirac_int(R, 0, N).scaled(h.t_coeff(0)), M, N / 2);
                if (!g.is_zero_mod(M) && back.is_zero_mod(M - 1) && !h_const) pass = false;
                Measure c = Measure::dirac_int(R, 0, N).scaled_int(Int(rng() % 100));
                if (!(c - frobenius_phi(c).truncated(N)).is_zero_mod(M)) pass = false;
            }
        }
    };
    run_prime(5, 140, 0xa11ce);
    run_prime(3, 35, 0xb0b);
    run_prime(7, 35, 0xca71);
    report(6, "operator laws", pass, ">= 200 cases per law across p in {3,5,7}", t.secs());
}

// 7. the value at s = 1 for theta = omega^2 at p = 5, two routes
void criterion7() {
    Timer t;
    Int p(5);
    KLPlan plan = kl_plan(p, kTargetM, kTargetM + 4, kBaseN);
    auto om2 = DirichletCharacter::teichmuller_power(p, 2);
    LpAtOne r = lp_at_one(om2, p, plan.M_work, plan.N);
    bool pass = r.agree_digits >= kTargetM - 4;
    report(7, "Leopoldt s=1", pass,
           "measure vs log-sum path agree to " + std::to_string(r.agree_digits) + " digits",
           t.secs());
}

// 8. Mellin branches match the criterion-1 values
void criterion8() {
    Timer t;
    bool pass = true;
    for (long pl : kPrimes) {
        Int p(pl);
        KLPlan plan = kl_plan(p, kTargetM, kTargetM + 6, kBaseN);
        auto zp = build_zeta_p(p, plan.M_work, plan.N);
        for (long k = 1; k <= 12; ++k) {
            int i = static_cast<int>(k % (pl - 1));
            Padic got = mellin_branch(i, embed_rational(Rat(1 - k), p, plan.M_work), zp);
            Padic want = embed_rational(zeta_oracle(p, k), p, plan.M_work);
            if (!value_matches(got, want, kTargetM - 3)) pass = false;
        }
    }
    report(8, "Mellin branches", pass, "zeta_{p,i}(1-k) = criterion-1 values, k <= 12", t.secs());
}

// 9. growth law and p-ranks for five synthetic modules
void criterion9() {
    Timer t;
    bool pass = true;
    Int p(5);
    std::vector<LambdaModuleDesc> descs = {
        {p, {1}, {}},
        {p, {}, {{-5, 1}}},
        {p, {1}, {{-5, 1}}},
        {p, {2}, {{-5, 0, 1}}},
        {p, {}, {{-5, 1}, {5, 5, 1}}},
    };
    for (const auto& d : descs) {
        auto fit = growth_law(d, 0, 5);
        long mu = 0;
        for (int mi : d.p_exponents) mu += mi;
        long lambda = 0;
        for (const auto& g : d.polys) lambda += static_cast<long>(g.size()) - 1;
        if (fit.mu != mu || fit.lambda != lambda) pass = false;
        for (int i = fit.n0; i <= 5; ++i) {
            Int predicted = Int(fit.mu) * pow_int(p, static_cast<unsigned long>(i)) +
                            Int(fit.lambda) * i + fit.nu;
            if (predicted != fit.e[i]) pass = false;
        }
        // p-rank = s p^n + sum deg g_j once p^n clears the degrees
        for (int n = 1; n <= 3; ++n) {
            Int expected = Int(d.p_exponents.size()) * pow_int(p, static_cast<unsigned long>(n));
            for (const auto& g : d.polys) expected += static_cast<long>(g.size()) - 1;
            if (p_rank(d, n) != expected) pass = false;
        }
    }
    report(9, "Lambda-module growth", pass, "5 descriptions, n <= 5, exact affine fit + p-ranks",
           t.secs());
}

// 10. Eisenstein family specialization and weight congruences
void criterion10() {
    Timer t;
    bool pass = true;
    Int p(5);
    KLPlan plan = kl_plan(p, kTargetM, 9, kBaseN);
    auto zp = build_zeta_p(p, plan.M_work, plan.N);
    for (long k : {4L, 6L, 8L}) {
        auto exact = stabilized_eisenstein(p, k, 50);
        auto spec = family_specialize(k, 50, zp, 256);
        for (long n = 0; n <= 50; ++n) {
            Padic want = embed_rational(exact.coeffs[n], p, plan.M_work);
            if (!value_matches(spec[n], want, kTargetM - 3)) pass = false;
        }
    }
    // weight congruence for (4, 8) mod 5: the n >= 1 coefficients are
    // congruent mod 5; the constant terms lie on the pole branch
    // ((p-1) | k), where the congruence carries the two-digit pole shift
    auto e4 = stabilized_eisenstein(p, 4, 50);
    auto e8 = stabilized_eisenstein(p, 8, 50);
    for (long n = 1; n <= 50; ++n) {
        Rat diff = e4.coeffs[n] - e8.coeffs[n];
        if (diff != 0 && vp(diff, p) < 1) pass = false;
    }
    {
        Rat diff = e4.coeffs[0] - e8.coeffs[0];
        if (diff != 0 && vp(diff, p) < -1) pass = false;
    }
    report(10, "Eisenstein family", pass,
           "k in {4,6,8} to q^50, >= 17 digits; (4,8) congruent mod 5 for n >= 1", t.secs());
}

}  // namespace

int main() {
    std::printf("acceptance: p in {3,5,7}, M = %d digits, N = %ld\n", kTargetM, kBaseN);
    Timer total;
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%d/10 criteria passed (%.1fs total)\n", 10 - g_failures, total.secs());
    return g_failures == 0 ? 0 : 1;
}
