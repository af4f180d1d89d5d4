#include <zetap/kubota_leopoldt.hpp>

#include <algorithm>
#include <memory>
#include <numeric>

namespace zetap {

KLPlan kl_plan(const Int& p, int M_target, long k_max, long min_N) {
    KLPlan plan;
    plan.M_work = M_target + 6;
    long pl = p.convert_to<long>();
    // moment k through a U-exponent filter is good to ~(N - kp)/(p-1) digits
    long need = (k_max + 2) * pl + (pl - 1) * (plan.M_work + 2);
    plan.N = std::max({need, pl * (k_max + 1), min_N, 32L});
    return plan;
}

bool valid_smoothing(const Int& p, long a) {
    if (a <= 1) return false;
    if (Int(a) % p == 0) return false;
    if (mult_order(Int(a), p) != (p - 1).convert_to<unsigned long>()) return false;
    return pow_mod(Int(a), p - 1, p * p) != 1;
}

long default_smoothing(const Int& p) {
    for (long a = 2;; ++a)
        if (valid_smoothing(p, a)) return a;
}

Poly f_a_series(const ModCtx& m, long a, long N) {
    // (1+T)^a - 1 = aT h(T) with h = sum_{n>=1} C(a,n)/a T^(n-1);
    // F_a = 1/T - a/((1+T)^a - 1) = ((h-1)/T) / h
    if (a <= 1 || Int(a) % m.p == 0) throw BadSmoothing("f_a_series: need a > 1 prime to p");
    Int ainv = inv_mod(Int(a), m.pM);
    Poly h(static_cast<size_t>(a), 0);
    for (long n = 1; n <= a; ++n)
        h[n - 1] = binomial_exact(Int(a), static_cast<unsigned long>(n)) % m.pM * ainv % m.pM;
    poly_trim(h);
    Poly shifted(h.begin() + 1, h.end());  // (h - 1)/T, constant term of h is 1
    Poly hinv = series_inverse(m, h, N);
    Poly F = poly_mul(m, shifted, hinv, N);
    F.resize(N, 0);
    return F;
}

Measure build_mu_a(const CycloRingPtr& R, long a, long N) {
    return Measure::from_series(R, f_a_series(R->ctx(), a, N), N);
}

PseudoMeasure::PseudoMeasure(Measure num, long smoothing, int shift)
    : num_(std::move(num)), a_(smoothing), t_(shift) {}

PseudoMeasure build_zeta_p(const Int& p, int M, long N, long a) {
    if (a == 0) a = default_smoothing(p);
    if (!valid_smoothing(p, a)) throw BadSmoothing("build_zeta_p: a must generate Z_p^x");
    auto R = CycloRing::zp(p, M);
    Measure mu_a = build_mu_a(R, a, N);
    // psi(F_a) = F_a, so restriction to the units is exactly (1 - phi)
    Measure num = restrict_eigen(mu_a, CycloElement::one(R)).truncated(N);
    return PseudoMeasure(std::move(num), a, 1);
}

namespace {

long mod_pm1(long e, long pm1) { return ((e % pm1) + pm1) % pm1; }

// twisted-moment tables per omega-power, built on demand
struct TwistCache {
    const Measure& num;
    std::vector<std::unique_ptr<Measure>> tw;
    const DirichletCharacter* base;  // optional finite part
    const Int p;

    TwistCache(const Measure& n, const DirichletCharacter* chi_fin, Int prime)
        : num(n), tw((prime - 1).convert_to<size_t>()), base(chi_fin), p(std::move(prime)) {}

    const Measure& get(long omega_exp) {
        long pm1 = (p - 1).convert_to<long>();
        size_t idx = static_cast<size_t>(mod_pm1(omega_exp, pm1));
        if (!tw[idx]) {
            DirichletCharacter chi = DirichletCharacter::teichmuller_power(p, static_cast<long>(idx));
            if (base != nullptr) chi = base->times(chi);
            tw[idx] = std::make_unique<Measure>(twist_by_character_coset(num, chi));
        }
        return *tw[idx];
    }
};

// int chi_fin(x) omega(x)^omega_pow <x>^s d(num), s either exact (s_int,
// pass s_padic = nullptr) or p-adic
CycloElement integrate_mellin_core(const Measure& num, const DirichletCharacter* chi_fin,
                                   long omega_pow, const Padic* s_padic, long s_int) {
    const auto& R = num.ring();
    const Int& p = R->prime();
    int M = R->precision();
    long J = std::min<long>(M + 2, num.degree() - 1);
    TwistCache cache(num, chi_fin, p);
    // T_i = int chi_fin(x) omega^(omega_pow - i)(x) x^i d(num)
    std::vector<CycloElement> T;
    T.reserve(J + 1);
    for (long i = 0; i <= J; ++i) T.push_back(cache.get(omega_pow - i).moment(i));
    // <x>^s = sum_r C(s, r) (<x> - 1)^r, (<x>-1)^r expanded through <x>^i
    CycloElement acc = CycloElement::zero(R);
    int prec_floor = R->precision();
    for (long r = 0; r <= J; ++r) {
        CycloElement inner = CycloElement::zero(R);
        for (long i = 0; i <= r; ++i) {
            CycloElement term = T[i].scaled(binomial_exact(Int(r), static_cast<unsigned long>(i)));
            inner = ((r - i) % 2 == 0) ? inner + term : inner - term;
        }
        if (s_padic != nullptr) {
            Padic b = padic_binomial(*s_padic, r);
            prec_floor = std::min<int>(prec_floor, static_cast<int>(b.abs_prec()));
            inner = b.is_zero() ? CycloElement::zero(R)
                                : inner * CycloElement::from_padic(R, b);
        } else {
            inner = inner.scaled(binomial_exact(Int(s_int), static_cast<unsigned long>(r)));
        }
        acc = acc + inner;
    }
    // contributions beyond J sit above p^J
    int prec = std::min<int>({acc.prec(), static_cast<int>(J), prec_floor});
    return CycloElement(R, acc.coords(), prec);
}

CycloElement divide_by_padic(const CycloElement& x, const Padic& d) {
    if (d.is_zero()) throw ZetapError("divide_by_padic: zero denominator");
    const auto& R = x.ring();
    CycloElement y = x.scaled(inv_mod(d.unit_part(), R->ctx().pM));
    long v = d.valuation();
    if (v > 0) y = y.divide_by_p(static_cast<int>(v));
    if (v < 0) y = y.times_p(static_cast<int>(-v));
    return CycloElement(R, y.coords(), std::min<int>(y.prec(), d.rel_prec()));
}

}  // namespace

CycloElement PseudoMeasure::numerator_integral(const DirichletCharacter& chi, long k) const {
    const auto& R = num_.ring();
    const Int& p = prime();
    if (chi.is_trivial() && k == 0)
        throw PoleAtTrivialCharacter("eval: pole at the trivial character",
                                     num_.moment(0).to_padic().to_string());
    if (k >= t_) {
        // characters of conductor p^n, n >= 2, carry p-power-order values and
        // need the ramified ring of level n-1
        long e = 0;
        for (Int d(chi.order()); d % p == 0; d /= p) ++e;
        if (e > R->ram_level()) {
            auto Rbig = CycloRing::composite(p, R->tame_conductor(), static_cast<int>(e),
                                             R->precision());
            Measure big = embed_measure(num_, Rbig);
            return twist_by_character_coset(big, chi).moment(k - t_);
        }
        Measure tw = chi.is_trivial() ? num_ : twist_by_character_coset(num_, chi);
        return tw.moment(k - t_);
    }
    // k < shift: x^(k-t) through omega and angle powers
    return integrate_mellin_core(num_, &chi, k - t_, nullptr, k - t_);
}

Padic PseudoMeasure::smoothing_denominator(const DirichletCharacter& chi, long k) const {
    const Int& p = prime();
    int M = num_.ring()->precision();
    Padic chia = chi.value_zp(Int(a_), p, M);
    return chia * Padic::from_int(Int(a_), p, M).pow(k) - Padic::from_int(1, p, M);
}

CycloElement PseudoMeasure::eval_ring(const DirichletCharacter& chi, long k) const {
    CycloElement m = numerator_integral(chi, k);
    if (a_ == 0) return m;
    Padic denom = smoothing_denominator(chi, k);
    if (denom.is_zero())
        throw PoleAtTrivialCharacter("eval: vanishing smoothing denominator",
                                     m.to_padic().to_string());
    return divide_by_padic(m, denom);
}

Padic PseudoMeasure::eval(const DirichletCharacter& chi, long k) const {
    // divide at the Padic level: the quotient may leave Z_p (negative
    // valuation) even though the numerator is integral
    CycloElement m = numerator_integral(chi, k);
    Padic val = m.to_padic();
    if (a_ == 0) return val;
    Padic denom = smoothing_denominator(chi, k);
    if (denom.is_zero())
        throw PoleAtTrivialCharacter("eval: vanishing smoothing denominator", val.to_string());
    return val / denom;
}

Padic PseudoMeasure::eval_mellin(const DirichletCharacter& chi_fin, long j, const Padic& s) const {
    const Int& p = prime();
    int M = num_.ring()->precision();
    Padic s_shift = s - Padic::from_int(Int(t_), p, M);
    CycloElement numint = integrate_mellin_core(num_, chi_fin.is_trivial() ? nullptr : &chi_fin,
                                                j - t_, &s_shift, 0);
    Padic val = numint.to_padic();
    if (a_ == 0) return val;
    Padic chia = chi_fin.value_zp(Int(a_), p, M);
    Padic A = Padic::from_int(Int(a_), p, M);
    Padic denom = chia * teichmuller(A).pow(j) * padic_power(angle(A), s) - Padic::from_int(1, p, M);
    if (denom.is_zero())
        throw PoleAtTrivialCharacter("eval_mellin: pole of the pseudo-measure", val.to_string());
    return val / denom;
}

Padic PseudoMeasure::eval_mellin_int(const DirichletCharacter& chi_fin, long j, long s) const {
    const Int& p = prime();
    int M = num_.ring()->precision();
    CycloElement numint = integrate_mellin_core(num_, chi_fin.is_trivial() ? nullptr : &chi_fin,
                                                j - t_, nullptr, s - t_);
    Padic val = numint.to_padic();
    if (a_ == 0) return val;
    Padic chia = chi_fin.value_zp(Int(a_), p, M);
    Padic A = Padic::from_int(Int(a_), p, M);
    Padic denom = chia * teichmuller(A).pow(j) * angle(A).pow(s) - Padic::from_int(1, p, M);
    if (denom.is_zero())
        throw PoleAtTrivialCharacter("eval_mellin: pole of the pseudo-measure", val.to_string());
    return val / denom;
}

// ---------------------------------------------------------------------------
// tame conductors

Measure build_mu_eta(const DirichletCharacter& eta, const Int& p, int M, long N) {
    if (eta.conductor() <= 1) throw BadConductor("build_mu_eta: eta must be nontrivial");
    if (!eta.is_primitive()) throw BadConductor("build_mu_eta: eta must be primitive");
    unsigned long D = eta.conductor();
    if (Int(D) % p == 0) throw BadConductor("build_mu_eta: conductor must be prime to p");
    auto R = CycloRing::unramified(p, D, M);
    auto inv_vals = realize_character(eta.inverse(), R);
    CycloElement eps = ring_root_of_unity(R, D);
    // F_eta = -(1/G(eta^{-1})) sum_c eta^{-1}(c) / ((1+T) eps^c - 1)
    std::vector<CycloElement> S(N, CycloElement::zero(R));
    for (unsigned long c = 1; c < D; ++c) {
        if (std::gcd(c, D) != 1 || inv_vals[c].is_zero()) continue;
        CycloElement ec = eps.pow(Int(c));
        CycloElement x0 = (ec - CycloElement::one(R)).inverse();  // 1/(eps^c - 1)
        // 1/((eps^c - 1) + eps^c T) = x0 sum_n (-eps^c x0 T)^n
        CycloElement ratio = -(ec * x0);
        CycloElement term = x0;
        for (long n = 0; n < N; ++n) {
            S[n] = S[n] + inv_vals[c] * term;
            term = term * ratio;
        }
    }
    // 1/G(eta^{-1}) = eta(-1) G(eta)/D with D a unit mod p
    CycloElement g = gauss_sum(eta, R);
    Int Dinv = inv_mod(Int(D), R->ctx().pM);
    int sign = eta.parity();
    for (auto& c : S) {
        c = (c * g).scaled(Dinv);
        if (sign == 1) c = -c;  // the overall -1 times eta(-1)
    }
    return Measure::from_t_coeffs(R, std::move(S));
}

PseudoMeasure build_zeta_eta(const DirichletCharacter& eta, const Int& p, int M, long N) {
    Measure mu = build_mu_eta(eta, p, M, N);
    const auto& R = mu.ring();
    // psi(F_eta) = eta(p) F_eta: restriction to units is (1 - eta(p) phi)
    auto vals = realize_character(eta, R);
    CycloElement etap = vals[(p % Int(eta.conductor())).convert_to<unsigned long>()];
    Measure num = restrict_eigen(mu, etap).truncated(N);
    return PseudoMeasure(std::move(num), 0, 1);
}

Padic mellin_branch(int i, const Padic& s, const PseudoMeasure& zeta) {
    const Int& p = zeta.prime();
    int M = zeta.numerator().ring()->precision();
    Padic one = Padic::from_int(1, p, M);
    return zeta.eval_mellin(DirichletCharacter::trivial(), i, one - s);
}

Padic Lp_theta(const DirichletCharacter& chi, const PseudoMeasure& zeta_eta, const Padic& s) {
    const Int& p = zeta_eta.prime();
    int M = zeta_eta.numerator().ring()->precision();
    Padic one = Padic::from_int(1, p, M);
    return zeta_eta.eval_mellin(chi, 0, one - s);
}

void factor_character(const DirichletCharacter& theta, const Int& p, DirichletCharacter& chi_p,
                      DirichletCharacter& eta_tame) {
    unsigned long N = theta.modulus();
    unsigned long pl = p.convert_to<unsigned long>();
    unsigned long pn = 1, D = N;
    while (D % pl == 0) {
        D /= pl;
        pn *= pl;
    }
    // chi(a) = theta(lift of (a mod p^n, 1 mod D)), eta(b) symmetrically
    std::vector<long> exps_chi(pn, -1), exps_eta(D, -1);
    for (unsigned long a = 0; a < pn; ++a) {
        if (pn > 1 && std::gcd(a, pn) != 1) continue;
        for (unsigned long x = 0; x < N; ++x)
            if (x % pn == a % pn && (D == 1 || x % D == 1 % D)) {
                exps_chi[a] = theta.exponent_at(Int(x));
                break;
            }
    }
    for (unsigned long b = 0; b < D; ++b) {
        if (D > 1 && std::gcd(b, D) != 1) continue;
        for (unsigned long x = 0; x < N; ++x)
            if ((D == 1 || x % D == b % D) && x % pn == 1 % pn) {
                exps_eta[b] = theta.exponent_at(Int(x));
                break;
            }
    }
    chi_p = DirichletCharacter::from_exponents(pn, theta.order(), std::move(exps_chi));
    eta_tame = DirichletCharacter::from_exponents(D, theta.order(), std::move(exps_eta));
}

LpAtOne lp_at_one(const DirichletCharacter& theta, const Int& p, int M, long N) {
    if (theta.is_trivial()) throw BadParameter("lp_at_one: theta must be nontrivial");
    if (theta.is_odd()) throw OddCharacter("lp_at_one: both sides vanish for odd theta");
    if (!theta.is_primitive()) throw BadParameter("lp_at_one: theta must be primitive");

    DirichletCharacter chi = DirichletCharacter::trivial();
    DirichletCharacter eta = DirichletCharacter::trivial();
    factor_character(theta, p, chi, eta);
    unsigned long pl = p.convert_to<unsigned long>();
    int n = 0;
    for (unsigned long q = chi.modulus(); q > 1; q /= pl) ++n;
    if (n > 1) throw BadParameter("lp_at_one: ramified part beyond conductor p unsupported");
    unsigned long D = eta.modulus();

    // path A: L_p(theta, 1) = int chi(x) <x>^0 d zeta_eta
    PseudoMeasure zeta = eta.is_trivial() ? build_zeta_p(p, M, N) : build_zeta_eta(eta, p, M, N);
    Padic A = zeta.eval_mellin_int(chi, 0, 0);

    // path B: -(1 - theta(p)/p) (1/G(theta^{-1})) sum_a theta^{-1}(a) log_p(1 - xi^a)
    unsigned long cond = theta.conductor();
    CycloRingPtr R = (D <= 1) ? CycloRing::ramified(p, 1, M) : CycloRing::composite(p, D, n, M);
    CycloElement xi = ring_root_of_unity(R, cond);
    auto inv_vals = realize_character(theta.inverse(), R);
    CycloElement S = CycloElement::zero(R);
    bool prime_power_cond = (D <= 1);
    for (unsigned long a = 1; a < cond; ++a) {
        if (std::gcd(a, cond) != 1) continue;
        CycloElement u = CycloElement::zero(R);
        if (prime_power_cond) {
            // log(1-xi^a) is replaced by log((1-xi^a)/(1-xi)); the weighted
            // sum is unchanged because sum_a theta^{-1}(a) = 0
            for (unsigned long i = 0; i < a; ++i) u = u + xi.pow(Int(i));
        } else {
            u = CycloElement::one(R) - xi.pow(Int(a));  // already a unit
        }
        S = S + inv_vals[a] * log_unit(u);
    }
    CycloElement g = gauss_sum(theta, R);
    // 1/G(theta^{-1}) = theta(-1) G(theta)/cond, theta even
    unsigned long cond_tame = cond / pow_int(p, static_cast<unsigned long>(n)).convert_to<unsigned long>();
    CycloElement scaled = (g * S).scaled(inv_mod(Int(cond_tame), R->ctx().pM));
    if (n > 0) scaled = scaled.divide_by_p(n);
    Padic B = -scaled.to_padic();
    // Euler-type factor (1 - theta(p)/p); theta(p) = 0 when p | conductor
    if (n == 0) {
        Padic thp = embed_cyclorat_zp(
            theta.value_exact(p, CycloRatField::make(theta.order())), p, M);
        Padic pinv = embed_rational(Rat(Int(1), p), p, M);
        B = B * (Padic::from_int(1, p, M) - thp * pinv);
    }

    return LpAtOne{A, B, Padic::agree_digits(A, B)};
}

std::vector<Padic> zeta_branch_coeffs(const PseudoMeasure& zeta, int sector, int ncoeffs) {
    const auto& num = zeta.numerator();
    const Int& p = num.ring()->prime();
    int M = num.ring()->precision();
    long pm1 = (p - 1).convert_to<long>();
    int K = ncoeffs + 2;
    // nodes gamma^j - 1 (j = 1..K); values int omega^sector <x>^j of the
    // smoothed numerator = omega^(sector - j)-twisted moment at j - shift
    std::vector<Padic> xs, Hs;
    TwistCache cache(num, nullptr, p);
    for (int j = 1; j <= K; ++j) {
        long e = mod_pm1(sector - j, pm1);
        Padic H = cache.get(e).moment(j - zeta.shift()).to_padic();
        Padic node = Padic::from_int(1 + p, p, M).pow(j) - Padic::from_int(1, p, M);
        xs.push_back(node);
        Hs.push_back(H);
    }
    // Newton divided differences, then expansion to monomial coefficients
    std::vector<Padic> d = Hs;
    for (int level = 1; level < K; ++level)
        for (int i = K - 1; i >= level; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Padic> coeffs(K + 1, Padic::zero(p, M));
    std::vector<Padic> basis{Padic::from_int(1, p, M)};
    for (int i = 0; i < K; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] = coeffs[j] + d[i] * basis[j];
        std::vector<Padic> nb(basis.size() + 1, Padic::zero(p, M));
        for (size_t j = 0; j < basis.size(); ++j) {
            nb[j + 1] = nb[j + 1] + basis[j];
            nb[j] = nb[j] - basis[j] * xs[i];
        }
        basis = std::move(nb);
    }
    coeffs.resize(ncoeffs);
    return coeffs;
}

}  // namespace zetap
