#include <zetap/coleman.hpp>

#include <numeric>
#include <random>

namespace zetap {

UnitPowerSeries::UnitPowerSeries(ModCtx ctx, Poly coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = ctx_.reduce(x);
    poly_trim(c_);
    if (c_.empty() || c_[0] % ctx_.p == 0)
        throw NotAUnit("UnitPowerSeries: constant term must be a unit");
}

bool UnitPowerSeries::invertible() const { return !c_.empty() && c_[0] % ctx_.p != 0; }

UnitPowerSeries UnitPowerSeries::flagged_norm_invariant() const {
    UnitPowerSeries f = *this;
    f.norm_invariant_ = true;
    return f;
}

bool UnitPowerSeries::equals_mod(const UnitPowerSeries& o, int digits, long upto_degree) const {
    Int pk = pow_int(ctx_.p, static_cast<unsigned long>(digits));
    long n = static_cast<long>(std::max(c_.size(), o.c_.size()));
    if (upto_degree >= 0) n = std::min(n, upto_degree);
    for (long i = 0; i < n; ++i) {
        Int a = i < static_cast<long>(c_.size()) ? c_[i] : Int(0);
        Int b = i < static_cast<long>(o.c_.size()) ? o.c_[i] : Int(0);
        if (mod_reduce(a - b, pk) != 0) return false;
    }
    return true;
}

UnitPowerSeries coleman_closed_form(const ModCtx& m, long a) {
    if (a <= 0 || Int(a) % m.p == 0) throw BadParameter("coleman_closed_form: a must be a positive unit");
    // ((1+T)^a - 1)/T = sum_{k>=1} C(a,k) T^(k-1)
    Poly c(static_cast<size_t>(a), 0);
    for (long k = 1; k <= a; ++k)
        c[k - 1] = binomial_exact(Int(a), static_cast<unsigned long>(k)) % m.pM;
    return UnitPowerSeries(m, std::move(c)).flagged_norm_invariant();
}

// ---------------------------------------------------------------------------
// towers

UnitTower cyclotomic_tower(const Int& p, int M, long a, int depth) {
    if (depth < 1) throw BadParameter("cyclotomic_tower: depth >= 1");
    if (a == 0 || Int(a) % p == 0) throw BadParameter("cyclotomic_tower: a must be a unit");
    Int pn = pow_int(p, static_cast<unsigned long>(depth));
    Int ar = mod_reduce(Int(a), pn);
    if (ar == 1 || ar == pn - 1) throw BadParameter("cyclotomic_tower: a = +-1 mod p^depth");
    UnitTower t;
    t.p = p;
    t.M = M;
    t.depth = depth;
    for (int n = 1; n <= depth; ++n) {
        auto R = CycloRing::ramified(p, n, M);
        // c_n(a) = (zeta^a - 1)/(zeta - 1) = 1 + zeta + ... + zeta^(a-1)
        CycloElement u = CycloElement::zero(R);
        long aa = mod_reduce(Int(a), Int(R->root_order())).convert_to<long>();
        for (long i = 0; i < aa; ++i) u = u + CycloElement::root_power(R, i);
        if (!u.is_unit()) throw BadParameter("cyclotomic_tower: c_n(a) not a unit");
        t.rings.push_back(R);
        t.levels.push_back(u);
    }
    return t;
}

bool UnitTower::norm_compatible(int digits) const {
    for (int n = depth; n >= 2; --n) {
        const auto& Rn = rings[n - 1];
        const auto& u = levels[n - 1];
        // Gal(K_n/K_{n-1}) sends X to X^(1 + c p^(n-1))
        Int pnm1 = pow_int(p, static_cast<unsigned long>(n - 1));
        CycloElement prod = CycloElement::one(Rn);
        for (long c = 0; c < p.convert_to<long>(); ++c)
            prod = prod * galois_apply(u, 1 + Int(c) * pnm1);
        // compare against u_{n-1} embedded through Y -> X^p
        const auto& lower = levels[n - 2];
        CycloElement xp = CycloElement::root_power(Rn, p.convert_to<long>());
        CycloElement emb = CycloElement::zero(Rn);
        for (long i = static_cast<long>(lower.coords().size()) - 1; i >= 0; --i)
            emb = emb * xp + CycloElement::from_int(Rn, lower.coords()[i]);
        if (!prod.equals_mod(emb, digits)) return false;
    }
    return true;
}

CycloElement evaluate_at_uniformizer(const UnitPowerSeries& f, const CycloRingPtr& ring_n) {
    // f(X - 1) by Horner
    CycloElement pi = CycloElement::root_power(ring_n, 1) - CycloElement::one(ring_n);
    CycloElement acc = CycloElement::zero(ring_n);
    for (long i = f.degree(); i >= 0; --i)
        acc = acc * pi + CycloElement::from_int(ring_n, f.coeffs()[i]);
    return acc;
}

UnitTower tower_from_series(const UnitPowerSeries& f, const Int& p, int M, int depth) {
    UnitTower t;
    t.p = p;
    t.M = M;
    t.depth = depth;
    for (int n = 1; n <= depth; ++n) {
        auto R = CycloRing::ramified(p, n, M);
        t.rings.push_back(R);
        t.levels.push_back(evaluate_at_uniformizer(f, R));
    }
    return t;
}

// ---------------------------------------------------------------------------
// norm operator

namespace {

// flat uint64 arithmetic in Z[X]/(Phi_p, p^M) for the norm-product hot loop
struct FlatRing {
    long d;  // degree p-1
    std::uint64_t mod;

    // c = a*b reduced mod Phi_p: X^(d) = -(1 + X + ... + X^(d-1)) repeatedly
    void mul(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* c,
             std::uint64_t* scratch) const {
        const long dd = 2 * d - 1;
        for (long i = 0; i < dd; ++i) scratch[i] = 0;
        for (long i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            unsigned __int128 ai = a[i];
            for (long j = 0; j < d; ++j) {
                unsigned __int128 t = ai * b[j] + scratch[i + j];
                scratch[i + j] = static_cast<std::uint64_t>(t % mod);
            }
        }
        // reduce: for k from high to d: X^k = -(X^(k-d) + ... + X^(k-1))
        for (long k = dd - 1; k >= d; --k) {
            std::uint64_t ck = scratch[k];
            if (ck == 0) continue;
            scratch[k] = 0;
            for (long j = k - d; j < k; ++j) {
                std::uint64_t s = scratch[j];
                // s - ck mod `mod`
                scratch[j] = (s >= ck) ? s - ck : s + (mod - ck);
            }
        }
        for (long i = 0; i < d; ++i) c[i] = scratch[i];
    }
};

// exact polynomial product prod_c f(zeta^c U - 1) over the level-1 ring,
// flat-u64 kernel; coefficients of the input are plain residues mod p^M
std::vector<Poly> norm_product_fast(const ModCtx& m, const Poly& f) {
    long pl = m.p.convert_to<long>();
    long d = pl - 1;
    long deg = static_cast<long>(f.size()) - 1;
    FlatRing FR{d, m.pM64};
    auto at = [&](std::vector<std::uint64_t>& v, long i) { return v.data() + i * d; };

    std::vector<std::uint64_t> scratch(2 * d - 1);
    std::vector<std::uint64_t> prod(d, 0);  // length-1 polynomial, value 1
    prod[0] = 1;
    long prod_len = 1;
    prod.resize(static_cast<size_t>((pl * deg + 1)) * d, 0);

    std::vector<std::uint64_t> acc((deg + 1) * d, 0), next((deg + 2) * d, 0), tmp(d);
    for (long c = 0; c < pl; ++c) {
        // zeta^c as a flat element
        std::vector<std::uint64_t> zc(d, 0);
        if (c < d)
            zc[c] = 1;
        else  // X^(p-1) = -(1 + X + ... + X^(p-2))
            for (long i = 0; i < d; ++i) zc[i] = m.pM64 - 1;
        // factor = f(zc U - 1) by Horner over U
        long acc_len = 0;
        std::fill(acc.begin(), acc.end(), 0);
        for (long i = deg; i >= 0; --i) {
            std::fill(next.begin(), next.end(), 0);
            for (long j = 0; j < acc_len; ++j) {
                FR.mul(at(acc, j), zc.data(), tmp.data(), scratch.data());
                for (long t = 0; t < d; ++t) {
                    // next[j+1] += acc[j]*zc; next[j] -= acc[j]
                    std::uint64_t* nj1 = at(next, j + 1);
                    std::uint64_t s = nj1[t] + tmp[t];
                    nj1[t] = (s >= m.pM64) ? s - m.pM64 : s;
                    std::uint64_t* nj = at(next, j);
                    std::uint64_t aj = at(acc, j)[t];
                    nj[t] = (nj[t] >= aj) ? nj[t] - aj : nj[t] + (m.pM64 - aj);
                }
            }
            // constant += f_i
            std::uint64_t fi = f[i].convert_to<std::uint64_t>();
            std::uint64_t s = next[0] + fi;
            next[0] = (s >= m.pM64) ? s - m.pM64 : s;
            acc_len = std::min(acc_len + 1, deg + 1);
            std::swap(acc, next);
        }
        // prod *= acc
        std::vector<std::uint64_t> np((prod_len + acc_len) * d, 0);
        for (long i = 0; i < prod_len; ++i) {
            bool zero = true;
            for (long t = 0; t < d; ++t)
                if (at(prod, i)[t] != 0) zero = false;
            if (zero) continue;
            for (long j = 0; j < acc_len; ++j) {
                FR.mul(at(prod, i), at(acc, j), tmp.data(), scratch.data());
                std::uint64_t* dst = np.data() + (i + j) * d;
                for (long t = 0; t < d; ++t) {
                    std::uint64_t s = dst[t] + tmp[t];
                    dst[t] = (s >= m.pM64) ? s - m.pM64 : s;
                }
            }
        }
        prod_len = prod_len + acc_len - 1;
        prod.assign(np.begin(), np.begin() + (prod_len + 1) * d);
        prod.resize(static_cast<size_t>((pl * deg + 1)) * d, 0);
    }

    std::vector<Poly> out(prod_len);
    for (long i = 0; i < prod_len; ++i) {
        Poly coords(d);
        for (long t = 0; t < d; ++t) coords[t] = prod[i * d + t];
        poly_trim(coords);
        out[i] = std::move(coords);
    }
    return out;
}

std::vector<Poly> norm_product_generic(const ModCtx& m, const Poly& f) {
    const Int& p = m.p;
    long pl = p.convert_to<long>();
    long deg = static_cast<long>(f.size()) - 1;
    auto R1 = CycloRing::ramified(p, 1, m.M);
    std::vector<CycloElement> prod{CycloElement::one(R1)};
    for (long c = 0; c < pl; ++c) {
        CycloElement zc = CycloElement::root_power(R1, c);
        std::vector<CycloElement> acc;
        for (long i = deg; i >= 0; --i) {
            std::vector<CycloElement> next(acc.size() + 1, CycloElement::zero(R1));
            for (size_t j = 0; j < acc.size(); ++j) {
                next[j + 1] = next[j + 1] + acc[j] * zc;
                next[j] = next[j] - acc[j];
            }
            next[0] = next[0] + CycloElement::from_int(R1, f[i]);
            acc = std::move(next);
        }
        std::vector<CycloElement> np(prod.size() + acc.size() - 1, CycloElement::zero(R1));
        for (size_t i = 0; i < prod.size(); ++i)
            for (size_t j = 0; j < acc.size(); ++j) np[i + j] = np[i + j] + prod[i] * acc[j];
        prod = std::move(np);
    }
    std::vector<Poly> out(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) out[i] = prod[i].coords();
    return out;
}

}  // namespace

UnitPowerSeries norm_operator(const UnitPowerSeries& f) {
    const ModCtx& m = f.ctx();
    long pl = m.p.convert_to<long>();
    long d = f.degree();

    std::vector<Poly> prod =
        m.small ? norm_product_fast(m, f.coeffs()) : norm_product_generic(m, f.coeffs());

    // Galois invariance: only U-exponents divisible by p survive, and the
    // surviving coefficients lie in Z_p
    Poly g_u(d + 1, 0);
    for (size_t mm = 0; mm < prod.size(); ++mm) {
        const Poly& coords = prod[mm];
        if (static_cast<long>(mm) % pl == 0) {
            for (size_t t = 1; t < coords.size(); ++t)
                if (coords[t] != 0)
                    throw DescentFailure("norm_operator: coefficient does not descend to Z_p");
            g_u[mm / pl] = coords.empty() ? Int(0) : coords[0];
        } else {
            for (const auto& x : coords)
                if (x != 0) throw DescentFailure("norm_operator: stray U-exponent in the product");
        }
    }
    // back to T-coordinates: t_j = sum_m u_m C(m, j)
    Poly g_t(d + 1, 0);
    Poly row(d + 1, 0);
    row[0] = 1;
    for (long mm = 0; mm <= d; ++mm) {
        if (mm > 0) {
            for (long j = std::min(mm, d); j >= 1; --j) {
                Int s = row[j] + row[j - 1];
                row[j] = s >= m.pM ? s - m.pM : s;
            }
        }
        if (g_u[mm] == 0) continue;
        for (long j = 0; j <= mm; ++j) g_t[j] = (g_t[j] + g_u[mm] * row[j]) % m.pM;
    }
    poly_trim(g_t);
    return UnitPowerSeries(m, std::move(g_t));
}

// ---------------------------------------------------------------------------
// reconstruction

namespace {

// modulus of the Eisenstein presentation at level n: E(T) = Phi_{p^n}(1+T)
Poly eisenstein_modulus(const ModCtx& m, int level) {
    long step = pow_int(m.p, static_cast<unsigned long>(level - 1)).convert_to<long>();
    long pl = m.p.convert_to<long>();
    Poly one_plus{1, 1};
    Poly pow_step{1};
    {
        Poly base = one_plus;
        long e = step;
        while (e > 0) {
            if (e & 1) pow_step = poly_mul(m, pow_step, base);
            base = poly_mul(m, base, base);
            e >>= 1;
        }
    }
    Poly total{};
    Poly cur{1};
    for (long i = 0; i < pl; ++i) {
        total = poly_add(m, total, cur);
        cur = poly_mul(m, cur, pow_step);
    }
    return total;
}

}  // namespace

UnitPowerSeries coleman_reconstruct(const UnitTower& tower, int target_digits) {
    const Int& p = tower.p;
    int n = tower.depth;
    int certified = std::min(tower.M, n);
    if (target_digits > certified)
        throw InsufficientDepth("coleman_reconstruct: requested precision beyond the depth bound");
    if (target_digits == 0) target_digits = certified;
    int K = target_digits;  // interpolate u_n to p^K
    int Mw = K + n + 6;     // the greedy digits cost about one digit per D steps
    if (tower.M < Mw) Mw = tower.M;
    if (Mw < K + 2) throw InsufficientDepth("coleman_reconstruct: tower precision too small");
    ModCtx m(p, Mw);

    Poly E = eisenstein_modulus(m, n);
    long D = static_cast<long>(E.size()) - 1;
    // E(T) = T^D + e_{D-1} T^(D-1) + ... + e_0, Eisenstein with e_0 = p;
    // p/pi = -(T^(D-1) + sum_{i=1}^{D-1} e_i T^(i-1)) / u0 evaluated at pi
    Int e0 = E[0];
    if (e0 % p != 0 || (e0 / p) % p == 0)
        throw ZetapError("coleman_reconstruct: modulus not Eisenstein");
    Int u0inv = inv_mod(e0 / p, m.pM);
    Poly corr(D, 0);
    for (long i = 1; i < D; ++i) corr[i - 1] = mod_reduce(-(u0inv * E[i]), m.pM);
    corr[D - 1] = mod_reduce(-u0inv, m.pM);

    // u_n in the pi-basis: substitute X = 1 + T and reduce mod (E, p^Mw)
    const auto& un = tower.levels[n - 1];
    Poly v{};
    for (long i = static_cast<long>(un.coords().size()) - 1; i >= 0; --i) {
        Poly next(v.size() + 1, 0);
        for (size_t j = 0; j < v.size(); ++j) {
            next[j] = (next[j] + v[j]) % m.pM;
            next[j + 1] = (next[j + 1] + v[j]) % m.pM;
        }
        if (next.empty()) next.assign(1, 0);
        next[0] = mod_reduce(next[0] + un.coords()[i], m.pM);
        poly_trim(next);
        v = poly_rem(m, std::move(next), E);
    }
    v.resize(D, 0);

    // greedy digit interpolation: f(pi) = u_n mod p^K
    long digits = static_cast<long>(K) * D;
    Poly f(digits, 0);
    for (long j = 0; j < digits; ++j) {
        Int a = mod_reduce(v[0], p);
        f[j] = a;
        // v <- (v - a)/pi: shift down, with the p-carry folded through corr
        Int carry = mod_reduce(v[0] - a, m.pM) / p;
        for (long i = 1; i < D; ++i) v[i - 1] = v[i];
        v[D - 1] = 0;
        if (carry != 0)
            for (long i = 0; i < D; ++i) v[i] = mod_reduce(v[i] + carry * corr[i], m.pM);
    }
    poly_trim(f);
    if (f.empty() || f[0] % p == 0)
        throw InsufficientDepth("coleman_reconstruct: interpolant is not a unit series");

    UnitPowerSeries g(m, std::move(f));
    for (int it = 0; it < 2 * n; ++it) g = norm_operator(g);

    ModCtx mout(p, target_digits);
    Poly out = g.coeffs();
    for (auto& c : out) c = mod_reduce(c, mout.pM);
    poly_trim(out);
    return UnitPowerSeries(mout, std::move(out)).flagged_norm_invariant();
}

// ---------------------------------------------------------------------------
// logarithmic derivative and the Coleman map

Poly log_derivative(const ModCtx& m, const Poly& f, long N) {
    if (f.empty() || f[0] % m.p == 0) throw NotAUnit("log_derivative: series not invertible");
    Poly fp = poly_derivative(m, f);
    Poly num = poly_mul(m, Poly{1, 1}, fp, N);
    Poly finv = series_inverse(m, f, N);
    Poly out = poly_mul(m, num, finv, N);
    out.resize(N, 0);
    return out;
}

PseudoMeasure coleman_map(const UnitPowerSeries& f, long N) {
    const ModCtx& m = f.ctx();
    if (!f.norm_invariant_flag()) {
        UnitPowerSeries nf = norm_operator(f);
        if (!nf.equals_mod(f, std::max(1, m.M - 1)))
            throw NotNormInvariant("coleman_map: N(f) != f");
    }
    Poly delta = log_derivative(m, f.coeffs(), N);
    auto R = CycloRing::zp(m.p, m.M);
    Measure dmu = Measure::from_series(R, delta, N);
    // psi(Delta f) = Delta f for norm-invariant f: restriction is (1 - phi)
    Measure num = restrict_eigen(dmu, CycloElement::one(R)).truncated(N);
    return PseudoMeasure(std::move(num), 0, 1);
}

// ---------------------------------------------------------------------------
// fundamental exact sequence

FundamentalSequenceReport fundamental_sequence_checks(const Int& p, int M, long N,
                                                      unsigned long seed) {
    FundamentalSequenceReport rep;
    auto R = CycloRing::zp(p, M);
    std::mt19937_64 rng(seed);

    // cokernel witness: psi(1+T) = 0 and evaluation at T = 0 gives 1
    {
        Measure oneT = Measure::from_series(R, Poly{1, 1}, N);
        rep.cokernel_witness =
            trace_psi(oneT).is_zero_mod(M) && oneT.moment(0).to_padic().unit_part() == 1;
    }

    bool pre_ok = true;
    bool ker_ok = true;
    long pl = p.convert_to<long>();
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<CycloElement> t;
        for (long k = 0; k < N; ++k) t.push_back(CycloElement::from_int(R, Int(rng())));
        Measure g = restrict_to_units(Measure::from_t_coeffs(R, std::move(t)));
        // force g(0) = 0 without leaving psi = 0: subtract g(0) (1+T)
        Padic g0 = g.moment(0).to_padic();
        Measure oneT = Measure::from_series(R, Poly{1, 1}, N);
        if (!g0.is_zero()) g = g - oneT.scaled(CycloElement::from_padic(R, g0));
        // h = sum_k phi^k(g): phi^k(g) has T-valuation >= p^k, finitely many terms
        Measure h = g;
        Measure cur = g;
        while (true) {
            cur = frobenius_phi(cur).truncated(N);
            if (cur.is_zero_mod(M)) break;
            h = h + cur;
        }
        Measure back = h - frobenius_phi(h).truncated(N);
        if (!back.equals_mod(g, M - 1)) pre_ok = false;
        if (!trace_psi(h).equals_mod(h, 2, std::max<long>(4, N / (2 * pl)))) pre_ok = false;

        // kernel side: constants die under (1 - phi); nonzero psi=0 inputs
        // with g(0) = 0 are hit by non-constants
        Measure c = Measure::dirac_int(R, 0, N).scaled_int(Int(rng() % 100 + 1));
        if (!(c - frobenius_phi(c).truncated(N)).is_zero_mod(M)) ker_ok = false;
        if (!g.is_zero_mod(M) && back.is_zero_mod(M)) ker_ok = false;
    }
    rep.psi_zero_preimage = pre_ok;
    rep.kernel_constants = ker_ok;
    return rep;
}

// ---------------------------------------------------------------------------
// mod-p preimage of the logarithmic derivative

Poly delta_preimage_modp(const Int& p, const Poly& f, long N) {
    ModCtx m1(p, 1);
    // w = (T/(1+T)) f = sum_{k>=1} d_k T^k
    Poly oneT_inv = series_inverse(m1, Poly{1, 1}, N + 1);
    Poly w = poly_mul(m1, poly_mul(m1, Poly{0, 1}, f, N + 1), oneT_inv, N + 1);
    w.resize(N + 1, 0);

    // inductive digit construction: d_m != 0 forces m prime to p, and the
    // factor (1 - alpha_m T^m) with alpha_m = -d_m/m clears degree m
    std::vector<Int> alphas(N, 0);
    for (long mm = 1; mm < N; ++mm) {
        Int d = mod_reduce(w[mm], p);
        if (d == 0) continue;
        if (Int(mm) % p == 0) throw NotPsiFixed("delta_preimage_modp: d_m != 0 at p | m");
        Int alpha = mod_reduce(-(d * inv_mod(Int(mm), p)), p);
        alphas[mm] = alpha;
        // (T/(1+T)) Delta(1 - alpha T^m) = -sum_k m alpha^k T^(mk)
        Int ak = alpha;
        for (long k = 1; mm * k <= N; ++k) {
            w[mm * k] = mod_reduce(w[mm * k] + Int(mm) * ak, p);
            ak = ak * alpha % p;
        }
    }
    Poly g{1};
    for (long mm = 1; mm < N; ++mm) {
        if (alphas[mm] == 0) continue;
        Poly factor(mm + 1, 0);
        factor[0] = 1;
        factor[mm] = mod_reduce(-alphas[mm], p);
        g = poly_mul(m1, g, factor, N);
    }
    g.resize(N, 0);
    return g;
}

}  // namespace zetap
