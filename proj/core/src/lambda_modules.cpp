#include <zetap/lambda_modules.hpp>

#include <algorithm>

namespace zetap {

WeierstrassData weierstrass_prepare(const ModCtx& m, const Poly& f, long N) {
    Poly a = f;
    a.resize(std::max<size_t>(a.size(), 1), 0);
    if (static_cast<long>(a.size()) > N) a.resize(N);
    for (auto& c : a) c = m.reduce(c);

    // mu = min v_p(a_i); IndeterminateInvariants when nothing survives mod p^M
    int mu = m.M;
    for (const auto& c : a)
        if (c != 0) mu = std::min<int>(mu, static_cast<int>(vp(c, m.p)));
    if (mu >= m.M)
        throw IndeterminateInvariants("weierstrass_prepare: f = 0 at working precision");
    Int pmu = pow_int(m.p, static_cast<unsigned long>(mu));
    ModCtx mr(m.p, m.M - mu);
    Poly b(a.size());
    for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] / pmu;

    // lambda = first unit coefficient
    long lambda = -1;
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] % m.p != 0) {
            lambda = static_cast<long>(i);
            break;
        }
    if (lambda < 0) throw IndeterminateInvariants("weierstrass_prepare: no unit coefficient in range");

    // Hensel against f/p^mu = P u with P = T^lambda, u = the tail, mod p
    Poly P(lambda + 1, 0);
    P[lambda] = 1;
    Poly u(b.begin() + lambda, b.end());
    for (auto& c : u) c = mod_reduce(c, m.p);
    poly_trim(u);
    // iterate: e_k = (b - P u)/p^k; delta_P = low part of u^{-1} e_k,
    // delta_u = u * (high part), everything mod p
    ModCtx m1(m.p, 1);
    Poly uinv = series_inverse(m1, u, N);
    Poly Pk = P, uk = u;
    Int pk = m.p;
    for (int k = 1; k < mr.M; ++k, pk *= m.p) {
        Poly prod = poly_mul(mr, Pk, uk, N);
        Poly diff = poly_sub(mr, b, prod);
        Poly e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            if (diff[i] % pk != 0) throw ZetapError("weierstrass_prepare: drift");
            e[i] = mod_reduce(diff[i] / pk, m.p);
        }
        poly_trim(e);
        if (e.empty()) continue;
        Poly w = poly_mul(m1, uinv, e, N);
        Poly dP(w.begin(), w.begin() + std::min<size_t>(w.size(), lambda));
        Poly hi(w.begin() + std::min<size_t>(w.size(), lambda), w.end());
        Poly dU = poly_mul(m1, hi, u, N - lambda);
        for (size_t i = 0; i < dP.size(); ++i)
            Pk[i] = mod_reduce(Pk[i] + pk * dP[i], mr.pM);
        if (uk.size() < dU.size()) uk.resize(dU.size(), 0);
        for (size_t i = 0; i < dU.size(); ++i)
            uk[i] = mod_reduce(uk[i] + pk * dU[i], mr.pM);
    }

    WeierstrassData out;
    out.mu = mu;
    out.lambda = lambda;
    out.distinguished = std::move(Pk);
    out.unit = std::move(uk);
    return out;
}

bool is_distinguished(const Int& p, const std::vector<Int>& g) {
    if (g.empty() || g.back() != 1) return false;
    for (size_t i = 0; i + 1 < g.size(); ++i)
        if (g[i] % p != 0) return false;
    return true;
}

void LambdaModuleDesc::validate() const {
    for (const auto& g : polys) {
        if (!is_distinguished(p, g))
            throw BadParameter("LambdaModuleDesc: component not distinguished");
        if (g[0] == 0) throw NotCoprime("LambdaModuleDesc: g(0) = 0 gives infinite quotients");
    }
    for (int mi : p_exponents)
        if (mi < 1) throw BadParameter("LambdaModuleDesc: p-exponents must be >= 1");
}

namespace {

// resultant of two rational polynomials by the Euclidean recurrence
Rat resultant_rat(std::vector<Rat> A, std::vector<Rat> B) {
    auto trim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(A);
    trim(B);
    if (A.empty() || B.empty()) return Rat(0);
    Rat acc(1);
    while (true) {
        long da = static_cast<long>(A.size()) - 1;
        long db = static_cast<long>(B.size()) - 1;
        if (db == 0) {
            Rat lb = B[0];
            Rat r = acc;
            for (long i = 0; i < da; ++i) r *= lb;
            return r;
        }
        // remainder of A mod B
        std::vector<Rat> R = A;
        Rat lb = B.back();
        while (static_cast<long>(R.size()) - 1 >= db) {
            long dr = static_cast<long>(R.size()) - 1;
            Rat c = R.back() / lb;
            for (long j = 0; j <= db; ++j) R[dr - db + j] -= c * B[j];
            trim(R);
            if (R.empty()) return Rat(0);
        }
        long dr = static_cast<long>(R.size()) - 1;
        // Res(A, B) = (-1)^(da db) lc(B)^(da - dr) Res(B, R)
        Rat sign = ((da * db) % 2 == 0) ? Rat(1) : Rat(-1);
        Rat scale(1);
        for (long i = 0; i < da - dr; ++i) scale *= lb;
        acc *= sign * scale;
        A = std::move(B);
        B = std::move(R);
    }
}

}  // namespace

long quotient_size_exponent(const Int& p, const std::vector<Int>& g, int n) {
    if (g.empty() || g[0] == 0) throw NotCoprime("quotient_size_exponent: g(0) = 0");
    // phi^n(T) mod g by exact binary powering of (1+T) in Z[T]/(g)
    long lam = static_cast<long>(g.size()) - 1;
    if (lam == 0) return 0;
    auto mul_mod_g = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        std::vector<Int> prod(x.size() + y.size() - 1, 0);
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
        // reduce mod monic g
        for (long i = static_cast<long>(prod.size()) - 1; i >= lam; --i) {
            Int c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (long j = 0; j < lam; ++j) prod[i - lam + j] -= c * g[j];
        }
        prod.resize(lam);
        return prod;
    };
    std::vector<Int> b = mul_mod_g({1, 1}, {1});  // 1 + T reduced mod g
    std::vector<Int> acc{1};
    acc.resize(lam, 0);
    Int ee = pow_int(p, static_cast<unsigned long>(n));
    while (ee > 0) {
        if ((ee & 1) != 0) acc = mul_mod_g(acc, b);
        b = mul_mod_g(b, b);
        ee >>= 1;
    }
    acc.resize(lam, 0);
    acc[0] -= 1;  // (1+T)^(p^n) - 1 mod g
    // Res(g, r): both exact
    std::vector<Rat> A(g.size()), B(acc.size());
    for (size_t i = 0; i < g.size(); ++i) A[i] = Rat(g[i]);
    for (size_t i = 0; i < acc.size(); ++i) B[i] = Rat(acc[i]);
    Rat res = resultant_rat(std::move(A), std::move(B));
    if (res == 0) throw NotCoprime("quotient_size_exponent: g shares a root with phi^n");
    return vp(res, p);
}

Int module_size_exponent(const LambdaModuleDesc& desc, int n) {
    desc.validate();
    Int e = 0;
    Int pn = pow_int(desc.p, static_cast<unsigned long>(n));
    for (int mi : desc.p_exponents) e += Int(mi) * pn;
    for (const auto& g : desc.polys) e += quotient_size_exponent(desc.p, g, n);
    return e;
}

GrowthFit growth_law(const LambdaModuleDesc& desc, int n_lo, int n_hi) {
    if (n_hi - n_lo < 2) throw BadParameter("growth_law: need at least three levels");
    GrowthFit fit;
    fit.mu = 0;
    for (int mi : desc.p_exponents) fit.mu += mi;
    fit.lambda = 0;
    for (const auto& g : desc.polys) fit.lambda += static_cast<long>(g.size()) - 1;
    for (int n = n_lo; n <= n_hi; ++n) fit.e.push_back(module_size_exponent(desc, n));
    // nu_n = e_n - mu p^n - lambda n must stabilize
    std::vector<Int> nus;
    for (int i = 0; i < static_cast<int>(fit.e.size()); ++i) {
        int n = n_lo + i;
        nus.push_back(fit.e[i] - Int(fit.mu) * pow_int(desc.p, static_cast<unsigned long>(n)) -
                      Int(fit.lambda) * n);
    }
    int n0 = -1;
    for (int i = static_cast<int>(nus.size()) - 1; i >= 0; --i) {
        if (nus[i] == nus.back())
            n0 = n_lo + i;
        else
            break;
    }
    if (n0 < 0 || n0 + 1 > n_lo + static_cast<int>(nus.size()) - 1)
        throw FitFailure("growth_law: affine shape never stabilizes in range");
    fit.nu = nus.back();
    fit.n0 = n0;
    return fit;
}

Int p_rank(const LambdaModuleDesc& desc, int n) {
    desc.validate();
    Int pn = pow_int(desc.p, static_cast<unsigned long>(n));
    long maxdeg = 0;
    long degsum = 0;
    for (const auto& g : desc.polys) {
        long d = static_cast<long>(g.size()) - 1;
        maxdeg = std::max(maxdeg, d);
        degsum += d;
    }
    if (pn < maxdeg) throw LevelTooSmall("p_rank: p^n below max deg g_j");
    return Int(desc.p_exponents.size()) * pn + degsum;
}

CharacteristicIdeal characteristic_ideal(const LambdaModuleDesc& desc) {
    desc.validate();
    CharacteristicIdeal out;
    for (int mi : desc.p_exponents) out.p_exponent += mi;
    out.poly = {1};
    for (const auto& g : desc.polys) {
        std::vector<Int> prod(out.poly.size() + g.size() - 1, 0);
        for (size_t i = 0; i < out.poly.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) prod[i + j] += out.poly[i] * g[j];
        out.poly = std::move(prod);
    }
    return out;
}

}  // namespace zetap
