#include <zetap/polymod.hpp>

namespace zetap {

ModCtx::ModCtx(Int prime, int digits) : p(std::move(prime)), M(digits) {
    pM = pow_int(p, static_cast<unsigned long>(M));
    small = pM < (Int(1) << 62);
    if (small) pM64 = pM.convert_to<std::uint64_t>();
}

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_add(const ModCtx& m, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        r[i] = s >= m.pM ? s - m.pM : s;
    }
    poly_trim(r);
    return r;
}

Poly poly_sub(const ModCtx& m, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        Int s = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = s < 0 ? s + m.pM : s;
    }
    poly_trim(r);
    return r;
}

Poly poly_neg(const ModCtx& m, const Poly& a) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? Int(0) : m.pM - a[i];
    poly_trim(r);
    return r;
}

Poly poly_scale(const ModCtx& m, const Poly& a, const Int& c) {
    Int cr = m.reduce(c);
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * cr % m.pM;
    poly_trim(r);
    return r;
}

namespace {

std::vector<std::uint64_t> to_u64(const Poly& a) {
    std::vector<std::uint64_t> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].convert_to<std::uint64_t>();
    return r;
}

Poly from_u64(const std::vector<std::uint64_t>& a) {
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    poly_trim(r);
    return r;
}

Poly poly_mul_u64(const ModCtx& m, const Poly& pa, const Poly& pb, long trunc) {
    auto a = to_u64(pa);
    auto b = to_u64(pb);
    size_t n = a.size() + b.size() - 1;
    if (trunc >= 0 && static_cast<size_t>(trunc) < n) n = static_cast<size_t>(trunc);
    std::vector<std::uint64_t> acc(n, 0);
    const std::uint64_t mod = m.pM64;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const unsigned __int128 ai = a[i];
        size_t jmax = std::min(b.size(), n > i ? n - i : size_t(0));
        for (size_t j = 0; j < jmax; ++j) {
            unsigned __int128 t = ai * b[j] + acc[i + j];
            acc[i + j] = static_cast<std::uint64_t>(t % mod);
        }
    }
    return from_u64(acc);
}

}  // namespace

Poly poly_mul(const ModCtx& m, const Poly& a, const Poly& b, long trunc) {
    if (a.empty() || b.empty() || trunc == 0) return {};
    if (m.small) return poly_mul_u64(m, a, b, trunc);
    size_t n = a.size() + b.size() - 1;
    if (trunc >= 0 && static_cast<size_t>(trunc) < n) n = static_cast<size_t>(trunc);
    Poly acc(n, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        size_t jmax = std::min(b.size(), n > i ? n - i : size_t(0));
        for (size_t j = 0; j < jmax; ++j) acc[i + j] += a[i] * b[j];
    }
    for (auto& c : acc) c %= m.pM;
    poly_trim(acc);
    return acc;
}

void poly_divrem(const ModCtx& m, Poly a, const Poly& f, Poly& q, Poly& r) {
    if (f.empty() || f.back() != 1) throw ZetapError("poly_divrem: modulus must be monic");
    long df = static_cast<long>(f.size()) - 1;
    long da = static_cast<long>(a.size()) - 1;
    if (da < df) {
        q.clear();
        r = std::move(a);
        return;
    }
    q.assign(da - df + 1, 0);
    for (long i = da; i >= df; --i) {
        Int c = a[i] % m.pM;
        q[i - df] = c;
        if (c == 0) continue;
        for (long j = 0; j <= df; ++j) {
            a[i - df + j] = mod_reduce(a[i - df + j] - c * f[j], m.pM);
        }
    }
    a.resize(df);
    poly_trim(a);
    r = std::move(a);
}

Poly poly_rem(const ModCtx& m, Poly a, const Poly& f) {
    Poly q, r;
    poly_divrem(m, std::move(a), f, q, r);
    return r;
}

Poly poly_mulmod(const ModCtx& m, const Poly& a, const Poly& b, const Poly& f) {
    return poly_rem(m, poly_mul(m, a, b), f);
}

Poly poly_powmod(const ModCtx& m, Poly base, Int e, const Poly& f) {
    Poly r{Int(1)};
    base = poly_rem(m, std::move(base), f);
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(m, r, base, f);
        base = poly_mulmod(m, base, base, f);
        e >>= 1;
    }
    return r;
}

Poly series_inverse(const ModCtx& m, const Poly& a, long n) {
    if (a.empty()) throw ZetapError("series_inverse: zero series");
    Int c0inv = inv_mod(a[0], m.pM);
    Poly r{c0inv};
    // Newton: r <- r(2 - a r), doubling the valid prefix each step
    long k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        Poly ar = poly_mul(m, a, r, k);
        Poly t(std::max<size_t>(ar.size(), 1), 0);
        for (size_t i = 0; i < t.size(); ++i) {
            Int v = (i < ar.size() ? ar[i] : Int(0));
            t[i] = mod_reduce((i == 0 ? Int(2) : Int(0)) - v, m.pM);
        }
        r = poly_mul(m, r, t, k);
    }
    r.resize(static_cast<size_t>(n), 0);
    return r;
}

Poly poly_derivative(const ModCtx& m, const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(i) % m.pM;
    poly_trim(r);
    return r;
}

// ---------------------------------------------------------------------------
// F_p[X] machinery

namespace {
void fp_normalize(const Int& p, Poly& a) {
    for (auto& c : a) c = mod_reduce(c, p);
    poly_trim(a);
}
}  // namespace

Poly fp_rem(const Int& p, Poly a, const Poly& f) {
    fp_normalize(p, a);
    Poly g = f;
    fp_normalize(p, g);
    if (g.empty()) throw ZetapError("fp_rem: zero modulus");
    Int lcinv = inv_mod(g.back(), p);
    long dg = static_cast<long>(g.size()) - 1;
    while (static_cast<long>(a.size()) - 1 >= dg) {
        long da = static_cast<long>(a.size()) - 1;
        Int c = a.back() * lcinv % p;
        for (long j = 0; j <= dg; ++j) a[da - dg + j] = mod_reduce(a[da - dg + j] - c * g[j], p);
        poly_trim(a);
    }
    return a;
}

Poly fp_gcd(const Int& p, Poly a, Poly b) {
    fp_normalize(p, a);
    fp_normalize(p, b);
    while (!b.empty()) {
        Poly r = fp_rem(p, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Int lcinv = inv_mod(a.back(), p);
        for (auto& c : a) c = c * lcinv % p;
    }
    return a;
}

Poly fp_ext_gcd(const Int& p, const Poly& a, const Poly& b, Poly& u, Poly& v) {
    Poly r0 = a, r1 = b;
    fp_normalize(p, r0);
    fp_normalize(p, r1);
    Poly u0{Int(1)}, v0{}, u1{}, v1{Int(1)};
    auto submul = [&](const Poly& x, const Poly& q, const Poly& y) {
        // x - q*y mod p
        Poly qy;
        if (!q.empty() && !y.empty()) {
            qy.assign(q.size() + y.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < y.size(); ++j) qy[i + j] += q[i] * y[j];
        }
        Poly r(std::max(x.size(), qy.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) {
            Int s = (i < x.size() ? x[i] : Int(0)) - (i < qy.size() ? qy[i] : Int(0));
            r[i] = mod_reduce(s, p);
        }
        poly_trim(r);
        return r;
    };
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        {
            Poly rr = r0;
            Int lcinv = inv_mod(r1.back(), p);
            long d1 = static_cast<long>(r1.size()) - 1;
            long dq = static_cast<long>(rr.size()) - 1 - d1;
            if (dq < 0) {
                q.clear();
            } else {
                q.assign(dq + 1, 0);
                while (static_cast<long>(rr.size()) - 1 >= d1 && !rr.empty()) {
                    long da = static_cast<long>(rr.size()) - 1;
                    Int c = rr.back() * lcinv % p;
                    q[da - d1] = c;
                    for (long j = 0; j <= d1; ++j)
                        rr[da - d1 + j] = mod_reduce(rr[da - d1 + j] - c * r1[j], p);
                    poly_trim(rr);
                }
            }
        }
        Poly r2 = submul(r0, q, r1);
        Poly u2 = submul(u0, q, u1);
        Poly v2 = submul(v0, q, v1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        Int lcinv = inv_mod(r0.back(), p);
        for (auto& c : r0) c = c * lcinv % p;
        for (auto& c : u0) c = c * lcinv % p;
        for (auto& c : v0) c = c * lcinv % p;
    }
    u = std::move(u0);
    v = std::move(v0);
    return r0;
}

bool fp_is_irreducible(const Int& p, const Poly& f) {
    Poly g = f;
    fp_normalize(p, g);
    long n = static_cast<long>(g.size()) - 1;
    if (n <= 0) return false;
    ModCtx m1(p, 1);
    // x^(p^n) == x mod f
    Poly x{Int(0), Int(1)};
    Poly xp = poly_powmod(m1, x, pow_int(p, static_cast<unsigned long>(n)), g);
    Poly diff = poly_sub(m1, xp, x);
    fp_normalize(p, diff);
    if (!diff.empty()) return false;
    // gcd(x^(p^(n/q)) - x, f) = 1 for prime divisors q of n
    for (long q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime_small(Int(q))) continue;
        Poly xq = poly_powmod(m1, x, pow_int(p, static_cast<unsigned long>(n / q)), g);
        Poly d = poly_sub(m1, xq, x);
        Poly gg = fp_gcd(p, d, g);
        if (gg.size() != 1) return false;
    }
    return true;
}

Poly hensel_lift_factor(const ModCtx& m, const Poly& f, Poly g, Poly h) {
    // Bezout a*g + b*h = 1 mod p
    Poly a, b;
    Poly gcd = fp_ext_gcd(m.p, g, h, a, b);
    if (gcd.size() != 1) throw ZetapError("hensel_lift_factor: factors not coprime mod p");
    for (auto& c : g) c = mod_reduce(c, m.pM);
    for (auto& c : h) c = mod_reduce(c, m.pM);
    Int pk = m.p;
    for (int k = 1; k < m.M; ++k, pk *= m.p) {
        // e = (f - g h)/p^k mod p
        Poly gh = poly_mul(m, g, h);
        Poly diff = poly_sub(m, f, gh);
        Poly e(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            Int d = diff[i];
            if (d % pk != 0) throw ZetapError("hensel_lift_factor: drift");
            e[i] = mod_reduce(d / pk, m.p);
        }
        poly_trim(e);
        if (e.empty()) continue;
        // delta_g = (b e) mod g over F_p; delta_h = (a e + ((b e - delta_g)/g) h)
        ModCtx m1(m.p, 1);
        Poly be = poly_mul(m1, b, e);
        Poly q, dg;
        poly_divrem(m1, be, g, q, dg);
        Poly ae = poly_mul(m1, a, e);
        Poly qh = poly_mul(m1, q, h);
        Poly dh = poly_add(m1, ae, qh);
        // g += p^k dg; h += p^k dh (deg dg < deg g and deg dh < deg h)
        for (size_t i = 0; i < dg.size(); ++i) g[i] = mod_reduce(g[i] + pk * dg[i], m.pM);
        for (size_t i = 0; i < dh.size(); ++i) h[i] = mod_reduce(h[i] + pk * dh[i], m.pM);
    }
    // final consistency check
    Poly gh = poly_mul(m, g, h);
    Poly diff = poly_sub(m, f, gh);
    if (!diff.empty()) throw ZetapError("hensel_lift_factor: lift failed");
    return g;
}

}  // namespace zetap
