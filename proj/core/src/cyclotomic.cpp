#include <zetap/cyclotomic.hpp>

#include <numeric>
#include <random>

namespace zetap {

namespace {

Poly phi_p_power(const Int& p, int n) {
    // Phi_{p^n}(X) = Phi_p(X^(p^(n-1))) = sum_{i<p} X^(i p^(n-1))
    unsigned long step = pow_int(p, static_cast<unsigned long>(n - 1)).convert_to<unsigned long>();
    unsigned long pl = p.convert_to<unsigned long>();
    Poly g((pl - 1) * step + 1, 0);
    for (unsigned long i = 0; i < pl; ++i) g[i * step] = 1;
    return g;
}

}  // namespace

CycloRingPtr CycloRing::zp(const Int& p, int M) {
    auto R = std::shared_ptr<CycloRing>(new CycloRing());
    R->ctx_ = ModCtx(p, M);
    R->modulus_ = {R->ctx_.reduce(Int(-1)), Int(1)};  // X - 1
    R->root_order_ = 1;
    R->level_ = 0;
    R->D_ = 1;
    R->f_ = 1;
    return R;
}

CycloRingPtr CycloRing::ramified(const Int& p, int level, int M) {
    if (level < 1) throw BadParameter("ramified: level >= 1 required");
    auto R = std::shared_ptr<CycloRing>(new CycloRing());
    R->ctx_ = ModCtx(p, M);
    R->modulus_ = phi_p_power(p, level);
    for (auto& c : R->modulus_) c = R->ctx_.reduce(c);
    // keep the monic lead exactly 1
    R->modulus_.back() = 1;
    R->root_order_ = pow_int(p, static_cast<unsigned long>(level)).convert_to<unsigned long>();
    R->level_ = level;
    R->D_ = 1;
    R->f_ = 1;
    return R;
}

namespace {

// an irreducible degree-f factor of Phi_D mod p, found through the order-D
// element beta of F_{p^f}: the factor is prod_i (X - beta^(p^i))
Poly phi_d_factor_mod_p(const Int& p, unsigned long D, unsigned long f) {
    ModCtx m1(p, 1);
    // find an irreducible h of degree f over F_p (deterministic scan)
    Poly h;
    if (f == 1) {
        h = {Int(0), Int(1)};  // placeholder; direct root search below
    } else {
        std::mt19937_64 rng(0x5eedu + D);
        unsigned long pl = p.convert_to<unsigned long>();
        while (true) {
            Poly cand(f + 1, 0);
            cand[f] = 1;
            for (unsigned long i = 0; i < f; ++i) cand[i] = Int(rng() % pl);
            if (fp_is_irreducible(p, cand)) {
                h = cand;
                break;
            }
        }
    }
    Int q = pow_int(p, f);  // size of F_{p^f}
    if ((q - 1) % Int(D) != 0) throw ZetapError("phi_d_factor_mod_p: D does not divide p^f - 1");
    // find beta of exact multiplicative order D
    auto elt_pow = [&](const Poly& a, Int e) { return poly_powmod(m1, a, std::move(e), h); };
    std::mt19937_64 rng(0xbe7au + D);
    unsigned long pl = p.convert_to<unsigned long>();
    Poly beta;
    while (true) {
        Poly gamma(f == 1 ? 1 : f, 0);
        bool nonzero = false;
        for (auto& c : gamma) {
            c = Int(rng() % pl);
            if (c != 0) nonzero = true;
        }
        if (!nonzero) continue;
        if (f == 1) {
            // gamma is a scalar; h is unused in this branch
            Poly b{pow_mod(gamma[0], (q - 1) / Int(D), p)};
            bool ok = b[0] != 1 || D == 1;
            if (!ok) continue;
            // verify exact order
            bool exact = true;
            for (unsigned long r = 2; r <= D; ++r) {
                if (D % r != 0 || !is_prime_small(Int(r))) continue;
                if (pow_mod(b[0], Int(D / r), p) == 1) exact = false;
            }
            if (!exact) continue;
            beta = b;
            break;
        }
        Poly b = elt_pow(gamma, (q - 1) / Int(D));
        // check exact order D
        bool exact = !b.empty();
        for (unsigned long r = 2; r <= D && exact; ++r) {
            if (D % r != 0 || !is_prime_small(Int(r))) continue;
            Poly br = elt_pow(b, Int(D / r));
            if (br.size() == 1 && br[0] == 1) exact = false;
        }
        if (b.size() == 1 && b[0] == 1) exact = false;
        if (!exact) continue;
        beta = b;
        break;
    }
    if (f == 1) return Poly{m1.reduce(-beta[0]), Int(1)};
    // factor = prod_{i<f} (X - beta^(p^i)), computed in F_{p^f}[X]
    std::vector<Poly> roots(f);
    roots[0] = beta;
    for (unsigned long i = 1; i < f; ++i) roots[i] = elt_pow(roots[i - 1], p);
    // multiply out; coefficients are elements of F_{p^f} (polys mod h)
    std::vector<Poly> fac{Poly{Int(1)}};
    for (unsigned long i = 0; i < f; ++i) {
        // multiply fac (poly in X with F_{p^f} coeffs) by (X - roots[i])
        std::vector<Poly> next(fac.size() + 1, Poly{});
        for (size_t j = 0; j < fac.size(); ++j) {
            // X * fac_j
            next[j + 1] = poly_add(m1, next[j + 1], fac[j]);
            // - roots[i] * fac_j
            Poly t = poly_mulmod(m1, fac[j], roots[i], h);
            next[j] = poly_sub(m1, next[j], t);
        }
        fac = std::move(next);
    }
    Poly result(fac.size());
    for (size_t j = 0; j < fac.size(); ++j) {
        // each coefficient must be in F_p
        const Poly& cj = fac[j];
        if (cj.size() > 1) throw ZetapError("phi_d_factor_mod_p: coefficient not in F_p");
        result[j] = cj.empty() ? Int(0) : cj[0];
    }
    return result;
}

}  // namespace

CycloRingPtr CycloRing::unramified(const Int& p, unsigned long D, int M) {
    if (D <= 2) throw BadConductor("unramified: D > 2 required");
    if (Int(D) % p == 0) throw BadConductor("unramified: p divides D");
    auto R = std::shared_ptr<CycloRing>(new CycloRing());
    R->ctx_ = ModCtx(p, M);
    unsigned long f = mult_order(p, Int(D));
    std::vector<Int> phiD = cyclotomic_polynomial(D);
    if (f == phiD.size() - 1) {
        // Phi_D stays irreducible; no lifting needed
        R->modulus_.assign(phiD.begin(), phiD.end());
        for (auto& c : R->modulus_) c = R->ctx_.reduce(c);
        R->modulus_.back() = 1;
    } else {
        Poly g0 = phi_d_factor_mod_p(p, D, f);
        Poly phiDm(phiD.begin(), phiD.end());
        for (auto& c : phiDm) c = R->ctx_.reduce(c);
        // cofactor mod p
        ModCtx m1(p, 1);
        Poly phired = phiDm;
        for (auto& c : phired) c = mod_reduce(c, p);
        Poly q, r;
        poly_divrem(m1, phired, g0, q, r);
        if (!r.empty()) throw ZetapError("unramified: factor does not divide Phi_D mod p");
        R->modulus_ = hensel_lift_factor(R->ctx_, phiDm, g0, q);
    }
    R->root_order_ = D;
    R->level_ = 0;
    R->D_ = D;
    R->f_ = f;
    return R;
}

CycloRingPtr CycloRing::composite(const Int& p, unsigned long D, int level, int M) {
    if (level < 1) return unramified(p, D, M);
    if (D <= 1) return ramified(p, level, M);
    auto RD = unramified(p, D, M);
    unsigned long f = RD->residue_degree();
    // minimal polynomial of zeta_D * zeta_{p^n}:
    //   prod_{j<f} w_j^phi(p^n) Phi_{p^n}(X / w_j),  w_j = Y^(p^j mod D)
    Poly phi = phi_p_power(p, level);
    unsigned long d2 = phi.size() - 1;
    // polynomial in X with CycloElement coefficients, start = 1
    std::vector<CycloElement> acc{CycloElement::one(RD)};
    Int pj = 1;
    for (unsigned long j = 0; j < f; ++j) {
        CycloElement w = CycloElement::root_power(RD, (pj % Int(D)).convert_to<long>());
        // factor_k = phi[k] * w^(d2 - k)
        std::vector<CycloElement> fac(d2 + 1, CycloElement::zero(RD));
        CycloElement wpow = CycloElement::one(RD);
        for (long k = static_cast<long>(d2); k >= 0; --k) {
            if (phi[k] != 0) fac[k] = wpow.scaled(phi[k]);
            wpow = wpow * w;
        }
        // acc *= fac
        std::vector<CycloElement> next(acc.size() + d2, CycloElement::zero(RD));
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t k = 0; k < fac.size(); ++k) next[i + k] = next[i + k] + acc[i] * fac[k];
        acc = std::move(next);
        pj = pj * p;
    }
    // coefficients are Galois-invariant, hence in Z_p
    auto R = std::shared_ptr<CycloRing>(new CycloRing());
    R->ctx_ = ModCtx(p, M);
    R->modulus_.resize(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        if (!acc[i].is_padic()) throw ZetapError("composite: modulus coefficient not in Z_p");
        R->modulus_[i] = acc[i].coords().empty() ? Int(0) : acc[i].coords()[0];
    }
    R->modulus_.back() = 1;
    R->root_order_ =
        D * pow_int(p, static_cast<unsigned long>(level)).convert_to<unsigned long>();
    R->level_ = level;
    R->D_ = D;
    R->f_ = f;
    return R;
}

CycloRingPtr CycloRing::with_precision(int M) const {
    if (M == ctx_.M) return shared_from_this();
    if (level_ == 0 && D_ == 1) return zp(ctx_.p, M);
    if (level_ >= 1 && D_ == 1) return ramified(ctx_.p, level_, M);
    if (level_ == 0) return unramified(ctx_.p, D_, M);
    return composite(ctx_.p, D_, level_, M);
}

// ---------------------------------------------------------------------------
// CycloElement

CycloElement::CycloElement(CycloRingPtr R, Poly coords)
    : CycloElement(std::move(R), std::move(coords), 0) {}

CycloElement::CycloElement(CycloRingPtr R, Poly coords, int Mprec)
    : R_(std::move(R)), c_(std::move(coords)), Mprec_(Mprec) {
    if (c_.size() >= R_->modulus().size()) c_ = poly_rem(R_->ctx(), std::move(c_), R_->modulus());
    for (auto& x : c_) x = R_->ctx().reduce(x);
    poly_trim(c_);
    if (Mprec_ == 0) Mprec_ = R_->precision();
}

CycloElement CycloElement::zero(const CycloRingPtr& R) { return CycloElement(R, {}); }
CycloElement CycloElement::one(const CycloRingPtr& R) { return CycloElement(R, {Int(1)}); }

CycloElement CycloElement::from_int(const CycloRingPtr& R, const Int& n) {
    return CycloElement(R, {R->ctx().reduce(n)});
}

CycloElement CycloElement::from_padic(const CycloRingPtr& R, const Padic& x) {
    if (x.is_zero()) return CycloElement(R, {}, static_cast<int>(std::min<long>(x.abs_prec(), R->precision())));
    if (x.valuation() < 0) throw ZetapError("from_padic: negative valuation");
    Int v = x.unit_part() * pow_int(R->prime(), static_cast<unsigned long>(x.valuation()));
    int prec = static_cast<int>(std::min<long>(x.abs_prec(), R->precision()));
    return CycloElement(R, {R->ctx().reduce(v)}, prec);
}

CycloElement CycloElement::root_power(const CycloRingPtr& R, long k) {
    long n = static_cast<long>(R->root_order());
    long e = ((k % n) + n) % n;
    Poly x(static_cast<size_t>(e) + 1, 0);
    x[e] = 1;
    return CycloElement(R, std::move(x));
}

bool CycloElement::is_zero() const {
    Int pm = pow_int(R_->prime(), static_cast<unsigned long>(Mprec_));
    for (const auto& x : c_)
        if (x % pm != 0) return false;
    return true;
}

CycloElement operator+(const CycloElement& a, const CycloElement& b) {
    if (a.R_->modulus() != b.R_->modulus()) throw RingMismatch("CycloElement add: ring mismatch");
    return CycloElement(a.R_, poly_add(a.R_->ctx(), a.c_, b.c_), std::min(a.Mprec_, b.Mprec_));
}

CycloElement operator-(const CycloElement& a, const CycloElement& b) {
    if (a.R_->modulus() != b.R_->modulus()) throw RingMismatch("CycloElement sub: ring mismatch");
    return CycloElement(a.R_, poly_sub(a.R_->ctx(), a.c_, b.c_), std::min(a.Mprec_, b.Mprec_));
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
    if (a.R_->modulus() != b.R_->modulus()) throw RingMismatch("CycloElement mul: ring mismatch");
    Poly prod = poly_mul(a.R_->ctx(), a.c_, b.c_);
    prod = poly_rem(a.R_->ctx(), std::move(prod), a.R_->modulus());
    return CycloElement(a.R_, std::move(prod), std::min(a.Mprec_, b.Mprec_));
}

CycloElement CycloElement::operator-() const {
    return CycloElement(R_, poly_neg(R_->ctx(), c_), Mprec_);
}

CycloElement CycloElement::scaled(const Int& c) const {
    return CycloElement(R_, poly_scale(R_->ctx(), c_, c), Mprec_);
}

bool CycloElement::is_unit() const {
    Poly g = fp_gcd(R_->prime(), c_, R_->modulus());
    return g.size() == 1;
}

CycloElement CycloElement::inverse() const {
    // invert mod p with the Euclidean algorithm, then Newton-lift
    const auto& m = R_->ctx();
    Poly u, v;
    Poly g = fp_ext_gcd(R_->prime(), c_, R_->modulus(), u, v);
    if (g.size() != 1) throw NotAUnit("CycloElement::inverse: not a unit");
    // u * c = 1 mod (p, modulus)
    Poly y = u;
    int k = 1;
    while (k < m.M) {
        // y <- y (2 - c y)
        Poly cy = poly_mulmod(m, c_, y, R_->modulus());
        Poly t = poly_neg(m, cy);
        if (t.empty()) t.assign(1, 0);
        t[0] = m.reduce(t[0] + 2);
        y = poly_mulmod(m, y, t, R_->modulus());
        k *= 2;
    }
    return CycloElement(R_, std::move(y), Mprec_);
}

CycloElement CycloElement::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    CycloElement r = one(R_);
    r = CycloElement(R_, r.coords(), Mprec_);
    CycloElement base = *this;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

CycloElement CycloElement::divide_by_p(int t) const {
    if (t == 0) return *this;
    Int pt = pow_int(R_->prime(), static_cast<unsigned long>(t));
    Poly r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] % pt != 0) throw ZetapError("divide_by_p: coordinate not divisible");
        r[i] = c_[i] / pt;
    }
    return CycloElement(R_, std::move(r), Mprec_ - t);
}

CycloElement CycloElement::times_p(int t) const {
    Int pt = pow_int(R_->prime(), static_cast<unsigned long>(t));
    return scaled(pt);
}

bool CycloElement::is_padic() const {
    Int pm = pow_int(R_->prime(), static_cast<unsigned long>(Mprec_));
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] % pm != 0) return false;
    return true;
}

Padic CycloElement::to_padic() const {
    if (!is_padic()) throw ZetapError("to_padic: element has nontrivial ring coordinates");
    Int c0 = c_.empty() ? Int(0) : c_[0];
    Int pm = pow_int(R_->prime(), static_cast<unsigned long>(Mprec_));
    c0 = mod_reduce(c0, pm);
    if (c0 == 0) return Padic::zero(R_->prime(), Mprec_);
    long v = vp(c0, R_->prime());
    return Padic::from_unit(R_->prime(), v, c0 / pow_int(R_->prime(), static_cast<unsigned long>(v)),
                            Mprec_ - static_cast<int>(v));
}

int CycloElement::content_valuation() const {
    int best = Mprec_;
    for (const auto& x : c_) {
        if (x == 0) continue;
        best = std::min(best, static_cast<int>(vp(x, R_->prime())));
    }
    return best;
}

bool CycloElement::equals_mod(const CycloElement& o, int digits) const {
    CycloElement d = *this - o;
    Int pm = pow_int(R_->prime(), static_cast<unsigned long>(std::min(digits, d.prec())));
    for (const auto& x : d.coords())
        if (x % pm != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

CycloElement galois_apply(const CycloElement& a, const Int& e) {
    const auto& R = a.ring();
    Int n(R->root_order());
    Int er = mod_reduce(e, n);
    if (n > 1) {
        Int g = boost::multiprecision::gcd(er, n);
        if (g != 1) throw BadParameter("galois_apply: exponent not prime to root order");
    }
    // substitute X -> X^e by Horner in X^e
    CycloElement xe = CycloElement::root_power(R, er.convert_to<long>());
    CycloElement acc = CycloElement::zero(R);
    for (long i = static_cast<long>(a.coords().size()) - 1; i >= 0; --i) {
        acc = acc * xe;
        acc = acc + CycloElement::from_int(R, a.coords()[i]);
    }
    return CycloElement(R, acc.coords(), a.prec());
}

namespace {

// exponents of the full Galois orbit: products of Frobenius powers p^j
// (j < f) and tame automorphisms c in (Z/p^level)^*, acting on X
std::vector<Int> galois_exponents(const CycloRingPtr& R) {
    std::vector<Int> frob{1};
    Int pj = 1;
    for (unsigned long j = 1; j < R->residue_degree(); ++j) {
        pj = pj * R->prime();
        frob.push_back(pj % Int(R->root_order()));
    }
    std::vector<Int> tame;
    unsigned long pn = 1;
    if (R->ram_level() >= 1)
        pn = pow_int(R->prime(), static_cast<unsigned long>(R->ram_level())).convert_to<unsigned long>();
    for (unsigned long c = 1; c <= pn; ++c) {
        if (pn == 1) {
            tame.push_back(1);
            break;
        }
        if (std::gcd(c, pn) == 1) tame.push_back(Int(c));
    }
    std::vector<Int> out;
    unsigned long D = R->tame_conductor();
    unsigned long order = R->root_order();
    for (const auto& fr : frob)
        for (const auto& tc : tame) {
            // CRT: exponent = fr on the D-part, tc on the p-part
            if (D == 1) {
                out.push_back(tc);
            } else if (pn == 1) {
                out.push_back(fr);
            } else {
                Int Dp(D), P(pn);
                // e = fr mod D, e = tc mod p^n
                Int e = fr + Dp * mod_reduce((tc - fr) * inv_mod(Dp, P), P);
                out.push_back(mod_reduce(e, Int(order)));
            }
        }
    return out;
}

}  // namespace

Padic ring_norm(const CycloElement& a) {
    auto exps = galois_exponents(a.ring());
    CycloElement acc = CycloElement::one(a.ring());
    acc = CycloElement(a.ring(), acc.coords(), a.prec());
    for (const auto& e : exps) acc = acc * galois_apply(a, e);
    return acc.to_padic();
}

CycloElement ring_teichmuller(const CycloElement& u) {
    if (!u.is_unit()) throw NotAUnit("ring_teichmuller: not a unit");
    Int q = pow_int(u.ring()->prime(), u.ring()->residue_degree());
    CycloElement y = u;
    // iterate y <- y^q; converges to the Teichmuller representative
    int bound = u.ring()->precision() * static_cast<int>(u.ring()->degree()) + 4;
    for (int i = 0; i < bound; ++i) {
        CycloElement y2 = y.pow(q);
        if (y2.coords() == y.coords()) return y2;
        y = y2;
    }
    throw ZetapError("ring_teichmuller: no convergence (corrupt ring?)");
}

CycloElement log_unit(const CycloElement& u) {
    const auto& R = u.ring();
    if (R->ram_level() > 1) throw ZetapError("log_unit: ramification level > 1 unsupported");
    if (!u.is_unit()) throw NotAUnit("log_unit: not a unit");
    CycloElement t = ring_teichmuller(u);
    CycloElement y = u * t.inverse();  // principal-unit part
    CycloElement z = y - CycloElement::one(R);
    // series sum_{j>=1} (-1)^(j+1) z^j / j; v(z) >= 1/(p-1) keeps every term
    // integral for level <= 1, and the p | j divisions cost log_p(jmax) digits
    long e_ram = (R->ram_level() >= 1) ? (R->prime().convert_to<long>() - 1) : 1;
    long M = u.prec();
    long jmax = 1;
    {
        // stop when j/e - log_p(j) >= M (term valuation bound, nondecreasing)
        for (long j = 1;; ++j) {
            long lg = 0;
            Int tt = j;
            while (tt >= R->prime()) {
                tt /= R->prime();
                ++lg;
            }
            if (j / e_ram - lg >= M) {
                jmax = j;
                break;
            }
        }
    }
    int guard = 0;
    {
        Int tt = jmax;
        while (tt >= R->prime()) {
            tt /= R->prime();
            ++guard;
        }
    }
    CycloElement acc = CycloElement::zero(R);
    CycloElement zpow = CycloElement::one(R);
    Int pM = pow_int(R->prime(), static_cast<unsigned long>(R->precision()));
    for (long j = 1; j <= jmax; ++j) {
        zpow = zpow * z;
        long w = vp(Int(j), R->prime());
        Int junit = Int(j) / pow_int(R->prime(), static_cast<unsigned long>(w));
        CycloElement term = zpow;
        if (w > 0) term = term.divide_by_p(static_cast<int>(w));
        term = term.scaled(inv_mod(junit, pM));
        if (j % 2 == 0) term = -term;
        acc = acc + term;
    }
    // honest precision: the p-divisions cost at most `guard` digits
    return CycloElement(R, acc.coords(), std::max(1, static_cast<int>(M) - guard));
}

CycloElement ring_root_of_unity(const CycloRingPtr& R, unsigned long d) {
    if (d == 0) throw BadParameter("ring_root_of_unity: d = 0");
    // split d into p-power part and prime-to-p part
    unsigned long pl = R->prime().convert_to<unsigned long>();
    unsigned long dp = 1, dprime = d;
    while (dprime % pl == 0) {
        dprime /= pl;
        dp *= pl;
    }
    unsigned long order = R->root_order();
    CycloElement rootp = CycloElement::one(R);
    if (dp > 1) {
        // p-power part from X
        unsigned long pn = pow_int(R->prime(), static_cast<unsigned long>(R->ram_level()))
                               .convert_to<unsigned long>();
        if (R->ram_level() == 0 || pn % dp != 0)
            throw RingTooSmall("ring_root_of_unity: missing p-power roots");
        // zeta_{p^level} = X^alpha with alpha = (0 mod D, 1 mod p^n) via CRT
        unsigned long D = R->tame_conductor();
        Int alpha;
        if (D == 1)
            alpha = 1;
        else
            alpha = Int(D) * mod_reduce(inv_mod(Int(D), Int(pn)), Int(pn));
        CycloElement zeta_pn = CycloElement::root_power(R, mod_reduce(alpha, Int(order)).convert_to<long>());
        rootp = zeta_pn.pow(Int(pn / dp));
    }
    CycloElement roott = CycloElement::one(R);
    if (dprime > 1) {
        if ((R->prime() - 1) % Int(dprime) == 0) {
            // Teichmuller root from Z_p (canonical: matches value_zp)
            Padic r = root_of_unity_zp(R->prime(), dprime, R->precision());
            roott = CycloElement::from_padic(R, r);
        } else {
            unsigned long D = R->tame_conductor();
            if (D % dprime != 0) throw RingTooSmall("ring_root_of_unity: missing tame roots");
            // zeta_D = X^beta with beta = (1 mod D, 0 mod p^n)
            unsigned long pn = pow_int(R->prime(), static_cast<unsigned long>(R->ram_level()))
                                   .convert_to<unsigned long>();
            Int beta;
            if (pn == 1)
                beta = 1;
            else
                beta = Int(pn) * mod_reduce(inv_mod(Int(pn), Int(D)), Int(D));
            CycloElement zD = CycloElement::root_power(R, mod_reduce(beta, Int(order)).convert_to<long>());
            roott = zD.pow(Int(D / dprime));
        }
    }
    return rootp * roott;
}

std::vector<CycloElement> realize_character(const DirichletCharacter& chi, const CycloRingPtr& R) {
    CycloElement root = ring_root_of_unity(R, chi.order());
    std::vector<CycloElement> vals(chi.modulus(), CycloElement::zero(R));
    std::vector<CycloElement> root_pows(chi.order(), CycloElement::one(R));
    for (unsigned long e = 1; e < chi.order(); ++e) root_pows[e] = root_pows[e - 1] * root;
    for (unsigned long a = 0; a < chi.modulus(); ++a) {
        long e = chi.exponent_at(Int(a));
        if (e >= 0) vals[a] = root_pows[static_cast<unsigned long>(e)];
    }
    return vals;
}

CycloElement gauss_sum(const DirichletCharacter& chi, const CycloRingPtr& R) {
    if (chi.is_trivial()) return CycloElement::one(R);
    unsigned long N = chi.modulus();
    CycloElement eps = ring_root_of_unity(R, N);
    auto vals = realize_character(chi, R);
    CycloElement acc = CycloElement::zero(R);
    for (unsigned long c = 1; c < N; ++c) {
        if (std::gcd(c, N) != 1) continue;
        acc = acc + vals[c] * eps.pow(Int(c));
    }
    return acc;
}

}  // namespace zetap
