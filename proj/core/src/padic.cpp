#include <zetap/padic.hpp>

#include <algorithm>
#include <sstream>

namespace zetap {

long vp(Int n, const Int& p) {
    if (n == 0) throw ZetapError("vp(0) undefined");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

long vp(const Rat& q, const Int& p) {
    if (q == 0) throw ZetapError("vp(0) undefined");
    return vp(rat_num(q), p) - vp(rat_den(q), p);
}

Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Int pow_mod(Int base, Int e, const Int& mod) {
    Int r = 1;
    base = mod_reduce(base, mod);
    while (e > 0) {
        if ((e & 1) != 0) r = r * base % mod;
        base = base * base % mod;
        e >>= 1;
    }
    return r;
}

Int inv_mod(const Int& a, const Int& mod) {
    // extended Euclid
    Int r0 = mod, r1 = mod_reduce(a, mod);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw ZetapError("inv_mod: not invertible");
    return mod_reduce(t0, mod);
}

Int binomial_exact(const Int& n, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) {
        r *= (n - Int(i));
        r /= Int(i + 1);  // exact at every step
    }
    return r;
}

unsigned long mult_order(const Int& a, const Int& n) {
    Int x = mod_reduce(a, n);
    if (x == 0) throw ZetapError("mult_order: not a unit");
    Int y = x;
    unsigned long ord = 1;
    while (y != 1) {
        y = y * x % n;
        ++ord;
        if (Int(ord) > n) throw ZetapError("mult_order: not a unit");
    }
    return ord;
}

bool is_prime_small(const Int& n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << rat_num(q);
    if (rat_den(q) != 1) os << "/" << rat_den(q);
    return os.str();
}

// ---------------------------------------------------------------------------
// Padic

void Padic::normalize() {
    if (zero_) {
        u_ = 0;
        M_ = 0;
        return;
    }
    Int pM = pow_int(p_, static_cast<unsigned long>(M_));
    u_ = mod_reduce(u_, pM);
    if (u_ == 0) {
        zero_ = true;
        v_ = v_ + M_;
        M_ = 0;
        return;
    }
    long w = vp(u_, p_);
    if (w > 0) {
        // absorb stray p-divisibility into the valuation
        u_ /= pow_int(p_, static_cast<unsigned long>(w));
        v_ += w;
        M_ -= static_cast<int>(w);
        if (M_ <= 0) {
            zero_ = true;
            v_ += M_;
            u_ = 0;
            M_ = 0;
            return;
        }
        u_ = mod_reduce(u_, pow_int(p_, static_cast<unsigned long>(M_)));
    }
}

Padic Padic::zero(const Int& p, long abs_prec) {
    Padic x;
    x.p_ = p;
    x.zero_ = true;
    x.v_ = abs_prec;
    return x;
}

Padic Padic::from_unit(const Int& p, long v, Int u, int M) {
    if (M <= 0) return zero(p, v);
    Padic x;
    x.p_ = p;
    x.v_ = v;
    x.u_ = std::move(u);
    x.M_ = M;
    x.zero_ = false;
    x.normalize();
    return x;
}

Padic Padic::from_int(const Int& n, const Int& p, int M) {
    if (n == 0) return zero(p, M);
    long v = vp(n, p);
    Int u = n / pow_int(p, static_cast<unsigned long>(v));
    return from_unit(p, v, std::move(u), M);
}

long Padic::valuation() const {
    if (zero_) throw ZetapError("valuation of (approximate) zero");
    return v_;
}

Padic Padic::operator-() const {
    if (zero_) return *this;
    Padic r = *this;
    r.u_ = pow_int(p_, static_cast<unsigned long>(M_)) - u_;
    return r;
}

Padic operator+(const Padic& a, const Padic& b) {
    if (a.p_ != b.p_) throw ZetapError("prime mismatch");
    if (a.zero_ && b.zero_) return Padic::zero(a.p_, std::min(a.v_, b.v_));
    if (a.zero_) {
        long A = std::min(a.v_, b.abs_prec());
        if (A <= (b.zero_ ? A : b.v_)) return Padic::zero(a.p_, A);
        return Padic::from_unit(b.p_, b.v_, b.u_, static_cast<int>(A - b.v_));
    }
    if (b.zero_) return b + a;
    long A = std::min(a.abs_prec(), b.abs_prec());
    long vm = std::min(a.v_, b.v_);
    if (A <= vm) return Padic::zero(a.p_, A);
    int digits = static_cast<int>(A - vm);
    Int mod = pow_int(a.p_, static_cast<unsigned long>(digits));
    Int s = a.u_ * pow_int(a.p_, static_cast<unsigned long>(a.v_ - vm)) +
            b.u_ * pow_int(a.p_, static_cast<unsigned long>(b.v_ - vm));
    s = mod_reduce(s, mod);
    if (s == 0) return Padic::zero(a.p_, A);
    return Padic::from_unit(a.p_, vm, std::move(s), digits);
}

Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

Padic operator*(const Padic& a, const Padic& b) {
    if (a.p_ != b.p_) throw ZetapError("prime mismatch");
    if (a.zero_ || b.zero_) {
        // v_p(xy) >= v(x)+v(y); an O(p^A) factor times a bounded value
        long va = a.zero_ ? a.v_ : a.v_;
        long vb = b.zero_ ? b.v_ : b.v_;
        return Padic::zero(a.p_, va + vb);
    }
    int M = std::min(a.M_, b.M_);
    Int mod = pow_int(a.p_, static_cast<unsigned long>(M));
    return Padic::from_unit(a.p_, a.v_ + b.v_, a.u_ * b.u_ % mod, M);
}

Padic Padic::inverse() const {
    if (zero_) throw NotAUnit("inverse of (approximate) zero");
    Int mod = pow_int(p_, static_cast<unsigned long>(M_));
    return Padic::from_unit(p_, -v_, inv_mod(u_, mod), M_);
}

Padic operator/(const Padic& a, const Padic& b) { return a * b.inverse(); }

Padic Padic::pow(long e) const {
    if (zero_) {
        if (e <= 0) throw NotAUnit("pow of zero with non-positive exponent");
        return Padic::zero(p_, v_ * e);
    }
    if (e == 0) return Padic::from_unit(p_, 0, 1, M_);
    Padic base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Int mod = pow_int(p_, static_cast<unsigned long>(M_));
    Int u = pow_mod(base.u_, Int(k), mod);
    return Padic::from_unit(p_, base.v_ * static_cast<long>(k), std::move(u), M_);
}

Padic Padic::capped(int M) const {
    if (zero_) return *this;
    if (M >= M_) return *this;
    return Padic::from_unit(p_, v_, u_, M);
}

bool Padic::agree_abs(const Padic& a, const Padic& b, long k) {
    return (a - b).v_ >= k;
}

long Padic::agree_digits(const Padic& a, const Padic& b) {
    long vd = (a - b).v_;
    if (a.is_zero() && b.is_zero()) return std::min(a.v_, b.v_);
    long vmin = a.is_zero() ? b.v_ : (b.is_zero() ? a.v_ : std::min(a.v_, b.v_));
    return vd - vmin;
}

std::string Padic::to_string() const {
    std::ostringstream os;
    if (zero_) {
        os << "O(" << p_ << "^" << v_ << ")";
        return os.str();
    }
    os << u_ << "*" << p_ << "^" << v_ << " + O(" << p_ << "^" << (v_ + M_) << ")";
    return os.str();
}

std::string Padic::digit_string() const {
    if (zero_) return "";
    std::string s;
    bool small = p_ < 10;
    Int u = u_;
    for (int i = 0; i < M_; ++i) {
        Int d = u % p_;
        u /= p_;
        if (!small && i > 0) s += '.';
        s += d.convert_to<std::string>();
    }
    return s;
}

// ---------------------------------------------------------------------------

Padic embed_rational(const Rat& q, const Int& p, int M) {
    if (q == 0) return Padic::zero(p, M);
    Int num = rat_num(q), den = rat_den(q);
    long vn = (num == 0) ? 0 : vp(num, p);
    long vd = vp(den, p);
    num /= pow_int(p, static_cast<unsigned long>(vn));
    den /= pow_int(p, static_cast<unsigned long>(vd));
    Int mod = pow_int(p, static_cast<unsigned long>(M));
    Int u = mod_reduce(num, mod) * inv_mod(den, mod) % mod;
    return Padic::from_unit(p, vn - vd, std::move(u), M);
}

Padic teichmuller(const Padic& x) {
    if (x.is_zero() || x.valuation() != 0) throw NotAUnit("teichmuller: not a unit");
    int M = x.rel_prec();
    Int mod = pow_int(x.prime(), static_cast<unsigned long>(M));
    Int y = x.unit_part();
    for (int i = 0; i < 2 * M + 2; ++i) {
        Int y2 = pow_mod(y, x.prime(), mod);
        if (y2 == y) break;
        y = y2;
    }
    return Padic::from_unit(x.prime(), 0, std::move(y), M);
}

Padic angle(const Padic& x) { return x / teichmuller(x); }

namespace {

// Smallest cutoff so the omitted log tail is 0 mod p^A, for v(x-1) = c >= 1.
// Term n has valuation >= nc - floor(log_p n), and that bound is nondecreasing
// in n (c >= 1, and the floor grows by at most 1 per step of n).
long log_cutoff(const Int& p, long c, long A) {
    for (long n = 1;; ++n) {
        long lg = 0;
        Int t = n;
        while (t >= p) {
            t /= p;
            ++lg;
        }
        if (n * c - lg >= A) return n;
    }
}

}  // namespace

Padic padic_log(const Padic& x) {
    const Int& p = x.prime();
    if (x.is_zero() || x.valuation() != 0) throw NotPrincipalUnit("padic_log: not a unit");
    Padic y0 = x - Padic::from_int(1, p, static_cast<int>(x.abs_prec()));
    if (y0.is_zero()) {
        // x == 1 to working precision
        return Padic::zero(p, x.abs_prec());
    }
    long c = y0.valuation();
    if (c < 1) throw NotPrincipalUnit("padic_log: x != 1 mod p");
    long A = x.abs_prec();
    long nmax = log_cutoff(p, c, A);
    // guard digits for the divisions by n
    long g = 1;
    {
        Int t = nmax;
        while (t >= p) {
            t /= p;
            ++g;
        }
    }
    Int P = pow_int(p, static_cast<unsigned long>(A + g));
    Int y = y0.lift_unit() * pow_int(p, static_cast<unsigned long>(c)) % P;
    Int acc = 0;
    Int ypow = 1;
    for (long n = 1; n <= nmax; ++n) {
        ypow = ypow * y % P;
        long w = vp(Int(n), p);
        Int m = Int(n) / pow_int(p, static_cast<unsigned long>(w));
        // ypow is divisible by p^(nc) >= p^w as an exact power; its residue
        // mod P keeps that divisibility
        Int term = ypow / pow_int(p, static_cast<unsigned long>(w));
        term = term * inv_mod(m, P) % P;
        if (n % 2 == 0) term = P - term;
        acc = (acc + term) % P;
    }
    if (acc == 0) return Padic::zero(p, A);
    long v = vp(acc, p);
    if (v >= A) return Padic::zero(p, A);
    return Padic::from_unit(p, v, acc / pow_int(p, static_cast<unsigned long>(v)),
                            static_cast<int>(A - v));
}

Padic padic_exp(const Padic& x) {
    const Int& p = x.prime();
    if (x.is_zero()) {
        long A = x.abs_prec();
        return Padic::from_int(1, p, static_cast<int>(A));
    }
    long c = x.valuation();
    if (c < 1) throw OutsideConvergenceDisk("padic_exp: v(x) < 1");
    long A = x.abs_prec();
    long pl = p.convert_to<long>();
    // cutoff: n(c - 1/(p-1)) grows; stop once n*c - (n-1)/(p-1) >= A
    long nmax = 1;
    while (nmax * c - (nmax - 1) / (pl - 1) < A) ++nmax;
    // guard for division by n!
    long g = (nmax) / (pl - 1) + 1;
    Int P = pow_int(p, static_cast<unsigned long>(A + g));
    Int xv = x.lift_unit() * pow_int(p, static_cast<unsigned long>(c)) % P;
    Int acc = 1, xpow = 1;
    Int fact_unit = 1;  // prime-to-p part of n!
    long fact_v = 0;    // v_p(n!)
    for (long n = 1; n <= nmax; ++n) {
        xpow = xpow * xv % P;
        long w = vp(Int(n), p);
        fact_v += w;
        fact_unit = fact_unit * (Int(n) / pow_int(p, static_cast<unsigned long>(w))) % P;
        Int term = xpow / pow_int(p, static_cast<unsigned long>(fact_v));
        term = term * inv_mod(fact_unit, P) % P;
        acc = (acc + term) % P;
    }
    Int modA = pow_int(p, static_cast<unsigned long>(A));
    acc = mod_reduce(acc, modA);
    return Padic::from_unit(p, 0, std::move(acc), static_cast<int>(A));
}

Padic padic_power(const Padic& x, const Padic& s) {
    if (!s.is_zero() && s.valuation() < 0) throw ZetapError("padic_power: s not integral");
    Padic lx = padic_log(x);
    return padic_exp(s * lx);
}

Padic padic_binomial(const Padic& x, long k) {
    const Int& p = x.prime();
    int M = static_cast<int>(x.abs_prec());
    Padic num = Padic::from_int(1, p, M);
    for (long i = 0; i < k; ++i) num = num * (x - Padic::from_int(Int(i), p, M));
    Rat fact(1);
    for (long i = 2; i <= k; ++i) fact *= Rat(i);
    return num / embed_rational(fact, p, M);
}

}  // namespace zetap
