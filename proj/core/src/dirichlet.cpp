#include <zetap/dirichlet.hpp>

#include <numeric>

namespace zetap {

namespace {

unsigned long gcd_ul(unsigned long a, unsigned long b) {
    while (b) {
        unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / gcd_ul(a, b) * b; }

}  // namespace

long smallest_primitive_root(const Int& p) {
    unsigned long pm1 = (p - 1).convert_to<unsigned long>();
    for (long g = 2;; ++g) {
        if (mult_order(Int(g), p) == pm1) return g;
    }
}

void DirichletCharacter::reduce_order() {
    // shrink the declared order to the exact order of the value group
    unsigned long g = order_;
    for (long e : exps_)
        if (e > 0) g = gcd_ul(g, static_cast<unsigned long>(e));
    if (g <= 1 || g == order_) {
        bool all_zero = true;
        for (long e : exps_)
            if (e > 0) all_zero = false;
        if (all_zero) {
            order_ = 1;
            for (auto& e : exps_)
                if (e > 0) e = 0;
        }
        return;
    }
    order_ /= g;
    for (auto& e : exps_)
        if (e > 0) e /= static_cast<long>(g);
}

void DirichletCharacter::compute_conductor() {
    conductor_ = modulus_;
    for (unsigned long f = 1; f <= modulus_; ++f) {
        if (modulus_ % f != 0) continue;
        bool ok = true;
        for (unsigned long a = 1; a < modulus_ && ok; ++a) {
            if (std::gcd(a, modulus_) != 1) continue;
            if (a % f == 1 % f && exps_[a] != 0) ok = false;
        }
        if (ok) {
            conductor_ = f;
            return;
        }
    }
}

DirichletCharacter DirichletCharacter::trivial() {
    DirichletCharacter chi;
    chi.modulus_ = 1;
    chi.order_ = 1;
    chi.conductor_ = 1;
    chi.exps_ = {0};
    return chi;
}

DirichletCharacter DirichletCharacter::from_exponents(unsigned long modulus, unsigned long order,
                                                      std::vector<long> exps) {
    DirichletCharacter chi;
    chi.modulus_ = modulus;
    chi.order_ = order;
    chi.exps_ = std::move(exps);
    if (chi.exps_.size() != modulus) throw BadParameter("from_exponents: table size != modulus");
    chi.reduce_order();
    chi.compute_conductor();
    return chi;
}

DirichletCharacter DirichletCharacter::teichmuller_power(const Int& p, long i) {
    unsigned long pl = p.convert_to<unsigned long>();
    unsigned long pm1 = pl - 1;
    long ii = ((i % static_cast<long>(pm1)) + static_cast<long>(pm1)) % static_cast<long>(pm1);
    if (ii == 0) return trivial();
    unsigned long G = gcd_ul(static_cast<unsigned long>(ii), pm1);
    unsigned long d = pm1 / G;
    long g = smallest_primitive_root(p);
    std::vector<long> exps(pl, -1);
    Int x = 1;
    for (unsigned long t = 0; t < pm1; ++t) {
        // x = g^t mod p
        unsigned long e = (static_cast<unsigned long>(ii) / G * t) % d;
        exps[x.convert_to<unsigned long>()] = static_cast<long>(e);
        x = x * g % p;
    }
    return from_exponents(pl, d, std::move(exps));
}

DirichletCharacter DirichletCharacter::quadratic(unsigned long D) {
    if (D == 4) {
        // the odd character mod 4
        return from_exponents(4, 2, {-1, 0, -1, 1});
    }
    if (!is_prime_small(Int(D)) || D == 2) throw BadParameter("quadratic: D must be 4 or an odd prime");
    std::vector<long> exps(D, -1);
    for (unsigned long a = 1; a < D; ++a) {
        Int ls = pow_mod(Int(a), Int((D - 1) / 2), Int(D));
        exps[a] = (ls == 1) ? 0 : 1;
    }
    return from_exponents(D, 2, std::move(exps));
}

DirichletCharacter DirichletCharacter::times(const DirichletCharacter& o) const {
    // pointwise product on units mod lcm of the moduli
    unsigned long N = lcm_ul(modulus_, o.modulus_);
    unsigned long L = lcm_ul(order_, o.order_);
    std::vector<long> exps(N, -1);
    for (unsigned long a = 0; a < N; ++a) {
        long e1 = exps_[a % modulus_];
        long e2 = o.exps_[a % o.modulus_];
        if (e1 < 0 || e2 < 0) continue;
        unsigned long e = (static_cast<unsigned long>(e1) * (L / order_) +
                           static_cast<unsigned long>(e2) * (L / o.order_)) %
                          L;
        exps[a] = static_cast<long>(e);
    }
    return from_exponents(N, L, std::move(exps));
}

DirichletCharacter DirichletCharacter::power(long k) const {
    long d = static_cast<long>(order_);
    long kk = ((k % d) + d) % d;
    std::vector<long> exps(modulus_, -1);
    for (unsigned long a = 0; a < modulus_; ++a)
        if (exps_[a] >= 0) exps[a] = static_cast<long>((exps_[a] * kk) % d);
    return from_exponents(modulus_, order_, std::move(exps));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
    if (is_primitive()) return *this;
    unsigned long f = conductor_;
    std::vector<long> exps(f, -1);
    for (unsigned long b = 0; b < f; ++b) {
        if (std::gcd(b, f) != 1 && f > 1) continue;
        // find a lift of b mod f coprime to modulus
        for (unsigned long a = b;; a += f) {
            unsigned long ar = a % modulus_;
            if (std::gcd(ar == 0 ? modulus_ : ar, modulus_) == 1) {
                exps[b] = exps_[ar];
                break;
            }
            if (a > b + 4 * modulus_) throw ZetapError("primitive_part: no coprime lift");
        }
    }
    return from_exponents(f, order_, std::move(exps));
}

int DirichletCharacter::parity() const {
    if (modulus_ <= 2) return 1;
    long e = exps_[modulus_ - 1];
    if (e == 0) return 1;
    if (static_cast<unsigned long>(2 * e) == order_) return -1;
    throw ZetapError("parity: chi(-1) not +-1 (corrupt table)");
}

long DirichletCharacter::exponent_at(const Int& a) const {
    Int r = mod_reduce(a, Int(modulus_));
    return exps_[r.convert_to<unsigned long>()];
}

CycloRat DirichletCharacter::value_exact(const Int& a, const CycloRatFieldPtr& F) const {
    if (F->order() != order_) throw RingMismatch("value_exact: field order != character order");
    long e = exponent_at(a);
    if (e < 0) return CycloRat::from_rat(F, Rat(0));
    return CycloRat::root_power(F, e);
}

Padic root_of_unity_zp(const Int& p, unsigned long d, int M) {
    if (d == 0 || (p - 1) % Int(d) != 0)
        throw RingTooSmall("root_of_unity_zp: d does not divide p-1");
    long g = smallest_primitive_root(p);
    Padic t = teichmuller(Padic::from_int(Int(g), p, M));
    return t.pow(static_cast<long>((p - 1).convert_to<unsigned long>() / d));
}

Padic embed_cyclorat_zp(const CycloRat& x, const Int& p, int M) {
    unsigned long d = x.field()->order();
    Padic root = root_of_unity_zp(p, d, M);
    Padic acc = Padic::zero(p, M);
    Padic rp = Padic::from_int(1, p, M);
    for (unsigned long i = 0; i < x.coords().size(); ++i) {
        if (x.coords()[i] != 0) acc = acc + embed_rational(x.coords()[i], p, M) * rp;
        rp = rp * root;
    }
    return acc;
}

Padic DirichletCharacter::value_zp(const Int& a, const Int& p, int M) const {
    long e = exponent_at(a);
    if (e < 0) return Padic::zero(p, M);
    if (order_ == 1) return Padic::from_int(1, p, M);
    Padic root = root_of_unity_zp(p, order_, M);
    return root.pow(e);
}

}  // namespace zetap
