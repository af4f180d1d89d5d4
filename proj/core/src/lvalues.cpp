#include <zetap/lvalues.hpp>
#include <zetap/padic.hpp>

#include <map>
#include <mutex>
#include <shared_mutex>

namespace zetap {

// ---------------------------------------------------------------------------
// cyclotomic polynomials and Q(zeta_d)

std::vector<Int> cyclotomic_polynomial(unsigned long d) {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e, by exact division
    std::vector<Int> num(d + 1, 0);
    num[0] = -1;
    num[d] = 1;
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        std::vector<Int> phi_e = cyclotomic_polynomial(e);
        // divide num by phi_e exactly (both monic up to sign handling)
        std::vector<Int> q(num.size() - phi_e.size() + 1, 0);
        std::vector<Int> r = num;
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            Int c = r[i + phi_e.size() - 1];  // leading coeff of phi_e is 1
            q[i] = c;
            if (c != 0)
                for (unsigned long j = 0; j < phi_e.size(); ++j) r[i + j] -= c * phi_e[j];
        }
        num = q;
    }
    return num;
}

CycloRatField::CycloRatField(unsigned long d) : d_(d), phi_(cyclotomic_polynomial(d)) {}

CycloRatFieldPtr CycloRatField::make(unsigned long d) {
    return CycloRatFieldPtr(new CycloRatField(d));
}

CycloRat::CycloRat(CycloRatFieldPtr F, std::vector<Rat> coords)
    : F_(std::move(F)), coords_(std::move(coords)) {
    coords_.resize(F_->degree(), Rat(0));
}

CycloRat CycloRat::from_rat(const CycloRatFieldPtr& F, const Rat& q) {
    std::vector<Rat> c(F->degree(), Rat(0));
    c[0] = q;
    return CycloRat(F, std::move(c));
}

CycloRat CycloRat::root_power(const CycloRatFieldPtr& F, long k) {
    long d = static_cast<long>(F->order());
    long e = ((k % d) + d) % d;
    std::vector<Rat> c(F->degree(), Rat(0));
    if (static_cast<unsigned long>(e) < F->degree()) {
        c[e] = 1;
        return CycloRat(F, std::move(c));
    }
    // reduce x^e mod Phi_d
    std::vector<Rat> poly(e + 1, Rat(0));
    poly[e] = 1;
    const auto& phi = F->modulus();
    for (long i = e; i >= static_cast<long>(F->degree()); --i) {
        Rat lead = poly[i];
        if (lead == 0) continue;
        poly[i] = 0;
        for (unsigned long j = 0; j < phi.size() - 1; ++j)
            poly[i - (phi.size() - 1) + j] -= lead * Rat(phi[j]);
    }
    poly.resize(F->degree());
    return CycloRat(F, std::move(poly));
}

bool CycloRat::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CycloRat::is_rational() const {
    for (unsigned long i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat CycloRat::rational_part() const {
    if (!is_rational()) throw ZetapError("CycloRat: not rational");
    return coords_.empty() ? Rat(0) : coords_[0];
}

CycloRat operator+(const CycloRat& a, const CycloRat& b) {
    if (a.F_->order() != b.F_->order()) throw RingMismatch("CycloRat order mismatch");
    std::vector<Rat> c = a.coords_;
    for (unsigned long i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return CycloRat(a.F_, std::move(c));
}

CycloRat operator-(const CycloRat& a, const CycloRat& b) {
    if (a.F_->order() != b.F_->order()) throw RingMismatch("CycloRat order mismatch");
    std::vector<Rat> c = a.coords_;
    for (unsigned long i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
    return CycloRat(a.F_, std::move(c));
}

CycloRat operator*(const CycloRat& a, const CycloRat& b) {
    if (a.F_->order() != b.F_->order()) throw RingMismatch("CycloRat order mismatch");
    unsigned long n = a.coords_.size();
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (unsigned long i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (unsigned long j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    const auto& phi = a.F_->modulus();
    for (long i = static_cast<long>(prod.size()) - 1; i >= static_cast<long>(n); --i) {
        Rat lead = prod[i];
        if (lead == 0) continue;
        prod[i] = 0;
        for (unsigned long j = 0; j + 1 < phi.size(); ++j)
            prod[i - (phi.size() - 1) + j] -= lead * Rat(phi[j]);
    }
    prod.resize(n);
    return CycloRat(a.F_, std::move(prod));
}

CycloRat CycloRat::scaled(const Rat& q) const {
    std::vector<Rat> c = coords_;
    for (auto& x : c) x *= q;
    return CycloRat(F_, std::move(c));
}

bool CycloRat::operator==(const CycloRat& o) const {
    return F_->order() == o.F_->order() && coords_ == o.coords_;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

namespace {
std::vector<Rat> g_bernoulli{Rat(1)};
std::shared_mutex g_bernoulli_mutex;
}  // namespace

const Rat& bernoulli(unsigned long n) {
    {
        std::shared_lock lk(g_bernoulli_mutex);
        if (n < g_bernoulli.size()) return g_bernoulli[n];
    }
    std::unique_lock lk(g_bernoulli_mutex);
    while (g_bernoulli.size() <= n) {
        unsigned long m = g_bernoulli.size();
        // sum_{j<=m} C(m+1, j) B_j = 0
        Rat s(0);
        for (unsigned long j = 0; j < m; ++j)
            s += Rat(binomial_exact(Int(m + 1), j)) * g_bernoulli[j];
        g_bernoulli.push_back(-s / Rat(m + 1));
    }
    return g_bernoulli[n];
}

Rat zeta_neg(unsigned long n) {
    // zeta(-n) = (-1)^n B_{n+1}/(n+1); for odd n this is -B_{n+1}/(n+1),
    // for n = 0 it gives B_1 = -1/2, and for even n >= 2 it vanishes
    Rat b = bernoulli(n + 1);
    Rat v = b / Rat(n + 1);
    return (n % 2 == 0) ? v : -v;
}

Rat bernoulli_poly_at(unsigned long k, const Rat& x) {
    // B_k(x) = sum_j C(k, j) B_j x^(k-j)
    Rat acc(0);
    Rat xpow(1);
    // iterate j from k down so x powers build up
    for (long j = static_cast<long>(k); j >= 0; --j) {
        acc += Rat(binomial_exact(Int(k), static_cast<unsigned long>(j))) *
               bernoulli(static_cast<unsigned long>(j)) * xpow;
        xpow *= x;
    }
    return acc;
}

CycloRat generalized_bernoulli(const DirichletCharacter& chi, unsigned long k) {
    if (k == 0) throw ZetapError("generalized_bernoulli: k >= 1 required");
    unsigned long f = chi.modulus();
    auto F = CycloRatField::make(chi.order());
    CycloRat acc = CycloRat::from_rat(F, Rat(0));
    for (unsigned long a = 1; a <= f; ++a) {
        long e = chi.exponent_at(Int(a));
        if (e < 0) continue;
        acc = acc + CycloRat::root_power(F, e).scaled(bernoulli_poly_at(k, Rat(a) / Rat(f)));
    }
    return acc.scaled(Rat(pow_int(Int(f), k - 1)));
}

CycloRat dirichlet_L_neg(const DirichletCharacter& chi, unsigned long k) {
    if (k == 0) throw ZetapError("dirichlet_L_neg: k >= 1 required");
    CycloRat b = generalized_bernoulli(chi, k);
    return b.scaled(Rat(-1) / Rat(k));
}

Rat dirichlet_L_neg_rat(const DirichletCharacter& chi, unsigned long k) {
    if (chi.order() > 2) throw ZetapError("dirichlet_L_neg_rat: character not rational-valued");
    return dirichlet_L_neg(chi, k).rational_part();
}

bool von_staudt_clausen_check(unsigned long two_k) {
    if (two_k == 0 || two_k % 2 != 0) throw ZetapError("von_staudt_clausen_check: need even n >= 2");
    Int expected = 1;
    for (Int q = 2; q <= Int(two_k) + 1; ++q) {
        if (!is_prime_small(q)) continue;
        if (Int(two_k) % (q - 1) == 0) expected *= q;
    }
    return rat_den(bernoulli(two_k)) == expected;
}

long kummer_congruence_valuation(const Int& p, unsigned long k, unsigned long l) {
    Rat a = (Rat(1) - Rat(pow_int(p, k - 1))) * zeta_neg(k - 1);
    Rat b = (Rat(1) - Rat(pow_int(p, l - 1))) * zeta_neg(l - 1);
    Rat d = a - b;
    if (d == 0) return 1 << 20;
    return vp(d, p);
}

}  // namespace zetap
