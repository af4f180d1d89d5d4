#include <zetap/measure.hpp>

#include <map>
#include <mutex>
#include <numeric>

namespace zetap {

namespace {

// ---------------------------------------------------------------------------
// basis conversion kernels, on raw coordinate vectors

void coords_axpy(Poly& y, const Int& a, const Poly& x, const Int& pM) {
    if (a == 0 || x.empty()) return;
    if (y.size() < x.size()) y.resize(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) y[i] = (y[i] + a * x[i]) % pM;
}

// cached Pascal triangle mod p^M: binom[m][j] for j <= m < rows
struct BinomTable {
    std::vector<std::vector<Int>> rows;
};

const BinomTable& binom_table(const Int& pM, long rows) {
    static std::map<std::pair<Int, long>, BinomTable> cache;
    static std::mutex mu;
    std::lock_guard lk(mu);
    auto key = std::make_pair(pM, rows);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    BinomTable t;
    t.rows.resize(rows);
    for (long m = 0; m < rows; ++m) {
        t.rows[m].assign(m + 1, 0);
        t.rows[m][0] = 1;
        t.rows[m][m] = 1;
        for (long j = 1; j < m; ++j) {
            Int s = t.rows[m - 1][j - 1] + t.rows[m - 1][j];
            t.rows[m][j] = s >= pM ? s - pM : s;
        }
    }
    return cache.emplace(key, std::move(t)).first->second;
}

// T-coeffs -> U-coeffs: A = sum_k a_k (U-1)^k, so u_m = sum_k a_k C(k,m)(-1)^(k-m)
std::vector<Poly> t_to_u_raw(const std::vector<Poly>& a, const Int& pM) {
    long N = static_cast<long>(a.size());
    const BinomTable& B = binom_table(pM, N);
    std::vector<Poly> u(N);
    for (long k = 0; k < N; ++k) {
        if (a[k].empty()) continue;
        for (long m = 0; m <= k; ++m) {
            Int c = B.rows[k][m];
            if ((k - m) % 2 != 0) c = pM - c;
            coords_axpy(u[m], c % pM, a[k], pM);
        }
    }
    return u;
}

// U-coeffs (degree may exceed N) -> T-coeffs, keeping degrees < Nout:
// t_j = sum_m u_m C(m, j). Rows beyond the cached triangle are streamed.
std::vector<Poly> u_to_t_raw(const std::vector<Poly>& u, const Int& pM, long Nout) {
    long Min = static_cast<long>(u.size());
    long cached = std::min(Min, Nout);
    const BinomTable& B = binom_table(pM, std::max<long>(cached, 1));
    std::vector<Poly> t(Nout);
    long m = 0;
    for (; m < cached; ++m) {
        if (u[m].empty()) continue;
        for (long j = 0; j <= m && j < Nout; ++j) coords_axpy(t[j], B.rows[m][j], u[m], pM);
    }
    if (m < Min) {
        // stream Pascal rows from row `cached-1` upward, truncated to Nout cols
        std::vector<Int> row(Nout, 0);
        long start = std::max<long>(cached - 1, 0);
        for (long j = 0; j <= start && j < Nout; ++j) row[j] = B.rows[start][j];
        if (cached == 0) row[0] = 1;
        for (long mm = start + 1; mm < Min; ++mm) {
            for (long j = Nout - 1; j >= 1; --j) {
                Int s = row[j] + row[j - 1];
                row[j] = s >= pM ? s - pM : s;
            }
            // row[0] stays 1
            if (mm >= cached && mm < Min && !u[mm].empty())
                for (long j = 0; j < Nout; ++j) coords_axpy(t[j], row[j], u[mm], pM);
        }
    }
    return t;
}

std::vector<Poly> strip(const std::vector<CycloElement>& v) {
    std::vector<Poly> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i].coords();
    return r;
}

std::vector<CycloElement> dress(const CycloRingPtr& R, std::vector<Poly> v, int Mprec) {
    std::vector<CycloElement> r;
    r.reserve(v.size());
    for (auto& c : v) r.emplace_back(R, std::move(c), Mprec);
    return r;
}

int min_prec(const std::vector<CycloElement>& v, int fallback) {
    int m = fallback;
    for (const auto& c : v) m = std::min(m, c.prec());
    return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// Measure

Measure::Measure(CycloRingPtr R, long N) : R_(std::move(R)), N_(N), Mprec_(R_->precision()) {
    t_.assign(N, CycloElement::zero(R_));
    u_.assign(N, CycloElement::zero(R_));
}

Measure Measure::from_t_coeffs(CycloRingPtr R, std::vector<CycloElement> t) {
    Measure mu;
    mu.R_ = std::move(R);
    mu.N_ = static_cast<long>(t.size());
    mu.Mprec_ = min_prec(t, mu.R_->precision());
    mu.t_ = std::move(t);
    mu.u_ = dress(mu.R_, t_to_u_raw(strip(mu.t_), mu.R_->ctx().pM), mu.Mprec_);
    mu.u_.resize(mu.N_, CycloElement::zero(mu.R_));
    return mu;
}

Measure Measure::from_u_coeffs(CycloRingPtr R, std::vector<CycloElement> u, long N) {
    Measure mu;
    mu.R_ = std::move(R);
    mu.N_ = N;
    mu.Mprec_ = min_prec(u, mu.R_->precision());
    mu.t_ = dress(mu.R_, u_to_t_raw(strip(u), mu.R_->ctx().pM, N), mu.Mprec_);
    mu.t_.resize(N, CycloElement::zero(mu.R_));
    if (static_cast<long>(u.size()) == N) {
        mu.u_ = std::move(u);
    } else {
        // re-derive the degree-<N U-view of the truncated transform
        mu.u_ = dress(mu.R_, t_to_u_raw(strip(mu.t_), mu.R_->ctx().pM), mu.Mprec_);
        mu.u_.resize(N, CycloElement::zero(mu.R_));
    }
    return mu;
}

Measure Measure::from_series(const CycloRingPtr& R, const Poly& F, long N) {
    if (R->degree() != 1) throw RingMismatch("from_series: zp ring required");
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k)
        t.push_back(k < static_cast<long>(F.size()) ? CycloElement::from_int(R, F[k])
                                                    : CycloElement::zero(R));
    return from_t_coeffs(R, std::move(t));
}

Measure Measure::dirac_int(const CycloRingPtr& R, const Int& a, long N) {
    if (a < 0) throw BadParameter("dirac_int: a >= 0 required");
    if (a < N) {
        std::vector<CycloElement> u(N, CycloElement::zero(R));
        u[a.convert_to<long>()] = CycloElement::one(R);
        return from_u_coeffs(R, std::move(u), N);
    }
    // truncated (1+T)^a: exact binomials
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k)
        t.push_back(CycloElement::from_int(R, binomial_exact(a, static_cast<unsigned long>(k))));
    return from_t_coeffs(R, std::move(t));
}

Measure Measure::dirac(const CycloRingPtr& R, const Padic& a, long N) {
    if (a.is_zero()) return dirac_int(R, 0, N);
    if (a.valuation() < 0) throw BadParameter("dirac: a must be integral");
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k) t.push_back(CycloElement::from_padic(R, padic_binomial(a, k)));
    return from_t_coeffs(R, std::move(t));
}

Measure Measure::flagged_unit_supported() const {
    Measure m = *this;
    m.unit_supported_ = true;
    return m;
}

CycloElement Measure::moment(long k) const {
    if (k >= N_) throw TruncationExceeded("moment: k >= truncation degree");
    const Int& pM = R_->ctx().pM;
    Poly acc;
    for (long m = 0; m < N_; ++m) {
        if (u_[m].coords().empty()) continue;
        Int w = pow_mod(Int(m), Int(k), pM);
        coords_axpy(acc, w, u_[m].coords(), pM);
    }
    return CycloElement(R_, std::move(acc), Mprec_);
}

Measure Measure::truncated(long N) const {
    if (N >= N_) return *this;
    std::vector<CycloElement> t(t_.begin(), t_.begin() + N);
    Measure m = from_t_coeffs(R_, std::move(t));
    m.unit_supported_ = unit_supported_;
    return m;
}

Measure Measure::with_prec(int M) const {
    Measure m = *this;
    m.Mprec_ = std::min(m.Mprec_, M);
    return m;
}

Measure operator+(const Measure& a, const Measure& b) {
    if (a.R_->modulus() != b.R_->modulus()) throw RingMismatch("measure add: ring mismatch");
    long N = std::min(a.N_, b.N_);
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k) t.push_back(a.t_[k] + b.t_[k]);
    return Measure::from_t_coeffs(a.R_, std::move(t));
}

Measure operator-(const Measure& a, const Measure& b) {
    if (a.R_->modulus() != b.R_->modulus()) throw RingMismatch("measure sub: ring mismatch");
    long N = std::min(a.N_, b.N_);
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k) t.push_back(a.t_[k] - b.t_[k]);
    return Measure::from_t_coeffs(a.R_, std::move(t));
}

Measure Measure::operator-() const {
    std::vector<CycloElement> t;
    t.reserve(N_);
    for (const auto& c : t_) t.push_back(-c);
    return from_t_coeffs(R_, std::move(t));
}

Measure Measure::scaled(const CycloElement& c) const {
    std::vector<CycloElement> t;
    t.reserve(N_);
    for (const auto& x : t_) t.push_back(x * c);
    return from_t_coeffs(R_, std::move(t));
}

Measure Measure::scaled_int(const Int& c) const {
    std::vector<CycloElement> t;
    t.reserve(N_);
    for (const auto& x : t_) t.push_back(x.scaled(c));
    return from_t_coeffs(R_, std::move(t));
}

bool Measure::equals_mod(const Measure& o, int digits, long upto_degree) const {
    long N = std::min(N_, o.N_);
    if (upto_degree >= 0) N = std::min(N, upto_degree);
    for (long k = 0; k < N; ++k)
        if (!t_[k].equals_mod(o.t_[k], digits)) return false;
    return true;
}

bool Measure::is_zero_mod(int digits, long upto_degree) const {
    long N = upto_degree >= 0 ? std::min(N_, upto_degree) : N_;
    Int pm = pow_int(R_->prime(), static_cast<unsigned long>(digits));
    for (long k = 0; k < N; ++k)
        for (const auto& c : t_[k].coords())
            if (c % pm != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// operators

std::vector<Rat> mahler_coefficients(const std::vector<Rat>& phi, long count) {
    // a_k = phi^[k](0), phi^[k+1](x) = phi^[k](x+1) - phi^[k](x)
    std::vector<Rat> cur = phi;
    std::vector<Rat> out;
    out.reserve(count);
    for (long k = 0; k < count; ++k) {
        out.push_back(cur.empty() ? Rat(0) : cur[0]);
        // shift-and-subtract: next(x) = cur(x+1) - cur(x)
        std::vector<Rat> next(cur.size(), Rat(0));
        // cur(x+1) via binomial expansion
        for (size_t i = 0; i < cur.size(); ++i) {
            if (cur[i] == 0) continue;
            for (size_t j = 0; j <= i; ++j)
                next[j] += cur[i] * Rat(binomial_exact(Int(i), static_cast<unsigned long>(i - j)));
        }
        for (size_t i = 0; i < cur.size(); ++i) next[i] -= cur[i];
        while (!next.empty() && next.back() == 0) next.pop_back();
        cur = std::move(next);
    }
    return out;
}

Measure mult_by_x(const Measure& mu) {
    // (1+T) A'(T), truncated to degree N-1
    const auto& R = mu.ring();
    long N = mu.degree();
    long Nout = std::max<long>(N - 1, 0);
    std::vector<CycloElement> t(Nout, CycloElement::zero(R));
    for (long j = 0; j < Nout; ++j) {
        // coefficient of T^j in (1+T)A' = (j+1) a_{j+1} + j a_j
        CycloElement v = mu.t_coeff(j + 1).scaled(Int(j + 1));
        if (j > 0) v = v + mu.t_coeff(j).scaled(Int(j));
        t[j] = v;
    }
    return Measure::from_t_coeffs(R, std::move(t));
}

Measure mult_by_zx(const Measure& mu, const CycloElement& z) {
    const auto& R = mu.ring();
    long N = mu.degree();
    std::vector<CycloElement> u(N, CycloElement::zero(R));
    CycloElement zp = CycloElement::one(R);
    for (long m = 0; m < N; ++m) {
        u[m] = mu.u_coeffs()[m] * zp;
        zp = zp * z;
    }
    return Measure::from_u_coeffs(R, std::move(u), N);
}

Measure act_sigma(const Measure& mu, const Int& a) {
    const auto& R = mu.ring();
    if (a == 0 || a % R->prime() == 0) throw BadParameter("act_sigma: a must be a unit");
    long N = mu.degree();
    const Int& pM = R->ctx().pM;
    // t_j(out) = sum_m u_m C(a m, j); stream Pascal rows over n = a*m
    std::vector<Poly> t(N);
    if (a > 0) {
        std::vector<Int> row(N, 0);
        row[0] = 1;  // row n = 0
        Int n = 0;
        for (long m = 0; m < N; ++m) {
            Int target = a * m;
            while (n < target) {
                for (long j = N - 1; j >= 1; --j) {
                    Int s = row[j] + row[j - 1];
                    row[j] = s >= pM ? s - pM : s;
                }
                ++n;
            }
            if (!mu.u_coeffs()[m].coords().empty())
                for (long j = 0; j < N; ++j) coords_axpy(t[j], row[j], mu.u_coeffs()[m].coords(), pM);
        }
    } else {
        // C(-|n|, j) = (-1)^j C(|n|+j-1, j); table rows go up to |a|(N-1)+N
        long rows = (-a.convert_to<long>()) * (N - 1) + N;
        const BinomTable& B = binom_table(pM, rows);
        for (long m = 0; m < N; ++m) {
            if (mu.u_coeffs()[m].coords().empty()) continue;
            long n = (a * m).convert_to<long>();  // <= 0
            for (long j = 0; j < N; ++j) {
                Int c;
                if (n == 0)
                    c = (j == 0) ? Int(1) : Int(0);
                else {
                    c = B.rows[-n + j - 1][j];
                    if (j % 2 != 0 && c != 0) c = pM - c;
                }
                coords_axpy(t[j], c, mu.u_coeffs()[m].coords(), pM);
            }
        }
    }
    return Measure::from_t_coeffs(R, dress(R, std::move(t), mu.prec()));
}

Measure act_sigma(const Measure& mu, const Padic& a) {
    const auto& R = mu.ring();
    if (a.is_zero() || a.valuation() != 0) throw BadParameter("act_sigma: a must be a unit");
    long N = mu.degree();
    std::vector<CycloElement> t(N, CycloElement::zero(R));
    // C(a m, j) rows per m (p-adic binomials)
    for (long m = 0; m < N; ++m) {
        if (mu.u_coeffs()[m].coords().empty()) continue;
        Padic am = a * Padic::from_int(Int(m), R->prime(), static_cast<int>(a.abs_prec()));
        for (long j = 0; j < N; ++j) {
            Padic c = padic_binomial(am, j);
            if (c.is_zero()) continue;
            t[j] = t[j] + mu.u_coeffs()[m] * CycloElement::from_padic(R, c);
        }
    }
    return Measure::from_t_coeffs(R, std::move(t));
}

Measure frobenius_phi(const Measure& mu) {
    // full image: U-degree grows p-fold, so phi with input degree ceil(N/p)
    // supports output degree N and trace_psi recovers the input exactly
    const auto& R = mu.ring();
    long N = mu.degree();
    long pl = R->prime().convert_to<long>();
    long Nout = (N - 1) * pl + 1;
    std::vector<CycloElement> u(Nout, CycloElement::zero(R));
    for (long m = 0; m < N; ++m) u[m * pl] = mu.u_coeffs()[m];
    return Measure::from_u_coeffs(R, std::move(u), Nout);
}

Measure trace_psi(const Measure& mu) {
    const auto& R = mu.ring();
    long N = mu.degree();
    long pl = R->prime().convert_to<long>();
    long Nout = (N + pl - 1) / pl;
    std::vector<CycloElement> u(Nout, CycloElement::zero(R));
    for (long m = 0; m < Nout; ++m) u[m] = mu.u_coeffs()[m * pl];
    return Measure::from_u_coeffs(R, std::move(u), Nout);
}

Measure restrict_to_units(const Measure& mu) {
    const auto& R = mu.ring();
    long N = mu.degree();
    long pl = R->prime().convert_to<long>();
    std::vector<CycloElement> u(N, CycloElement::zero(R));
    for (long m = 0; m < N; ++m)
        u[m] = (m % pl == 0) ? CycloElement::zero(R) : mu.u_coeffs()[m];
    Measure out = Measure::from_u_coeffs(R, std::move(u), N);
    return out.flagged_unit_supported();
}

Measure restrict_eigen(const Measure& mu, const CycloElement& lambda) {
    Measure phim = frobenius_phi(mu);
    Measure out = mu - phim.scaled(lambda);
    return out.flagged_unit_supported();
}

Measure restrict_to_coset(const Measure& mu, const Int& b, int n) {
    const auto& R = mu.ring();
    long N = mu.degree();
    Int pn = pow_int(R->prime(), static_cast<unsigned long>(n));
    Int br = mod_reduce(b, pn);
    std::vector<CycloElement> u(N, CycloElement::zero(R));
    for (long m = 0; m < N; ++m)
        if (Int(m) % pn == br) u[m] = mu.u_coeffs()[m];
    return Measure::from_u_coeffs(R, std::move(u), N);
}

Measure convolve_additive(const Measure& a, const Measure& b) {
    if (a.ring()->modulus() != b.ring()->modulus()) throw RingMismatch("convolve: ring mismatch");
    const auto& R = a.ring();
    long N = std::min(a.degree(), b.degree());
    std::vector<CycloElement> t(N, CycloElement::zero(R));
    for (long i = 0; i < N; ++i) {
        if (a.t_coeff(i).coords().empty()) continue;
        for (long j = 0; i + j < N; ++j) t[i + j] = t[i + j] + a.t_coeff(i) * b.t_coeff(j);
    }
    return Measure::from_t_coeffs(R, std::move(t));
}

Measure twist_by_character_coset(const Measure& mu, const DirichletCharacter& chi) {
    const auto& R = mu.ring();
    long N = mu.degree();
    auto vals = realize_character(chi, R);
    std::vector<CycloElement> u(N, CycloElement::zero(R));
    for (long m = 0; m < N; ++m) {
        long r = m % static_cast<long>(chi.modulus());
        u[m] = mu.u_coeffs()[m] * vals[r];
    }
    Measure out = Measure::from_u_coeffs(R, std::move(u), N);
    return chi.conductor() > 1 ? out.flagged_unit_supported() : out;
}

Measure twist_by_character_gauss(const Measure& mu, const DirichletCharacter& chi,
                                 const CycloRingPtr& big_ring) {
    if (!chi.is_primitive()) throw BadParameter("twist_gauss: primitive character required");
    unsigned long N_chi = chi.modulus();
    int n = 0;
    {
        unsigned long q = N_chi;
        unsigned long pl = big_ring->prime().convert_to<unsigned long>();
        while (q % pl == 0) {
            q /= pl;
            ++n;
        }
        if (q != 1) throw BadParameter("twist_gauss: conductor must be a p-power");
    }
    Measure big = (mu.ring()->degree() == 1) ? embed_measure(mu, big_ring) : mu;
    if (big.ring()->modulus() != big_ring->modulus()) throw RingMismatch("twist_gauss: ring mismatch");
    long N = big.degree();
    auto chi_inv_vals = realize_character(chi.inverse(), big_ring);
    CycloElement eps = ring_root_of_unity(big_ring, N_chi);
    // sum_c chi^{-1}(c) A((1+T) eps^c - 1): U-diagonal with weight
    // w_m = sum_c chi^{-1}(c) eps^{cm}
    std::vector<CycloElement> epspow(N_chi, CycloElement::one(big_ring));
    for (unsigned long e = 1; e < N_chi; ++e) epspow[e] = epspow[e - 1] * eps;
    std::vector<CycloElement> u(N, CycloElement::zero(big_ring));
    for (long m = 0; m < N; ++m) {
        if (big.u_coeffs()[m].coords().empty()) continue;
        CycloElement w = CycloElement::zero(big_ring);
        for (unsigned long c = 1; c < N_chi; ++c) {
            if (std::gcd(c, N_chi) != 1) continue;
            w = w + chi_inv_vals[c] * epspow[(c * m) % N_chi];
        }
        u[m] = big.u_coeffs()[m] * w;
    }
    Measure summed = Measure::from_u_coeffs(big_ring, std::move(u), N);
    // divide by G(chi^{-1}) = chi(-1) G(chi) / p^n
    CycloElement g = gauss_sum(chi.primitive_part(), big_ring);
    int sign = chi.parity();
    Measure scaled = summed.scaled(sign == 1 ? g : -g);
    // exact division of every coefficient by p^n
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k) t.push_back(scaled.t_coeff(k).divide_by_p(n));
    Measure out = Measure::from_t_coeffs(big_ring, std::move(t));
    return out.flagged_unit_supported();
}

Measure plus_minus_project(const Measure& mu, int sign) {
    const auto& R = mu.ring();
    Measure refl = act_sigma(mu, Int(-1));
    Measure sum = (sign >= 0) ? (mu + refl) : (mu - refl);
    Int half = inv_mod(Int(2), R->ctx().pM);
    return sum.scaled_int(half);
}

Measure embed_measure(const Measure& mu, const CycloRingPtr& R) {
    if (mu.ring()->degree() != 1) throw RingMismatch("embed_measure: source must be zp ring");
    long N = mu.degree();
    std::vector<CycloElement> t;
    t.reserve(N);
    for (long k = 0; k < N; ++k) {
        const Poly& c = mu.t_coeff(k).coords();
        t.push_back(CycloElement(R, c, mu.t_coeff(k).prec()));
    }
    return Measure::from_t_coeffs(R, std::move(t));
}

}  // namespace zetap
