#include <zetap/eisenstein.hpp>

namespace zetap {

Int sigma_p(const Int& p, long k, long n) {
    if (k < 1 || n < 1) throw BadParameter("sigma_p: k, n >= 1 required");
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (Int(d) % p == 0) continue;
        s += pow_int(Int(d), static_cast<unsigned long>(k - 1));
    }
    return s;
}

QExpansion stabilized_eisenstein(const Int& p, long k, long nmax) {
    if (k < 4 || k % 2 != 0) throw BadWeight("stabilized_eisenstein: k must be even, >= 4");
    QExpansion q;
    q.weight = k;
    q.coeffs.reserve(nmax + 1);
    q.coeffs.push_back((Rat(1) - Rat(pow_int(p, static_cast<unsigned long>(k - 1)))) *
                       zeta_neg(k - 1) / Rat(2));
    for (long n = 1; n <= nmax; ++n) q.coeffs.push_back(Rat(sigma_p(p, k, n)));
    return q;
}

Measure family_coefficient(const CycloRingPtr& R, long n, long N) {
    if (n < 1) throw BadParameter("family_coefficient: n >= 1");
    Measure acc(R, N);
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (Int(d) % R->prime() == 0) continue;
        acc = acc + Measure::dirac_int(R, Int(d), N);
    }
    return acc.flagged_unit_supported();
}

std::vector<Padic> family_specialize(long k, long nmax, const PseudoMeasure& zeta, long N) {
    if (k < 4 || k % 2 != 0) throw BadWeight("family_specialize: k must be even, >= 4");
    const Int& p = zeta.prime();
    int M = zeta.numerator().ring()->precision();
    std::vector<Padic> out;
    out.reserve(nmax + 1);
    // A_0 = x zeta_p / 2: int x^(k-1) x zeta_p = int x^k zeta_p
    Padic half = embed_rational(Rat(1, 2), p, M);
    out.push_back(zeta.eval(DirichletCharacter::trivial(), k) * half);
    auto R = zeta.numerator().ring();
    for (long n = 1; n <= nmax; ++n) {
        Measure an = family_coefficient(R, n, N);
        out.push_back(an.moment(k - 1).to_padic());
    }
    return out;
}

}  // namespace zetap
