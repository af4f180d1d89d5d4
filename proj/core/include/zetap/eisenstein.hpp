#ifndef ZETAP_EISENSTEIN_HPP
#define ZETAP_EISENSTEIN_HPP

#include <zetap/kubota_leopoldt.hpp>
#include <zetap/lvalues.hpp>

namespace zetap {

// sigma^(p)_{k-1}(n): divisor sum skipping p-divisible divisors
Int sigma_p(const Int& p, long k, long n);

// q-expansion of the p-stabilised weight-k Eisenstein series, exact rational
// coefficients: c_0 = (1 - p^(k-1)) zeta(1-k)/2, c_n = sigma^(p)_{k-1}(n)
struct QExpansion {
    long weight = 0;
    std::vector<Rat> coeffs;
};
QExpansion stabilized_eisenstein(const Int& p, long k, long nmax);

// the measure-valued coefficient A_n = sum_{p-coprime d | n} delta_d
Measure family_coefficient(const CycloRingPtr& R, long n, long N);

// p-adic specialization of the family at weight k: constant term from the
// pseudo-measure (A_0 = x zeta_p / 2), higher terms from A_n moments
std::vector<Padic> family_specialize(long k, long nmax, const PseudoMeasure& zeta, long N);

}  // namespace zetap

#endif
