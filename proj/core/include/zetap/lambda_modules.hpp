#ifndef ZETAP_LAMBDA_MODULES_HPP
#define ZETAP_LAMBDA_MODULES_HPP

#include <zetap/polymod.hpp>

#include <vector>

namespace zetap {

// Weierstrass data of a nonzero f in Z_p[[T]]: f = p^mu * u * P with P
// distinguished of degree lambda and u an invertible series.
struct WeierstrassData {
    int mu = 0;
    long lambda = 0;
    Poly distinguished;  // monic, lower coefficients divisible by p
    Poly unit;           // invertible series, truncated
};

// preparation by Hensel iteration against the mod-p factorization
// f/p^mu = T^lambda * (unit); throws IndeterminateInvariants when every
// coefficient vanishes mod p^M
WeierstrassData weierstrass_prepare(const ModCtx& m, const Poly& f, long N);

// description of an elementary torsion Lambda-module: a direct sum of
// Lambda/(p^{m_i}) and Lambda/(g_j) with each g_j distinguished, given by
// exact integer coefficients
struct LambdaModuleDesc {
    Int p;
    std::vector<int> p_exponents;       // m_i
    std::vector<std::vector<Int>> polys;  // g_j, little-endian, monic

    void validate() const;  // distinguished-ness and g_j(0) != 0
};

bool is_distinguished(const Int& p, const std::vector<Int>& g);

// e with |Lambda/(g, phi^n(T))| = p^e, through the exact resultant
// v_p(Res(g, (1+T)^(p^n) - 1)); NotCoprime when the resultant vanishes
long quotient_size_exponent(const Int& p, const std::vector<Int>& g, int n);

// e_n for the whole description (p-power summands contribute m_i p^n)
Int module_size_exponent(const LambdaModuleDesc& desc, int n);

// fit e_n = mu p^n + lambda n + nu for n >= n0
struct GrowthFit {
    long mu = 0;
    long lambda = 0;
    Int nu = 0;
    int n0 = 0;
    std::vector<Int> e;  // observed exponents over the range
};
GrowthFit growth_law(const LambdaModuleDesc& desc, int n_lo, int n_hi);

// p-rank s p^n + sum deg g_j, valid once p^n >= max deg g_j
Int p_rank(const LambdaModuleDesc& desc, int n);

// generator data (sum m_i, prod g_j) of the characteristic ideal
struct CharacteristicIdeal {
    int p_exponent = 0;
    std::vector<Int> poly;  // exact product of the g_j
};
CharacteristicIdeal characteristic_ideal(const LambdaModuleDesc& desc);

}  // namespace zetap

#endif
