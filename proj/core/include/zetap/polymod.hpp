#ifndef ZETAP_POLYMOD_HPP
#define ZETAP_POLYMOD_HPP

#include <zetap/bigint.hpp>
#include <zetap/errors.hpp>

#include <cstdint>
#include <vector>

namespace zetap {

// Dense polynomials over Z/p^M, little-endian coefficients. When p^M fits in
// 62 bits the multiply/reduce kernels run on uint64 with 128-bit products,
// which is what keeps the norm-operator and series pipelines fast; otherwise
// they fall back to cpp_int.

using Poly = std::vector<Int>;

struct ModCtx {
    Int p;
    int M = 0;
    Int pM;
    bool small = false;
    std::uint64_t pM64 = 0;

    ModCtx() = default;
    ModCtx(Int prime, int digits);
    Int reduce(const Int& a) const { return mod_reduce(a, pM); }
};

void poly_trim(Poly& a);
Poly poly_add(const ModCtx& m, const Poly& a, const Poly& b);
Poly poly_sub(const ModCtx& m, const Poly& a, const Poly& b);
Poly poly_neg(const ModCtx& m, const Poly& a);
Poly poly_scale(const ModCtx& m, const Poly& a, const Int& c);

// product; if trunc >= 0 only degrees < trunc are kept
Poly poly_mul(const ModCtx& m, const Poly& a, const Poly& b, long trunc = -1);

// remainder of a modulo monic f
Poly poly_rem(const ModCtx& m, Poly a, const Poly& f);
// quotient and remainder, f monic
void poly_divrem(const ModCtx& m, Poly a, const Poly& f, Poly& q, Poly& r);

Poly poly_mulmod(const ModCtx& m, const Poly& a, const Poly& b, const Poly& f);
Poly poly_powmod(const ModCtx& m, Poly base, Int e, const Poly& f);

// inverse of the power series a (unit constant term) mod T^n
Poly series_inverse(const ModCtx& m, const Poly& a, long n);
// derivative
Poly poly_derivative(const ModCtx& m, const Poly& a);

// polynomial gcd machinery over F_p (M irrelevant, coefficients mod p)
Poly fp_rem(const Int& p, Poly a, const Poly& f);
Poly fp_gcd(const Int& p, Poly a, Poly b);
// extended gcd over F_p: returns g and u,v with u*a + v*b = g (g monic)
Poly fp_ext_gcd(const Int& p, const Poly& a, const Poly& b, Poly& u, Poly& v);
bool fp_is_irreducible(const Int& p, const Poly& f);

// Hensel-lift a factorization f = g*h mod p (g, h monic and coprime mod p)
// to f = g*h mod p^M; returns the lifted g (and h through the reference).
Poly hensel_lift_factor(const ModCtx& m, const Poly& f, Poly g, Poly h);

}  // namespace zetap

#endif
