#ifndef ZETAP_LVALUES_HPP
#define ZETAP_LVALUES_HPP

#include <zetap/bigint.hpp>
#include <zetap/cyclo_rational.hpp>
#include <zetap/dirichlet.hpp>

namespace zetap {

// Exact-rational oracle for the complex side. Nothing here touches p-adic
// arithmetic; oracle values are embedded into Q_p only at comparison time.

// B_n, with the B_1 = -1/2 convention; memoized (single writer, shared
// readers)
const Rat& bernoulli(unsigned long n);

// zeta(-n) for n >= 0 (zero for even n >= 2)
Rat zeta_neg(unsigned long n);

// Bernoulli polynomial value B_k(x)
Rat bernoulli_poly_at(unsigned long k, const Rat& x);

// k-th twisted Bernoulli number B_{k,chi} = f^(k-1) sum_{a=1..f} chi(a)
// B_k(a/f), f = modulus of chi. For the trivial character mod 1 this is
// B_k(1), which differs from bernoulli(1) by sign at k = 1.
CycloRat generalized_bernoulli(const DirichletCharacter& chi, unsigned long k);

// L(chi, 1-k) = -B_{k,chi}/k for primitive chi (trivial chi gives zeta(1-k))
CycloRat dirichlet_L_neg(const DirichletCharacter& chi, unsigned long k);

// rational shortcut when chi takes values in Q (order <= 2)
Rat dirichlet_L_neg_rat(const DirichletCharacter& chi, unsigned long k);

// von Staudt-Clausen: den(B_2k) = prod of primes q with (q-1) | 2k
bool von_staudt_clausen_check(unsigned long two_k);

// Kummer congruence in exact rationals: with (p-1) not dividing k and
// k = l mod (p-1)p^(m-1), checks (1-p^(k-1))zeta(1-k) = (1-p^(l-1))zeta(1-l)
// mod p^m. Returns the p-adic valuation of the difference (>= m on pass).
long kummer_congruence_valuation(const Int& p, unsigned long k, unsigned long l);

}  // namespace zetap

#endif
