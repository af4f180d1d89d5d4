#ifndef ZETAP_DIRICHLET_HPP
#define ZETAP_DIRICHLET_HPP

#include <zetap/bigint.hpp>
#include <zetap/cyclo_rational.hpp>
#include <zetap/errors.hpp>
#include <zetap/padic.hpp>

#include <vector>

namespace zetap {

// A Dirichlet character mod N, with values stored exactly as exponents of an
// abstract primitive root of unity of the character's order. Realization into
// a concrete ring (Z_p, a cyclotomic ring, or Q(zeta_d)) happens at
// evaluation time, always through the same exponent table, so the oracle and
// the measure side see the same character.
class DirichletCharacter {
  public:
    // character mod 1 (constant 1, conductor 1)
    static DirichletCharacter trivial();
    // omega^i mod p (omega = Teichmuller character); order (p-1)/gcd(i,p-1)
    static DirichletCharacter teichmuller_power(const Int& p, long i);
    // quadratic character mod D for D = 4 or an odd prime
    static DirichletCharacter quadratic(unsigned long D);
    static DirichletCharacter from_exponents(unsigned long modulus, unsigned long order,
                                             std::vector<long> exps);

    // product of characters with coprime moduli
    DirichletCharacter times(const DirichletCharacter& o) const;
    DirichletCharacter power(long k) const;
    DirichletCharacter inverse() const { return power(-1); }
    // the primitive character mod the conductor inducing this one
    DirichletCharacter primitive_part() const;

    unsigned long modulus() const { return modulus_; }
    unsigned long order() const { return order_; }
    unsigned long conductor() const { return conductor_; }
    bool is_trivial() const { return conductor_ == 1; }
    bool is_primitive() const { return conductor_ == modulus_; }
    int parity() const;  // chi(-1), +1 or -1
    bool is_even() const { return parity() == 1; }
    bool is_odd() const { return parity() == -1; }

    // exponent of the abstract root at a, or -1 when gcd(a, modulus) > 1
    long exponent_at(const Int& a) const;

    // exact value in Q[x]/Phi_order (zero for non-coprime a)
    CycloRat value_exact(const Int& a, const CycloRatFieldPtr& F) const;

    // value in Z_p: root realized as teich(g)^((p-1)/order) for the smallest
    // primitive root g mod p; requires order | p-1
    Padic value_zp(const Int& a, const Int& p, int M) const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus_ == o.modulus_ && order_ == o.order_ && exps_ == o.exps_;
    }

  private:
    unsigned long modulus_ = 1;
    unsigned long order_ = 1;
    unsigned long conductor_ = 1;
    std::vector<long> exps_;  // size modulus_; exponent of zeta_order, or -1
    void compute_conductor();
    void reduce_order();
};

// the canonical order-d root of unity in Z_p used by value_zp and the
// oracle-to-Q_p embedding (requires d | p-1)
Padic root_of_unity_zp(const Int& p, unsigned long d, int M);

// evaluate a CycloRat at the canonical Z_p root (x -> root_of_unity_zp)
Padic embed_cyclorat_zp(const CycloRat& x, const Int& p, int M);

// smallest primitive root mod p
long smallest_primitive_root(const Int& p);

}  // namespace zetap

#endif
