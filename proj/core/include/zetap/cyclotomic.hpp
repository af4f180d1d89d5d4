#ifndef ZETAP_CYCLOTOMIC_HPP
#define ZETAP_CYCLOTOMIC_HPP

#include <zetap/dirichlet.hpp>
#include <zetap/padic.hpp>
#include <zetap/polymod.hpp>

#include <memory>
#include <vector>

namespace zetap {

class CycloRing;
using CycloRingPtr = std::shared_ptr<const CycloRing>;

// Finite flat extension of Z/p^M presented as Z[X]/(g(X), p^M) where the
// residue of X is a root of unity of known order:
//   - ramified(n):     g = Phi_{p^n}, X a primitive p^n-th root
//   - unramified(D):   g = Hensel lift of an irreducible factor of Phi_D mod
//                      p, X a primitive D-th root, degree f = ord_D(p)
//   - composite(D, n): X a primitive D p^n-th root; degree f * phi(p^n)
// Rings are immutable after construction and safe to share between threads.
class CycloRing : public std::enable_shared_from_this<CycloRing> {
  public:
    static CycloRingPtr ramified(const Int& p, int level, int M);
    static CycloRingPtr unramified(const Int& p, unsigned long D, int M);
    static CycloRingPtr composite(const Int& p, unsigned long D, int level, int M);
    // degree-1 ring (Z/p^M itself), root order 1
    static CycloRingPtr zp(const Int& p, int M);

    CycloRingPtr with_precision(int M) const;

    const Int& prime() const { return ctx_.p; }
    int precision() const { return ctx_.M; }
    const ModCtx& ctx() const { return ctx_; }
    const Poly& modulus() const { return modulus_; }
    unsigned long degree() const { return modulus_.size() - 1; }
    unsigned long root_order() const { return root_order_; }
    int ram_level() const { return level_; }
    unsigned long tame_conductor() const { return D_; }
    // residue field degree f (Teichmuller exponent is p^f)
    unsigned long residue_degree() const { return f_; }

  private:
    CycloRing() = default;
    ModCtx ctx_;
    Poly modulus_;
    unsigned long root_order_ = 1;
    int level_ = 0;        // n with p^n | root order
    unsigned long D_ = 1;  // prime-to-p part of root order
    unsigned long f_ = 1;
};

// Element of a CycloRing: coefficient vector of length deg(g), entries
// reduced mod p^M. Mprec tracks the precision actually guaranteed (<= ring
// precision); it shrinks under division by p.
class CycloElement {
  public:
    CycloElement() = default;
    CycloElement(CycloRingPtr R, Poly coords);
    CycloElement(CycloRingPtr R, Poly coords, int Mprec);

    static CycloElement zero(const CycloRingPtr& R);
    static CycloElement one(const CycloRingPtr& R);
    static CycloElement from_int(const CycloRingPtr& R, const Int& n);
    static CycloElement from_padic(const CycloRingPtr& R, const Padic& x);
    // X^k (k reduced mod root order)
    static CycloElement root_power(const CycloRingPtr& R, long k);

    const CycloRingPtr& ring() const { return R_; }
    const Poly& coords() const { return c_; }
    int prec() const { return Mprec_; }
    bool is_zero() const;  // zero mod p^Mprec

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator-(const CycloElement& a, const CycloElement& b);
    friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
    CycloElement operator-() const;
    CycloElement scaled(const Int& c) const;

    bool is_unit() const;
    CycloElement inverse() const;
    CycloElement pow(const Int& e) const;

    // exact division by p^t; throws if some coordinate is not divisible
    CycloElement divide_by_p(int t) const;
    // multiply by p^t (no precision gain)
    CycloElement times_p(int t) const;

    // the element as a Padic if all higher coordinates vanish mod p^Mprec
    Padic to_padic() const;
    bool is_padic() const;

    // v_p of the element measured through coordinates: min_i v_p(c_i),
    // capped at Mprec (this is the valuation of the content, not the
    // normalized ramified valuation)
    int content_valuation() const;

    bool equals_mod(const CycloElement& o, int digits) const;

  private:
    CycloRingPtr R_;
    Poly c_;
    int Mprec_ = 0;
};

// ring homomorphism X -> X^e (e prime to the root order)
CycloElement galois_apply(const CycloElement& a, const Int& e);

// product over all Galois conjugates; lands in Z_p
Padic ring_norm(const CycloElement& a);

// Teichmuller representative of the residue of a unit u: the limit of
// u^(p^f)^m; satisfies t^(p^f) = t and t = u mod the maximal ideal
CycloElement ring_teichmuller(const CycloElement& u);

// Iwasawa logarithm of the principal-unit part <u> = u / teich(u):
// log is normalized by log(roots of unity) = 0. Requires ram level <= 1
// (where the series terms stay integral).
CycloElement log_unit(const CycloElement& u);

// Gauss sum G(chi) = sum_{c mod N unit} chi(c) X_N^c, with N = modulus of
// chi (pass a primitive character) and X_N the canonical order-N root in the
// ring. Throws RingTooSmall if the ring lacks the roots.
CycloElement gauss_sum(const DirichletCharacter& chi, const CycloRingPtr& R);

// canonical root of unity of order d in the ring (p-part from X, prime-to-p
// part from the Teichmuller root used by value_zp)
CycloElement ring_root_of_unity(const CycloRingPtr& R, unsigned long d);

// chi realized as ring values, indexed by residue mod chi.modulus()
std::vector<CycloElement> realize_character(const DirichletCharacter& chi, const CycloRingPtr& R);

}  // namespace zetap

#endif
