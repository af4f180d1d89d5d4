#ifndef ZETAP_COLEMAN_HPP
#define ZETAP_COLEMAN_HPP

#include <zetap/kubota_leopoldt.hpp>
#include <zetap/measure.hpp>

namespace zetap {

// An invertible truncated power series in Z_p[[T]] (unit constant term).
class UnitPowerSeries {
  public:
    UnitPowerSeries(ModCtx ctx, Poly coeffs);

    const ModCtx& ctx() const { return ctx_; }
    const Poly& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool invertible() const;

    // claimed/verified norm invariance within truncation
    bool norm_invariant_flag() const { return norm_invariant_; }
    UnitPowerSeries flagged_norm_invariant() const;

    bool equals_mod(const UnitPowerSeries& o, int digits, long upto_degree = -1) const;

  private:
    ModCtx ctx_;
    Poly c_;
    bool norm_invariant_ = false;
};

// f_{c(a)}(T) = ((1+T)^a - 1)/T, the Coleman series of the cyclotomic tower
UnitPowerSeries coleman_closed_form(const ModCtx& m, long a);

// A norm-compatible tower of units u_n in the level-n ramified rings.
struct UnitTower {
    Int p;
    int M = 0;
    int depth = 0;
    std::vector<CycloRingPtr> rings;      // level n = 1..depth
    std::vector<CycloElement> levels;     // u_n

    // check Norm_{n,n-1}(u_n) = u_{n-1} for every step
    bool norm_compatible(int digits) const;
};

// the tower c_n(a) = (zeta^a - 1)/(zeta - 1)
UnitTower cyclotomic_tower(const Int& p, int M, long a, int depth);

// evaluate a series at pi_n = zeta_{p^n} - 1 (the map R: series -> tower)
CycloElement evaluate_at_uniformizer(const UnitPowerSeries& f, const CycloRingPtr& ring_n);
UnitTower tower_from_series(const UnitPowerSeries& f, const Int& p, int M, int depth);

// The multiplicative norm operator: phi(N f)(T) = prod_{xi^p=1} f(xi(1+T)-1).
// The product is computed exactly as a polynomial over Z_p[zeta_p] in the
// U = 1+T coordinate; it is supported on U-exponents divisible by p and its
// coefficients descend to Z_p (DescentFailure otherwise), which hands back
// N(f) with the same degree as f.
UnitPowerSeries norm_operator(const UnitPowerSeries& f);

// reconstruct the Coleman series of a tower: interpolate u_n at pi_n by
// greedy digits in the Eisenstein basis, then iterate the norm operator 2n
// times; the result is certified modulo p^min(M, depth)
UnitPowerSeries coleman_reconstruct(const UnitTower& tower, int target_digits = 0);

// logarithmic derivative Delta(f) = (1+T) f'/f, truncated to degree N
Poly log_derivative(const ModCtx& m, const Poly& f, long N);

// Col(f): Delta, restriction to the units, and the x^{-1} shift as data;
// requires N(f) = f (NotNormInvariant otherwise, checked within truncation)
PseudoMeasure coleman_map(const UnitPowerSeries& f, long N);

// checks around the exact sequence
//   0 -> Z_p -> Z_p[[T]]^{psi=id} --(1-phi)--> Z_p[[T]]^{psi=0} -> Z_p -> 0
struct FundamentalSequenceReport {
    bool kernel_constants = false;        // ker(1-phi) on psi-fixed = constants
    bool psi_zero_preimage = false;       // (1-phi) hits every psi=0, g(0)=0
    bool cokernel_witness = false;        // psi(1+T) = 0, evaluation at 0 is 1
    bool ok() const { return kernel_constants && psi_zero_preimage && cokernel_witness; }
};
FundamentalSequenceReport fundamental_sequence_checks(const Int& p, int M, long N,
                                                      unsigned long seed);

// mod-p section of the logarithmic derivative: given psi-fixed f over F_p,
// build g = prod (1 - alpha_m T^m) with Delta(g) = f mod (p, T^N)
Poly delta_preimage_modp(const Int& p, const Poly& f, long N);

}  // namespace zetap

#endif
