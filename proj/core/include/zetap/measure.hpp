#ifndef ZETAP_MEASURE_HPP
#define ZETAP_MEASURE_HPP

#include <zetap/cyclotomic.hpp>
#include <zetap/dirichlet.hpp>

#include <vector>

namespace zetap {

// A p-adic measure on Z_p, held through its truncated Amice/Mahler transform
// A(T) = sum_k a_k T^k with coefficients in a CycloRing (possibly the
// degree-1 Z_p ring). Internally both the T-basis and the U-basis (U = 1+T)
// coefficient vectors are kept; the change of basis is the exact Pascal
// triangle, so the two views are interchangeable polynomial data.
//
// Truncation contract: moments 0..N-1 are exact functions of the T-prefix
// (the operator d = (1+T)d/dT is triangular-plus-shift there). Operators that
// filter U-exponents (psi, coset restriction, character twists) approximate
// the operator on the underlying measure: coefficient j of the result is
// good to roughly (N - jp)/(p-1) digits. Pipelines that need full precision
// use the psi-eigenvector identities (restrict_eigen) instead, which are
// T-triangular and lose nothing.
//
// Measures are immutable after construction; all operators are pure.
class Measure {
  public:
    Measure(CycloRingPtr R, long N);  // zero
    static Measure from_t_coeffs(CycloRingPtr R, std::vector<CycloElement> t);
    static Measure from_u_coeffs(CycloRingPtr R, std::vector<CycloElement> u, long N);
    // transform given as a Z/p^M polynomial (ring must be the zp ring)
    static Measure from_series(const CycloRingPtr& R, const Poly& F, long N);

    // Dirac delta_a: transform (1+T)^a
    static Measure dirac_int(const CycloRingPtr& R, const Int& a, long N);
    static Measure dirac(const CycloRingPtr& R, const Padic& a, long N);

    const CycloRingPtr& ring() const { return R_; }
    long degree() const { return N_; }
    int prec() const { return Mprec_; }
    bool unit_supported() const { return unit_supported_; }
    Measure flagged_unit_supported() const;

    const std::vector<CycloElement>& t_coeffs() const { return t_; }
    const std::vector<CycloElement>& u_coeffs() const { return u_; }
    const CycloElement& t_coeff(long k) const { return t_.at(k); }

    // moment(k) = (d^k A)(0) = sum_m u_m m^k, exact for k < N
    CycloElement moment(long k) const;

    Measure truncated(long N) const;
    Measure with_prec(int M) const;

    friend Measure operator+(const Measure& a, const Measure& b);
    friend Measure operator-(const Measure& a, const Measure& b);
    Measure operator-() const;
    Measure scaled(const CycloElement& c) const;
    Measure scaled_int(const Int& c) const;

    bool equals_mod(const Measure& o, int digits, long upto_degree = -1) const;
    bool is_zero_mod(int digits, long upto_degree = -1) const;

  private:
    Measure() = default;
    CycloRingPtr R_;
    long N_ = 0;
    int Mprec_ = 0;
    bool unit_supported_ = false;
    std::vector<CycloElement> t_, u_;
};

// Mahler coefficients of a polynomial (exact): a_k = phi^[k](0) through
// iterated discrete differencing, phi given by rational coefficients
std::vector<Rat> mahler_coefficients(const std::vector<Rat>& phi, long count);

// x mu: transform (1+T) dA/dT (output degree N-1)
Measure mult_by_x(const Measure& mu);

// z^x mu for v(z-1) > 0: U-diagonal c_m -> z^m c_m
Measure mult_by_zx(const Measure& mu, const CycloElement& z);

// sigma_a for an integer unit a: A((1+T)^a - 1)
Measure act_sigma(const Measure& mu, const Int& a);
// sigma_a for a p-adic unit (binomial series; pass a with raised precision)
Measure act_sigma(const Measure& mu, const Padic& a);

// phi: A((1+T)^p - 1); exact (T-triangular after the U-degree extension)
Measure frobenius_phi(const Measure& mu);

// psi: U-exponent filter (keep p | m, divide by p); output degree ceil(N/p)
Measure trace_psi(const Measure& mu);

// Res_{Z_p^x} = 1 - phi psi
Measure restrict_to_units(const Measure& mu);

// (1 - lambda phi) mu: exact replacement for restrict_to_units when
// psi(mu) = lambda mu (checked by the caller or by tests)
Measure restrict_eigen(const Measure& mu, const CycloElement& lambda);

// restriction to b + p^n Z_p (U-exponent filter)
Measure restrict_to_coset(const Measure& mu, const Int& b, int n);

// additive convolution: product of transforms
Measure convolve_additive(const Measure& a, const Measure& b);

// chi-twist, path (i): Gauss-sum formula over a ring containing mu_{p^n} and
// the character values; divides by G(chi^{-1}) via chi(-1) G(chi)/p^n
Measure twist_by_character_gauss(const Measure& mu, const DirichletCharacter& chi,
                                 const CycloRingPtr& big_ring);
// chi-twist, path (ii): direct U-exponent weighting c_m -> chi(m) c_m
Measure twist_by_character_coset(const Measure& mu, const DirichletCharacter& chi);

// (mu + sign * sigma_{-1} mu)/2
Measure plus_minus_project(const Measure& mu, int sign);

// embed a Z_p-ring measure into a bigger ring
Measure embed_measure(const Measure& mu, const CycloRingPtr& R);

}  // namespace zetap

#endif
