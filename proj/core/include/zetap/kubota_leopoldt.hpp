#ifndef ZETAP_KUBOTA_LEOPOLDT_HPP
#define ZETAP_KUBOTA_LEOPOLDT_HPP

#include <zetap/measure.hpp>

namespace zetap {

// Working sizes for an evaluation pipeline: internal digit count and series
// degree, computed backwards from the requested target precision and moment
// range. U-exponent filters cost roughly (N - kp)/(p-1) digits at moment k,
// and unit divisions a few more; both are budgeted here.
struct KLPlan {
    int M_work;
    long N;
};
KLPlan kl_plan(const Int& p, int M_target, long k_max, long min_N = 0);

// smallest primitive root a mod p with a^(p-1) != 1 mod p^2
long default_smoothing(const Int& p);
bool valid_smoothing(const Int& p, long a);

// F_a(T) = 1/T - a/((1+T)^a - 1) as a power series mod p^M, degree N
Poly f_a_series(const ModCtx& m, long a, long N);
// the measure mu_a with transform F_a
Measure build_mu_a(const CycloRingPtr& R, long a, long N);

// A pseudo-measure on Z_p^x: numerator measure supported on the units,
// smoothing parameter a (0 = genuine measure, no denominator) and twist
// shift t counting powers of x^{-1}. Evaluation against chi(x) x^k divides
// the twisted moment at k - t by (chi(a) a^k - 1).
class PseudoMeasure {
  public:
    PseudoMeasure(Measure num, long smoothing, int shift);

    const Measure& numerator() const { return num_; }
    long smoothing() const { return a_; }
    int shift() const { return t_; }
    const Int& prime() const { return num_.ring()->prime(); }

    // integral of chi(x) x^k; rejects the pole at (trivial, k=0)
    CycloElement eval_ring(const DirichletCharacter& chi, long k) const;
    Padic eval(const DirichletCharacter& chi, long k) const;
    // the undivided integral against the numerator, and theta_a's value
    CycloElement numerator_integral(const DirichletCharacter& chi, long k) const;
    Padic smoothing_denominator(const DirichletCharacter& chi, long k) const;

    // integral of chi_fin(x) omega(x)^j <x>^s (s integer or p-adic)
    Padic eval_mellin(const DirichletCharacter& chi_fin, long j, const Padic& s) const;
    Padic eval_mellin_int(const DirichletCharacter& chi_fin, long j, long s) const;

  private:
    Measure num_;
    long a_;
    int t_;
};

// the Kubota-Leopoldt pseudo-measure: x^{-1} Res_{Z_p^x}(mu_a) / theta_a
// (a = 0 picks the default smoothing)
PseudoMeasure build_zeta_p(const Int& p, int M, long N, long a = 0);

// zeta_eta for a primitive character eta of conductor D prime to p: a
// genuine measure over the unramified ring (twist shift 1, no smoothing)
PseudoMeasure build_zeta_eta(const DirichletCharacter& eta, const Int& p, int M, long N);
// the intermediate measure mu_eta (transform F_eta), for the psi-eigenvector
// and interpolation tests
Measure build_mu_eta(const DirichletCharacter& eta, const Int& p, int M, long N);

// analytic branches zeta_{p,i}(s) = int omega^i <x>^{1-s} zeta_p
Padic mellin_branch(int i, const Padic& s, const PseudoMeasure& zeta);

// L_p(theta, s) = int chi(x) <x>^{1-s} zeta_eta for theta = chi * eta
// (chi of p-power conductor, eta tame; eta trivial uses zeta_p)
Padic Lp_theta(const DirichletCharacter& chi, const PseudoMeasure& zeta_eta, const Padic& s);

// split theta into its p-power-conductor part and its tame part
void factor_character(const DirichletCharacter& theta, const Int& p, DirichletCharacter& chi_p,
                      DirichletCharacter& eta_tame);

// the value at s = 1 both ways: through the measure and through the
// Iwasawa-logarithm sum over roots of unity; theta must be even, nontrivial,
// of conductor p, D, or Dp
struct LpAtOne {
    Padic measure_path;
    Padic log_path;
    long agree_digits;
};
LpAtOne lp_at_one(const DirichletCharacter& theta, const Int& p, int M, long N);

// first coefficients of the Iwasawa power series of the omega^i-sector of
// theta_a * zeta_p (the series G with G(gamma^s - 1) = int omega^i <x>^s of
// the smoothed numerator), gamma = 1 + p; recovered by Newton interpolation
// at integer s
std::vector<Padic> zeta_branch_coeffs(const PseudoMeasure& zeta, int sector, int ncoeffs);

}  // namespace zetap

#endif
