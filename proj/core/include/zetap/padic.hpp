#ifndef ZETAP_PADIC_HPP
#define ZETAP_PADIC_HPP

#include <zetap/bigint.hpp>
#include <zetap/errors.hpp>

#include <string>
#include <vector>

namespace zetap {

// Element of Q_p at fixed working precision, stored as p^v * u with the unit
// part u known modulo p^M (so the value is known modulo p^(v+M)).
//
// Zero is a flagged state: a value indistinguishable from 0 at absolute
// precision A is stored with zero flag set, v = A, u = 0, M = 0.
//
// Every arithmetic operation computes the precision it can actually
// guarantee; nothing is ever reported more precisely than that. Values are
// immutable and safe to share across threads.
class Padic {
  public:
    Padic() = default;

    static Padic zero(const Int& p, long abs_prec);
    // value p^v * u; u is reduced mod p^M and must be prime to p
    static Padic from_unit(const Int& p, long v, Int u, int M);
    static Padic from_int(const Int& n, const Int& p, int M);

    const Int& prime() const { return p_; }
    bool is_zero() const { return zero_; }
    long valuation() const;  // throws on zero (valuation only bounded below)
    // largest A with the value known mod p^A
    long abs_prec() const { return zero_ ? v_ : v_ + M_; }
    int rel_prec() const { return zero_ ? 0 : M_; }
    const Int& unit_part() const { return u_; }

    // canonical integer representative mod p^(abs_prec - v), scaled so that
    // lift() * p^v is the value; requires nonzero
    const Int& lift_unit() const { return u_; }

    Padic operator-() const;
    friend Padic operator+(const Padic& a, const Padic& b);
    friend Padic operator-(const Padic& a, const Padic& b);
    friend Padic operator*(const Padic& a, const Padic& b);
    friend Padic operator/(const Padic& a, const Padic& b);

    Padic inverse() const;
    Padic pow(long e) const;

    // reduce the stated relative precision to at most M digits
    Padic capped(int M) const;

    // true if a - b is 0 at absolute precision k (i.e. they agree mod p^k)
    static bool agree_abs(const Padic& a, const Padic& b, long k);
    // number of agreeing significant digits: v_p(a-b) - min(v(a), v(b));
    // returns a large value when the difference vanishes at full precision
    static long agree_digits(const Padic& a, const Padic& b);

    std::string to_string() const;
    // little-endian base-p digits of the unit part ("" for zero)
    std::string digit_string() const;

  private:
    Int p_ = 0;
    long v_ = 0;
    Int u_ = 0;
    int M_ = 0;
    bool zero_ = true;
    void normalize();
};

// image of num/den in Q_p: valuation v_p(num) - v_p(den), unit part mod p^M
Padic embed_rational(const Rat& q, const Int& p, int M);

// Teichmuller lift: the unique (p-1)th root of unity congruent to x mod p.
// Computed by iterating y <- y^p to stabilization mod p^M.
Padic teichmuller(const Padic& x);

// principal-unit part <x> = x / teichmuller(x), in 1 + pZ_p
Padic angle(const Padic& x);

// log on 1 + pZ_p (alternating series, truncated with the exact tail bound
// from v_p(n) growth); result valuation >= 1
Padic padic_log(const Padic& x);

// exp on pZ_p (series truncated via v_p(n!) = (n - s_p(n))/(p-1))
Padic padic_exp(const Padic& x);

// x^s = exp(s log x) for x in 1 + pZ_p, s in Z_p
Padic padic_power(const Padic& x, const Padic& s);

// binomial C(x, k) in Z_p via the falling factorial (integral for x in Z_p;
// the j! division costs v_p(k!) digits, tracked by the Padic arithmetic)
Padic padic_binomial(const Padic& x, long k);

}  // namespace zetap

#endif
