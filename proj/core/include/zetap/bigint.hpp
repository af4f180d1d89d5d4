#ifndef ZETAP_BIGINT_HPP
#define ZETAP_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace zetap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// p-adic valuation of a nonzero integer.
long vp(Int n, const Int& p);

// valuation of a rational (may be negative); q must be nonzero.
long vp(const Rat& q, const Int& p);

Int pow_int(Int base, unsigned long e);
Int pow_mod(Int base, Int e, const Int& mod);

// inverse of a mod m, requiring gcd(a, m) = 1
Int inv_mod(const Int& a, const Int& mod);

// canonical representative in [0, mod)
inline Int mod_reduce(const Int& a, const Int& mod) {
    Int r = a % mod;
    if (r < 0) r += mod;
    return r;
}

// exact binomial coefficient C(n, k) for integer n (possibly negative), k >= 0
Int binomial_exact(const Int& n, unsigned long k);

// multiplicative order of a mod n (requires gcd(a, n) = 1)
unsigned long mult_order(const Int& a, const Int& n);

bool is_prime_small(const Int& n);

std::string rat_to_string(const Rat& q);

}  // namespace zetap

#endif
