#ifndef ZETAP_CYCLO_RATIONAL_HPP
#define ZETAP_CYCLO_RATIONAL_HPP

#include <zetap/bigint.hpp>
#include <zetap/errors.hpp>

#include <memory>
#include <vector>

namespace zetap {

// Exact arithmetic in Q(zeta_d) = Q[x]/Phi_d(x) for small d. This is oracle
// machinery: values of Dirichlet characters and twisted Bernoulli numbers are
// computed here in exact rationals, never p-adically.

// cyclotomic polynomial Phi_d, integer coefficients, ascending degree
std::vector<Int> cyclotomic_polynomial(unsigned long d);

class CycloRatField;
using CycloRatFieldPtr = std::shared_ptr<const CycloRatField>;

class CycloRatField : public std::enable_shared_from_this<CycloRatField> {
  public:
    static CycloRatFieldPtr make(unsigned long d);

    unsigned long order() const { return d_; }
    unsigned long degree() const { return phi_.size() - 1; }
    const std::vector<Int>& modulus() const { return phi_; }

  private:
    explicit CycloRatField(unsigned long d);
    unsigned long d_;
    std::vector<Int> phi_;
};

class CycloRat {
  public:
    CycloRat() = default;
    CycloRat(CycloRatFieldPtr F, std::vector<Rat> coords);

    static CycloRat from_rat(const CycloRatFieldPtr& F, const Rat& q);
    // class of x^k (k reduced mod d)
    static CycloRat root_power(const CycloRatFieldPtr& F, long k);

    const CycloRatFieldPtr& field() const { return F_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const;  // throws if not rational

    friend CycloRat operator+(const CycloRat& a, const CycloRat& b);
    friend CycloRat operator-(const CycloRat& a, const CycloRat& b);
    friend CycloRat operator*(const CycloRat& a, const CycloRat& b);
    CycloRat scaled(const Rat& q) const;

    bool operator==(const CycloRat& o) const;

  private:
    CycloRatFieldPtr F_;
    std::vector<Rat> coords_;  // length = degree of Phi_d
};

}  // namespace zetap

#endif
