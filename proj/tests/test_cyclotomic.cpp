#include <doctest.h>

#include <zetap/cyclotomic.hpp>
#include <zetap/lvalues.hpp>

#include <random>

using namespace zetap;

namespace {
CycloElement random_unit(std::mt19937_64& rng, const CycloRingPtr& R) {
    for (;;) {
        Poly c(R->degree());
        for (auto& x : c) x = Int(rng()) % R->ctx().pM;
        CycloElement e(R, std::move(c));
        if (e.is_unit()) return e;
    }
}
}  // namespace

TEST_CASE("Dirichlet character tables") {
    auto om = DirichletCharacter::teichmuller_power(5, 1);
    CHECK(om.order() == 4);
    CHECK(om.conductor() == 5);
    CHECK(om.is_odd());
    auto om2 = om.power(2);
    CHECK(om2.order() == 2);
    CHECK(om2.is_even());
    // omega(2) = teich(2) = 7 mod 25; omega^2(2) = -1
    CHECK(om.value_zp(2, 5, 2).unit_part() == 7);
    CHECK(Padic::agree_digits(om2.value_zp(2, 5, 4), embed_rational(Rat(-1), 5, 4)) >= 4);
    // multiplicativity chi(ab) = chi(a)chi(b) and chi(5k) = 0
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            Padic lhs = om.value_zp(a * b, 5, 4);
            Padic rhs = om.value_zp(a, 5, 4) * om.value_zp(b, 5, 4);
            CHECK(Padic::agree_digits(lhs, rhs) >= 4);
        }
    CHECK(om.value_zp(10, 5, 4).is_zero());

    auto eta4 = DirichletCharacter::quadratic(4);
    CHECK(eta4.conductor() == 4);
    CHECK(eta4.is_odd());
    CHECK(eta4.exponent_at(3) == 1);

    // product character mod 15 = quad(3) * omega, order 4, even
    auto theta = DirichletCharacter::quadratic(3).times(om);
    CHECK(theta.modulus() == 15);
    CHECK(theta.order() == 4);
    CHECK(theta.conductor() == 15);
    CHECK(theta.is_even());

    // an imprimitive table reduces to its conductor
    auto om0 = DirichletCharacter::teichmuller_power(5, 0);
    CHECK(om0.conductor() == 1);
    CHECK(om0.modulus() == 1);
}

TEST_CASE("ramified rings") {
    auto R = CycloRing::ramified(5, 1, 8);
    CHECK(R->degree() == 4);
    // Phi_5 = 1 + X + X^2 + X^3 + X^4
    CHECK((R->modulus() == Poly{1, 1, 1, 1, 1}));
    CHECK(R->root_order() == 5);

    // zeta^5 = 1, zeta != 1
    auto z = CycloElement::root_power(R, 1);
    CHECK(z.pow(5).equals_mod(CycloElement::one(R), 8));
    CHECK_FALSE(z.equals_mod(CycloElement::one(R), 1));

    // norm of (zeta - 1) is Phi_5(1) = 5
    Padic n = ring_norm(z - CycloElement::one(R));
    CHECK(Padic::agree_digits(n, Padic::from_int(5, 5, 8)) >= 7);

    auto R9 = CycloRing::ramified(3, 2, 6);
    CHECK(R9->degree() == 6);
    CHECK((R9->modulus() == Poly{1, 0, 0, 1, 0, 0, 1}));  // Phi_9 = X^6 + X^3 + 1
}

TEST_CASE("unramified rings via Hensel lifting") {
    // p=5, D=3: f = ord_3(5) = 2, so the lift of X^2+X+1 itself
    auto R = CycloRing::unramified(5, 3, 8);
    CHECK(R->degree() == 2);
    CHECK(R->residue_degree() == 2);
    auto z = CycloElement::root_power(R, 1);
    CHECK(z.pow(3).equals_mod(CycloElement::one(R), 8));
    CHECK_FALSE(z.equals_mod(CycloElement::one(R), 1));

    // p=7, D=3: 7 = 1 mod 3, so zeta_3 lives in Z_7 and the ring has degree 1
    auto R1 = CycloRing::unramified(7, 3, 8);
    CHECK(R1->degree() == 1);
    auto z3 = CycloElement::root_power(R1, 1);
    CHECK(z3.pow(3).equals_mod(CycloElement::one(R1), 8));
    CHECK_FALSE(z3.equals_mod(CycloElement::one(R1), 1));

    // the lifted modulus divides Phi_D mod p^M: the root satisfies Phi_D = 0,
    // and (zeta_D - 1) is a unit (norm divides D)
    for (auto& RR : {R, R1}) {
        auto zz = CycloElement::root_power(RR, 1);
        auto u = zz - CycloElement::one(RR);
        CHECK(u.is_unit());
        CHECK((u * u.inverse()).equals_mod(CycloElement::one(RR), 8));
    }

    // D = 4 at p = 5: zeta_4 in Z_5 (2^2 = -1 mod 5)
    auto R4 = CycloRing::unramified(5, 4, 6);
    CHECK(R4->degree() == 1);
    auto i4 = CycloElement::root_power(R4, 1);
    CHECK((i4 * i4).equals_mod(-CycloElement::one(R4), 6));
}

TEST_CASE("composite ring Z_5[zeta_15]") {
    auto R = CycloRing::composite(5, 3, 1, 8);
    CHECK(R->degree() == 8);  // f(3) * phi(5) = 2 * 4
    CHECK(R->root_order() == 15);
    CHECK(R->residue_degree() == 2);
    auto z = CycloElement::root_power(R, 1);
    CHECK(z.pow(15).equals_mod(CycloElement::one(R), 8));
    CHECK_FALSE(z.pow(5).equals_mod(CycloElement::one(R), 1));
    CHECK_FALSE(z.pow(3).equals_mod(CycloElement::one(R), 1));
    // zeta_5 and zeta_3 extracted by CRT exponents
    auto z5 = ring_root_of_unity(R, 5);
    CHECK(z5.pow(5).equals_mod(CycloElement::one(R), 8));
    CHECK_FALSE(z5.equals_mod(CycloElement::one(R), 1));
}

TEST_CASE("Gauss sums") {
    auto R = CycloRing::ramified(5, 1, 8);
    auto om2 = DirichletCharacter::teichmuller_power(5, 2);

    // G(chi) G(chi^{-1}) = chi(-1) p for conductor p; omega^2 is self-inverse
    // and even, so G^2 = 5
    auto g = gauss_sum(om2, R);
    CHECK((g * g).equals_mod(CycloElement::from_int(R, 5), 8));

    // G(chi) = chi(a) sum_c chi(c) eps^{ac} for unit a
    auto om = DirichletCharacter::teichmuller_power(5, 1);
    auto g1 = gauss_sum(om, R);
    auto vals = realize_character(om, R);
    for (long a : {2L, 3L, 4L}) {
        CycloElement s = CycloElement::zero(R);
        for (long c = 1; c <= 4; ++c) s = s + vals[c] * CycloElement::root_power(R, a * c);
        CHECK(g1.equals_mod(vals[a % 5] * s, 8));
    }

    // G(chi) G(chi^{-1}) = chi(-1) p for the odd character omega
    auto g1inv = gauss_sum(om.inverse(), R);
    CHECK((g1 * g1inv).equals_mod(CycloElement::from_int(R, -5), 8));

    CHECK(gauss_sum(DirichletCharacter::trivial(), R).equals_mod(CycloElement::one(R), 8));
}

TEST_CASE("ring Teichmuller and log_unit") {
    auto R = CycloRing::ramified(5, 1, 8);
    std::mt19937_64 rng(17);

    CHECK(log_unit(CycloElement::one(R)).is_zero());

    // log kills roots of unity: zeta_5 and Teichmuller constants
    auto z = CycloElement::root_power(R, 1);
    CHECK(log_unit(z).is_zero());
    auto t = ring_teichmuller(CycloElement::from_int(R, 2));
    CHECK(log_unit(t).is_zero());
    CHECK(t.pow(4).equals_mod(CycloElement::one(R), 8));

    // homomorphism on random units
    for (int i = 0; i < 10; ++i) {
        auto u = random_unit(rng, R);
        auto v = random_unit(rng, R);
        auto lhs = log_unit(u * v);
        auto rhs = log_unit(u) + log_unit(v);
        CHECK(lhs.equals_mod(rhs, std::min(lhs.prec(), rhs.prec())));
    }
}

TEST_CASE("theta-weighted log sums ignore root-of-unity ambiguity") {
    // sum_a theta^{-1}(a) log((1-zeta^a)/(1-zeta)) for theta = omega^2 is
    // unchanged when each unit is multiplied by a root of unity (the other
    // Teichmuller-lift convention)
    const int M = 8;
    auto R = CycloRing::ramified(5, 1, M);
    auto om2 = DirichletCharacter::teichmuller_power(5, 2);
    auto vals = realize_character(om2.inverse(), R);
    auto z = CycloElement::root_power(R, 1);

    CycloElement s1 = CycloElement::zero(R);
    CycloElement s2 = CycloElement::zero(R);
    int prec = M;
    for (long a = 1; a <= 4; ++a) {
        // (1 - zeta^a)/(1 - zeta) = 1 + zeta + ... + zeta^(a-1)
        CycloElement ca = CycloElement::zero(R);
        for (long i = 0; i < a; ++i) ca = ca + CycloElement::root_power(R, i);
        CHECK(ca.is_unit());
        auto l1 = log_unit(ca);
        auto l2 = log_unit(ca * CycloElement::root_power(R, a));  // twisted lift
        s1 = s1 + vals[a] * l1;
        s2 = s2 + vals[a] * l2;
        prec = std::min({prec, l1.prec(), l2.prec()});
    }
    CHECK(s1.equals_mod(s2, prec));
}
