#include <doctest.h>

#include <zetap/padic.hpp>

#include <random>

using namespace zetap;

namespace {
Padic random_unit(std::mt19937_64& rng, const Int& p, int M) {
    Int pM = pow_int(p, static_cast<unsigned long>(M));
    Int u;
    do {
        u = Int(rng()) % pM;
    } while (u % p == 0);
    return Padic::from_unit(p, 0, u, M);
}
}  // namespace

TEST_CASE("embed_rational basics") {
    // 1/3 at p=5, M=2: 3*17 = 51 = 1 mod 25
    Padic x = embed_rational(Rat(1, 3), 5, 2);
    CHECK(x.valuation() == 0);
    CHECK(x.unit_part() == 17);

    CHECK(embed_rational(Rat(0), 5, 4).is_zero());

    // -31/30 at p=5: v = -1, unit = image of -31/6 (24 mod 25)
    Padic y = embed_rational(Rat(-31, 30), 5, 4);
    CHECK(y.valuation() == -1);
    CHECK(y.unit_part() % 25 == 24);
    // and it multiplies back
    Padic z = y * embed_rational(Rat(30), 5, 4);
    CHECK(Padic::agree_digits(z, embed_rational(Rat(-31), 5, 4)) >= 4);
}

TEST_CASE("embed_rational is a ring homomorphism") {
    std::mt19937_64 rng(7);
    const Int p = 7;
    for (int i = 0; i < 50; ++i) {
        long a = static_cast<long>(rng() % 2000) - 1000;
        long b = static_cast<long>(rng() % 2000) - 1000;
        long c = static_cast<long>(rng() % 500) + 1;
        long d = static_cast<long>(rng() % 500) + 1;
        Rat q1(a, c), q2(b, d);
        Padic s = embed_rational(q1 + q2, p, 8);
        Padic t = embed_rational(q1, p, 8) + embed_rational(q2, p, 8);
        CHECK(Padic::agree_abs(s, t, std::min(s.abs_prec(), t.abs_prec())));
        Padic u = embed_rational(q1 * q2, p, 8);
        Padic v = embed_rational(q1, p, 8) * embed_rational(q2, p, 8);
        CHECK(Padic::agree_abs(u, v, std::min(u.abs_prec(), v.abs_prec())));
        // v_p additive under multiplication
        if (q1 != 0 && q2 != 0) CHECK(vp(q1 * q2, p) == vp(q1, p) + vp(q2, p));
    }
}

TEST_CASE("ring laws at declared precision") {
    std::mt19937_64 rng(11);
    for (const long pl : {3L, 5L, 7L}) {
        Int p(pl);
        for (int i = 0; i < 40; ++i) {
            Padic a = random_unit(rng, p, 10);
            Padic b = random_unit(rng, p, 10);
            Padic c = random_unit(rng, p, 10);
            Padic lhs = (a + b) * c;
            Padic rhs = a * c + b * c;
            CHECK(Padic::agree_abs(lhs, rhs, std::min(lhs.abs_prec(), rhs.abs_prec())));
            Padic as = (a * b) * c;
            Padic bs = a * (b * c);
            CHECK(Padic::agree_abs(as, bs, std::min(as.abs_prec(), bs.abs_prec())));
        }
    }
}

TEST_CASE("teichmuller") {
    // teich(2) mod 25 is 7: 7 = 2 mod 5 and 7^4 = 1 mod 25
    Padic t = teichmuller(Padic::from_int(2, 5, 2));
    CHECK(t.unit_part() == 7);
    CHECK(teichmuller(Padic::from_int(1, 5, 6)).unit_part() == 1);
    Padic m1 = embed_rational(Rat(-1), 5, 6);
    CHECK(Padic::agree_digits(teichmuller(m1), m1) >= 6);

    CHECK_THROWS_AS(teichmuller(Padic::from_int(5, 5, 4)), NotAUnit);

    std::mt19937_64 rng(3);
    for (const long pl : {3L, 5L, 7L}) {
        Int p(pl);
        for (int i = 0; i < 25; ++i) {
            Padic x = random_unit(rng, p, 8);
            Padic w = teichmuller(x);
            // w^(p-1) = 1 and w = x mod p
            CHECK(Padic::agree_digits(w.pow(pl - 1), Padic::from_int(1, p, 8)) >= 8);
            CHECK(Padic::agree_abs(w, x, 1));
            // x = teich(x) * angle(x) exactly at precision
            Padic prod = w * angle(x);
            CHECK(Padic::agree_digits(prod, x) >= 8);
        }
    }
}

TEST_CASE("angle") {
    // <2> at p=5: 2/7 = 2*18 = 36 = 11 mod 25, and 11 = 1 mod 5
    Padic a = angle(Padic::from_int(2, 5, 2));
    CHECK(a.unit_part() == 11);
    CHECK(angle(Padic::from_int(1, 5, 4)).unit_part() == 1);
    // 6 is in 1+5Z_5, so omega(6) = 1 and <6> = 6
    Padic s = angle(Padic::from_int(6, 5, 4));
    CHECK(Padic::agree_digits(s, Padic::from_int(6, 5, 4)) >= 4);
}

TEST_CASE("padic_log basics and frozen value") {
    CHECK(padic_log(Padic::from_int(1, 5, 6)).is_zero());

    // log(6) = 5 - 25/2 + 125/3 = 555 mod 5^4
    Padic l = padic_log(Padic::from_int(6, 5, 4));
    CHECK(l.valuation() == 1);
    CHECK(Padic::agree_abs(l, Padic::from_int(555, 5, 4), 4));

    CHECK_THROWS_AS(padic_log(Padic::from_int(2, 5, 4)), NotPrincipalUnit);
}

TEST_CASE("padic_log homomorphism") {
    std::mt19937_64 rng(5);
    for (const long pl : {3L, 5L, 7L}) {
        Int p(pl);
        for (int i = 0; i < 20; ++i) {
            Int pM = pow_int(p, 8);
            Int ux = 1 + p * (Int(rng()) % (pM / p));
            Int uy = 1 + p * (Int(rng()) % (pM / p));
            Padic x = Padic::from_unit(p, 0, ux, 8);
            Padic y = Padic::from_unit(p, 0, uy, 8);
            Padic lhs = padic_log(x * y);
            Padic rhs = padic_log(x) + padic_log(y);
            CHECK(Padic::agree_abs(lhs, rhs, 8));
        }
    }
}

TEST_CASE("padic_exp") {
    Padic e0 = padic_exp(Padic::zero(5, 6));
    CHECK(Padic::agree_digits(e0, Padic::from_int(1, 5, 6)) >= 6);

    // exp(log(1+p)) = 1+p
    for (const long pl : {3L, 5L, 7L}) {
        Int p(pl);
        Padic x = Padic::from_int(1 + pl, p, 9);
        Padic rt = padic_exp(padic_log(x));
        CHECK(Padic::agree_abs(rt, x, 9));
    }

    CHECK_THROWS_AS(padic_exp(Padic::from_int(2, 5, 4)), OutsideConvergenceDisk);

    // exp(a+b) = exp(a)exp(b) on pZ_p
    std::mt19937_64 rng(13);
    for (const long pl : {3L, 7L}) {
        Int p(pl);
        for (int i = 0; i < 20; ++i) {
            Int pM = pow_int(p, 8);
            Padic a = Padic::from_int(p * (Int(rng()) % (pM / p)), p, 8);
            Padic b = Padic::from_int(p * (Int(rng()) % (pM / p)), p, 8);
            Padic lhs = padic_exp(a + b);
            Padic rhs = padic_exp(a) * padic_exp(b);
            CHECK(Padic::agree_abs(lhs, rhs, std::min(lhs.abs_prec(), rhs.abs_prec())));
        }
    }
}

TEST_CASE("padic_power") {
    Int p(5);
    Padic x = Padic::from_int(6, p, 8);
    // x^0 = 1
    CHECK(Padic::agree_digits(padic_power(x, Padic::zero(p, 8)), Padic::from_int(1, p, 8)) >= 8);
    // x^2 = x*x
    Padic sq = padic_power(x, Padic::from_int(2, p, 8));
    CHECK(Padic::agree_abs(sq, x * x, 8));
    // (1+p)^(1/2) squares back to 1+p
    Padic half = embed_rational(Rat(1, 2), p, 8);
    Padic r = padic_power(Padic::from_int(6, p, 8), half);
    CHECK(Padic::agree_abs(r * r, Padic::from_int(6, p, 8), 8));
}

TEST_CASE("precision bookkeeping") {
    Int p(5);
    // addition with cancellation reduces to an approximate zero
    Padic a = Padic::from_int(30, p, 4);
    Padic b = Padic::from_int(-30, p, 4);
    CHECK((a + b).is_zero());
    // division keeps relative precision; log records loss through valuation
    Padic q = Padic::from_int(7, p, 6) / Padic::from_int(3, p, 4);
    CHECK(q.rel_prec() == 4);
    // digit string round-trips the unit part (little-endian base p)
    Padic d = Padic::from_int(17, p, 3);
    CHECK(d.digit_string() == "230");
}
