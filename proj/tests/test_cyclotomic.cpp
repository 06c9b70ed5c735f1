#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mnk/cyclotomic.hpp"

using mnk::Int;
using mnk::Rat;
using mnk::make_rat;
using mnk::exact::Cyclotomic;

namespace {
Cyclotomic e(long p, long q) { return Cyclotomic::root_of_unity(make_rat(p, q)); }
}  // namespace

TEST_CASE("roots of unity reduce to the canonical basis") {
    CHECK(e(0, 1) == Cyclotomic::one());
    CHECK(e(1, 2) == Cyclotomic::from_rational(-1));
    CHECK(e(2, 4) == Cyclotomic::from_rational(-1));
    // e(1/3) cubed is 1
    Cyclotomic z = e(1, 3);
    CHECK(z * z * z == Cyclotomic::one());
    CHECK(z * z == e(2, 3));
    // cancellation of inverse pair
    CHECK(e(1, 7) * e(-1, 7) == Cyclotomic::one());
    CHECK(e(1, 4) + e(3, 4) == Cyclotomic::zero());
}

TEST_CASE("sum of all 5th roots of unity vanishes") {
    // oracle: minimal-polynomial reduction collapses 1 + z + z^2 + z^3 + z^4
    Cyclotomic s;
    for (long k = 0; k < 5; ++k) s += e(k, 5);
    CHECK(s.is_zero());
    Cyclotomic s24;
    for (long k = 0; k < 24; ++k) s24 += e(k, 24);
    CHECK(s24.is_zero());
}

TEST_CASE("exponent addition law on denominators up to 24") {
    for (long q1 = 1; q1 <= 24; ++q1)
        for (long p1 = 0; p1 < q1; ++p1) {
            // a coarse sweep of the second factor keeps the case count sane
            for (long q2 : {2L, 3L, 8L, 24L})
                for (long p2 = 0; p2 < q2; p2 += (q2 > 3 ? 3 : 1)) {
                    CHECK(e(p1, q1) * e(p2, q2) ==
                          Cyclotomic::root_of_unity(make_rat(p1, q1) + make_rat(p2, q2)));
                }
        }
}

TEST_CASE("is_root_of_unity recognizes hidden roots") {
    CHECK(*Cyclotomic::from_rational(-1).as_root_of_unity() == make_rat(1, 2));
    CHECK(*e(1, 8).as_root_of_unity() == make_rat(1, 8));
    // 1 + e(1/3) = -e(2/3) = e(1/6): a two-term canonical form that is a root
    const Cyclotomic x = Cyclotomic::one() + e(1, 3);
    REQUIRE(x.as_root_of_unity());
    CHECK(*x.as_root_of_unity() == make_rat(1, 6));
    // |1 + e(1/5)|^2 = 2 + 2cos(72) != 1, so not a root of unity
    const Cyclotomic y = Cyclotomic::one() + e(1, 5);
    CHECK((y * y.conj()) != Cyclotomic::one());
    CHECK(!y.as_root_of_unity());
    CHECK(!(e(1, 3) + e(1, 3)).as_root_of_unity());
    CHECK(!Cyclotomic::zero().as_root_of_unity());
}

TEST_CASE("field axioms on random small elements") {
    std::mt19937 rng(20240817);
    auto rnd = [&]() {
        Cyclotomic x;
        const long terms = 1 + rng() % 3;
        for (long t = 0; t < terms; ++t) {
            const long q = 1 + rng() % 12;
            const long p = rng() % q;
            const long num = (long)(rng() % 7) - 3;
            x += e(p, q).scaled(Rat(num));
        }
        return x;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Cyclotomic a = rnd(), b = rnd(), c = rnd();
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Cyclotomic::one());
        }
    }
}

TEST_CASE("canonicalization is idempotent under round trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const long q = 1 + rng() % 24;
        const long p = rng() % (q + 3);  // may exceed q: normalization mod 1
        const Cyclotomic x = Cyclotomic::root_of_unity(make_rat(p, q));
        const Cyclotomic y = Cyclotomic::root_of_unity(mnk::rat_mod1(make_rat(p, q)));
        CHECK(x == y);
        CHECK(Cyclotomic::parse(x.str()) == x);
    }
}

TEST_CASE("textual grammar round trip") {
    const Cyclotomic x =
        Cyclotomic::from_rational(make_rat(-3, 2)) + e(1, 3).scaled(make_rat(5, 7)) - e(5, 8);
    CHECK(Cyclotomic::parse(x.str()) == x);
    CHECK(Cyclotomic::parse("0") == Cyclotomic::zero());
    CHECK(Cyclotomic::parse("e(1/2)") == Cyclotomic::from_rational(-1));
    CHECK(Cyclotomic::parse("-e(1/4)") == e(3, 4));
    CHECK(Cyclotomic::parse("2 + 3*e(1/8)") == Cyclotomic::from_rational(2) + e(1, 8).scaled(Rat(3)));
    CHECK_THROWS_AS(Cyclotomic::parse("e(1/0)"), std::invalid_argument);
    CHECK_THROWS_AS(Cyclotomic::parse("7*"), std::invalid_argument);
}

TEST_CASE("galois conjugation and norms") {
    const Cyclotomic x = Cyclotomic::one() + e(1, 5).scaled(Rat(2));
    Cyclotomic prod = Cyclotomic::one();
    for (long t = 1; t < 5; ++t)
        if (std::gcd(t, 5L) == 1) prod *= x.galois(t);
    CHECK(prod.is_rational());  // full Galois product lands in Q
}
