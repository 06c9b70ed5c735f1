#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mnk/puiseux.hpp"

using namespace mnk;
using namespace mnk::fps;
using exact::Cyclotomic;

namespace {
PuiseuxSeries mono(long p, long q, long c, const Rat& trunc) {
    return PuiseuxSeries::monomial(make_rat(p, q), Cyclotomic::from_rational(c), trunc);
}
}  // namespace

TEST_CASE("binom_expand matches the falling-factorial formula") {
    // s = 1: 1 - x
    const PuiseuxSeries s1 = binom_expand(Rat(1), 3);
    CHECK(s1.coeff(Rat(0)).as_rational() == Rat(1));
    CHECK(s1.coeff(Rat(1)).as_rational() == Rat(-1));
    CHECK(s1.coeff(Rat(2)).as_rational() == Rat(0));
    // s = 1/2: 1 - x/2 - x^2/8
    const PuiseuxSeries sh = binom_expand(make_rat(1, 2), 2);
    CHECK(sh.coeff(Rat(1)).as_rational() == make_rat(-1, 2));
    CHECK(sh.coeff(Rat(2)).as_rational() == make_rat(-1, 8));
    // s = -1: geometric series
    const PuiseuxSeries g = binom_expand(Rat(-1), 3);
    for (long k = 0; k <= 3; ++k) CHECK(g.coeff(Rat(k)).as_rational() == Rat(1));
}

TEST_CASE("binom_expand(s) * binom_expand(-s) = 1 + O(x^{order+1})") {
    for (const Rat& s : {make_rat(1, 2), make_rat(-3, 4), make_rat(5, 3), Rat(2)}) {
        const PuiseuxSeries p = binom_expand(s, 6) * binom_expand(-s, 6);
        CHECK(p.coeff(Rat(0)).as_rational() == Rat(1));
        for (long k = 1; k <= 6; ++k) CHECK(p.coeff(Rat(k)).is_zero());
    }
}

TEST_CASE("multiplication is commutative and associative up to truncation") {
    std::mt19937 rng(42);
    auto rnd = [&]() {
        PuiseuxSeries s(make_rat(9, 2));
        for (int t = 0; t < 5; ++t) {
            const long q = 1 + rng() % 3;
            const long p = (long)(rng() % 12) - 3;
            s.add_term(make_rat(p, q), Cyclotomic::from_rational((long)(rng() % 5) - 2));
        }
        return s;
    };
    for (int trial = 0; trial < 25; ++trial) {
        const PuiseuxSeries a = rnd(), b = rnd(), c = rnd();
        const PuiseuxSeries ab_c = (a * b) * c;
        const PuiseuxSeries a_bc = a * (b * c);
        CHECK(a * b == b * a);
        // compare on the common validity range
        const Rat t = std::min(ab_c.truncation(), a_bc.truncation());
        CHECK(ab_c.truncated(t) == a_bc.truncated(t));
    }
}

TEST_CASE("inverse round trip") {
    PuiseuxSeries s(Rat(8));
    s.set(make_rat(-1, 3), Cyclotomic::from_rational(2));
    s.set(Rat(0), Cyclotomic::from_rational(-3));
    s.set(make_rat(5, 3), Cyclotomic::from_rational(1));
    const PuiseuxSeries inv = s.inverse();
    const PuiseuxSeries prod = s * inv;
    CHECK(prod.coeff(Rat(0)).as_rational() == Rat(1));
    for (const auto& [e, c] : prod.terms())
        if (!(e == Rat(0))) CHECK(c.is_zero());
}

TEST_CASE("truncation bookkeeping on sums and products") {
    const PuiseuxSeries a = mono(0, 1, 1, Rat(3));
    const PuiseuxSeries b = mono(1, 1, 1, Rat(10));
    CHECK((a + b).truncation() == Rat(3));
    // q^1 * (valid to 3) is valid to 4; min with the other side's 10 + 0
    CHECK((a * b).truncation() == Rat(4));
    CHECK_THROWS_AS(a.coeff(Rat(5)), std::out_of_range);
}

TEST_CASE("stretch rescales the exponent grid") {
    PuiseuxSeries s(Rat(4));
    s.set(Rat(2), Cyclotomic::one());
    const PuiseuxSeries t = s.stretch(make_rat(1, 2));
    CHECK(t.truncation() == Rat(2));
    CHECK(t.coeff(Rat(1)) == Cyclotomic::one());
}
