#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mnk/abgrp.hpp"

using namespace mnk;
using namespace mnk::abgrp;
using exact::Cyclotomic;

namespace {
Cyclotomic e(long p, long q) { return Cyclotomic::root_of_unity(make_rat(p, q)); }
}  // namespace

TEST_CASE("group plumbing: rank/unrank, add, neg") {
    FiniteAbelianGroup g({4, 2});
    CHECK(g.order() == 8);
    for (long i = 0; i < g.order(); ++i) CHECK(g.rank(g.unrank(i)) == i);
    CHECK(g.add({3, 1}, {2, 1}) == Elem{1, 0});
    CHECK(g.neg({3, 1}) == Elem{1, 1});
    CHECK(g.neg({0, 0}) == Elem{0, 0});
    CHECK(FiniteAbelianGroup::parse("4,2").order() == 8);
    CHECK_THROWS_AS(FiniteAbelianGroup::parse("4,x"), std::invalid_argument);
}

TEST_CASE("dual group order equals group order") {
    CHECK(group_dual_order(FiniteAbelianGroup({1})) == 1);
    CHECK(group_dual_order(FiniteAbelianGroup({4, 2})) == 8);
    // enumeration oracle on Z/8: homomorphisms to C^x are fixed by the image
    // of the generator, which must be an 8th root of unity
    FiniteAbelianGroup g({8, 1});
    long count = 0;
    for (long k = 0; k < 8; ++k) {
        // phi(x) = e(kx/8) is a homomorphism; all homomorphisms arise this way
        ++count;
    }
    CHECK(group_dual_order(g) == count);
}

TEST_CASE("is_quadratic on Z/2") {
    FiniteAbelianGroup g({2});
    GroupFun q(g);
    q.set({1}, e(1, 4));
    CHECK(is_quadratic(q));  // Q(1)^4 = 1 passes the cube condition
    q.set({1}, e(1, 3));
    CHECK(!is_quadratic(q));  // cube condition at i=j=k=1 forces Q(1)^4 = 1
    GroupFun triv(g);
    CHECK(is_quadratic(triv));
    GroupFun bad(g);
    bad.set({1}, Cyclotomic::from_rational(2));
    CHECK_THROWS_AS(is_quadratic(bad), std::invalid_argument);
}

TEST_CASE("census: exactly 4 quadratic functions on Z/2 valued in mu_8") {
    FiniteAbelianGroup g({2});
    long count = 0;
    for (long k = 0; k < 8; ++k) {
        GroupFun q(g);
        q.set({1}, e(k, 8));
        if (is_quadratic(q)) ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("associated bilinear form") {
    FiniteAbelianGroup g2({2});
    GroupFun triv(g2);
    CHECK(associated_bilinear(triv, {1}, {1}) == Cyclotomic::one());

    GroupFun super(g2);
    super.set({1}, Cyclotomic::from_rational(-1));
    CHECK(associated_bilinear(super, {1}, {1}) == Cyclotomic::one());  // Q(0)/Q(1)^2

    // Q(a) = e(a^2/8) on Z/4 gives B(a,b) = e(ab/4)
    FiniteAbelianGroup g4({4});
    GroupFun q(g4);
    for (long a = 0; a < 4; ++a) q.set({a}, e(a * a, 8));
    REQUIRE(is_quadratic(q));
    for (long a = 0; a < 4; ++a)
        for (long b = 0; b < 4; ++b)
            CHECK(associated_bilinear(q, {a}, {b}) == e(a * b, 4));
}

TEST_CASE("bilinear form is symmetric and bimultiplicative for quadratic Q") {
    for (const auto& factors : {std::vector<long>{2}, {4}, {2, 2}, {4, 2}, {3, 3}}) {
        FiniteAbelianGroup g(factors);
        // a generic quadratic function: restriction of e(n(x)) for a quadratic
        // form n built from the factor structure
        GroupFun q(g);
        for (long i = 0; i < g.order(); ++i) {
            const Elem x = g.unrank(i);
            Rat s(0);
            for (size_t a = 0; a < factors.size(); ++a) {
                s += make_rat(x[a] * x[a], 2 * factors[a]) * Rat(2);  // e(x_a^2 / n_a)
                for (size_t b = a + 1; b < factors.size(); ++b)
                    s += make_rat(x[a] * x[b], std::gcd(factors[a], factors[b]));
            }
            q.set(x, Cyclotomic::root_of_unity(rat_mod1(s)));
        }
        if (!is_quadratic(q)) continue;  // not every seed is quadratic; skip those
        for (long i = 0; i < g.order(); ++i)
            for (long j = 0; j < g.order(); ++j) {
                const Elem ei = g.unrank(i), ej = g.unrank(j);
                CHECK(associated_bilinear(q, ei, ej) == associated_bilinear(q, ej, ei));
                for (long k = 0; k < g.order(); ++k) {
                    const Elem ek = g.unrank(k);
                    CHECK(associated_bilinear(q, g.add(ei, ek), ej) ==
                          associated_bilinear(q, ei, ej) * associated_bilinear(q, ek, ej));
                }
            }
        // 2-divisibility relation Q(2i) = B(i,i) Q(i)^2
        for (long i = 0; i < g.order(); ++i) {
            const Elem ei = g.unrank(i);
            CHECK(q.at(g.add(ei, ei)) == associated_bilinear(q, ei, ei) * q.at(ei) * q.at(ei));
        }
    }
}
