#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mnk/lattice.hpp"

using namespace mnk;
using namespace mnk::lattice;
using exact::Cyclotomic;

namespace {
Cyclotomic e(long p, long q) { return Cyclotomic::root_of_unity(rat_mod1(make_rat(p, q))); }
}  // namespace

TEST_CASE("type literals") {
    const NHType t = NHType::parse("4|2+");
    CHECK(t.n == 4);
    CHECK(t.h == 2);
    CHECK(t.sign == 1);
    CHECK(t.str() == "4|2+");
    CHECK(NHType::parse("3-").h == 1);
    CHECK_THROWS_AS(NHType::parse("4|3+"), std::invalid_argument);
    CHECK_THROWS_AS(NHType::parse("x"), std::invalid_argument);
}

TEST_CASE("trivial discriminant form") {
    const DiscriminantForm d = build_discriminant(NHType::parse("1|1+"));
    CHECK(d.group.order() == 1);
    CHECK(d.rho.at({0, 0}) == Cyclotomic::one());
}

TEST_CASE("2|1+ by direct formula") {
    const DiscriminantForm d = build_discriminant(NHType::parse("2|1+"));
    CHECK(d.group.factors() == std::vector<long>{2, 2});
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            CHECK(d.rho.at({a, b}) == e(a * b - a * a, 2));
    CHECK(abgrp::is_quadratic(d.rho));
}

TEST_CASE("4|2+ discriminant group and the 4B polar phase") {
    const DiscriminantForm d = build_discriminant(NHType::parse("4|2+"));
    // |A| = n^2 = 16 with the invariant-factor shape Z/4 x Z/4
    CHECK(d.group.factors() == std::vector<long>{4, 4});
    CHECK(d.group.order() == 16);
    CHECK(d.rho.at({1, 0}) == e(-1, 8));
    CHECK(d.rho_bar.at({1, 0}) == e(1, 8));
}

TEST_CASE("rho is quadratic, |A| = n^2, rho*rho_bar = 1 across the table") {
    for (long n = 1; n <= 12; ++n)
        for (long h = 1; h <= n && h <= 4; ++h) {
            if (n % h != 0 || 24 % h != 0) continue;
            for (int sign : {+1, -1}) {
                const DiscriminantForm d = build_discriminant({n, h, sign});
                CHECK(d.group.order() == n * n);
                CHECK(abgrp::is_quadratic(d.rho));
                CHECK(abgrp::is_quadratic(d.rho_bar));
                for (long i = 0; i < d.group.order(); ++i) {
                    const auto el = d.group.unrank(i);
                    CHECK(d.rho.at(el) * d.rho_bar.at(el) == Cyclotomic::one());
                }
            }
        }
}

TEST_CASE("conformal weights through the coset section match rho_bar") {
    // the ambient norm on II_{1,1}(-1/nh) is (x,y) -> -xy/nh; its exponential
    // pulled back along (a,b) -> (a, bh -+ a) must be rho_bar
    for (const char* lit : {"2|1+", "3|1-", "4|2+", "4|2-", "6|2+", "12|4-"}) {
        const NHType t = NHType::parse(lit);
        const DiscriminantForm d = build_discriminant(t);
        const long nh = t.n * t.h;
        for (long i = 0; i < d.group.order(); ++i) {
            const auto el = d.group.unrank(i);
            const auto [x, y] = d.section(el);
            CHECK(d.rho_bar.at(el) == e(-x * y, nh));
            CHECK(d.rho.at(el) == e(x * y, nh));
        }
    }
}

TEST_CASE("shear identities") {
    CHECK(shear_check(NHType::parse("2|1+")));
    CHECK(shear_check(NHType::parse("3|1-")));
    CHECK(shear_check(NHType::parse("4|2-")));
    CHECK(shear_check(NHType::parse("4|2+")));
    CHECK(shear_check(NHType::parse("6|1+")));
    CHECK_THROWS_AS(shear_check(NHType::parse("9|3+")), std::invalid_argument);
}

TEST_CASE("type addition") {
    const DiscriminantForm d4 = build_discriminant(NHType::parse("4|2+"));
    CHECK(type_sum_check(d4.rho, d4.rho_bar));  // product is identically 1
    const DiscriminantForm d2 = build_discriminant(NHType::parse("2|1+"));
    CHECK(type_sum_check(d2.rho, d2.rho));  // squares of quadratics stay quadratic
    abgrp::GroupFun triv(d2.group);
    CHECK(type_sum_check(triv, d2.rho));
    CHECK_THROWS_AS(type_sum_check(d2.rho, d4.rho), std::invalid_argument);
}
