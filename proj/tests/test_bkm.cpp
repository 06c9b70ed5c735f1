#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mnk/bkm.hpp"

using namespace mnk;
using namespace mnk::bkm;
using chars::Dataset;
using chars::PuiseuxSeries;
using exact::Cyclotomic;

namespace {
const Dataset& data() {
    static Dataset ds = Dataset::load(MNK_DATA_FILE);
    return ds;
}
}  // namespace

TEST_CASE("eigenspace multiplicities by hand DFT for 2A") {
    const Dataset& ds = data();
    const auto& rec = ds.at("2A");
    // q^{1/2} coefficients of F-hat_{1,0} and F-hat_{1,1} are 4372 and -4372;
    // the hand DFT gives (4372 + 4372)/2 at b = 1
    CHECK(eigenspace_mult(ds, rec, 1, 1, make_rat(1, 2), Rat(2)) == 4372);
    // polar slot: (1 + 1)/2 = 1
    CHECK(eigenspace_mult(ds, rec, 1, -1, make_rat(-1, 2), Rat(2)) == 1);
    // below the bottom of the spectrum everything vanishes
    CHECK(eigenspace_mult(ds, rec, 1, 0, make_rat(-3, 2), Rat(2)) == 0);
    // period in b at fixed weight
    CHECK(eigenspace_mult(ds, rec, 1, 1, make_rat(1, 2), Rat(2)) ==
          eigenspace_mult(ds, rec, 1, 1 + 2, make_rat(1, 2), Rat(2)));
}

TEST_CASE("1A table is the table of J coefficients") {
    const Dataset& ds = data();
    const RootMultTable t = mult_table(ds, ds.at("1A"), 4, 2);
    const PuiseuxSeries j = chars::expand_eta_combination(ds.at("1A").series, Rat(10));
    CHECK(t.at(0, 0) == 2);
    for (long a = 1; a <= 4; ++a)
        for (long b = -2; b <= 2; ++b) {
            const auto c = j.coeff(Rat(a * b)).as_rational();
            Int expect = a * b >= -1 && c ? Int(c->get_num()) : Int(0);
            CHECK(t.at(a, b) == expect);
        }
    CHECK(t.at(1, 1) == 196884);
    CHECK(t.at(1, -1) == 1);
}

TEST_CASE("2A and 2B tables: Fricke against non-Fricke") {
    const Dataset& ds = data();
    const RootMultTable a = mult_table(ds, ds.at("2A"), 2, 2);
    CHECK(a.at(1, -1) == 1);
    CHECK(a.at(1, 1) == 4372);
    CHECK(a.at(2, 1) == 96256);
    const RootMultTable b = mult_table(ds, ds.at("2B"), 2, 2);
    CHECK(b.at(1, -1) == 0);  // no pole in the twisted character
    CHECK(b.at(1, 0) == 24);
    CHECK(b.at(1, 1) == 4096);
}

TEST_CASE("all shipped tables have nonnegative integer entries") {
    const Dataset& ds = data();
    for (const auto& [name, rec] : ds.records()) {
        const RootMultTable t = mult_table(ds, rec, 4, std::min(2 * rec.level, 8L));
        CHECK(t.at(1, -1) == (rec.fricke ? 1 : 0));
        const TruncationReport rep = check_bkm_truncation(t);
        for (const auto& v : rep.violations) MESSAGE(name, ": ", v);
        CHECK(rep.ok());
        // root counts under the regular element grow monotonically
        for (size_t i = 1; i < rep.root_counts.size(); ++i)
            CHECK(rep.root_counts[i] >= rep.root_counts[i - 1]);
    }
}

TEST_CASE("a corrupted table is flagged for collinear real roots") {
    const Dataset& ds = data();
    RootMultTable t = mult_table(ds, ds.at("2A"), 2, 2);
    t.entries[{2, -2}] = 1;  // collinear with the real simple root (1,-1)
    const TruncationReport rep = check_bkm_truncation(t);
    CHECK(!rep.collinearity_ok);
    CHECK(!rep.ok());
}

TEST_CASE("non-integer DFT data aborts instead of rounding") {
    // a deliberately inconsistent record: fractional coefficient in the
    // eta combination makes the averaged dimension non-integral
    Dataset bad = Dataset::from_json_text(R"([
      {"class": "1A", "order": 1, "h": 1, "sign": "+", "fricke": true, "level": 1,
       "eta_terms": [{"coef": "1", "factors": {"1": -24}, "e4": {"1": 3}}],
       "add_const": "-744", "checksum": ["1","0","196884","21493760","864299970","20245856256","333202640600","4252023300096","44656994071935","401490886656000"]},
      {"class": "XX", "order": 2, "h": 1, "sign": "+", "fricke": true, "level": 2,
       "eta_terms": [{"coef": "1/3", "factors": {"1": 24, "2": -24}},
                      {"coef": "4096", "factors": {"2": 24, "1": -24}}],
       "add_const": "24", "powers": {"2": "1A"},
       "checksum": ["0","0","0","0","0","0","0","0","0","0"]}
    ])");
    CHECK_THROWS_AS(mult_table(bad, bad.at("XX"), 1, 1), std::domain_error);
}

TEST_CASE("denominator identity for the modular invariant") {
    const Dataset& ds = data();
    const DenominatorReport d2 = denominator_check_1A(ds, 2);
    CHECK(d2.ok);
    CHECK(d2.c0 == 0);  // anchored at degree 1
    const DenominatorReport d4 = denominator_check_1A(ds, 4);
    CHECK(d4.ok);
    // perturbing c(1) must break it, first at p^1 q^1
    const DenominatorReport bad = denominator_check_1A(ds, 4, 1);
    CHECK(!bad.ok);
    REQUIRE(bad.first_mismatch);
    CHECK(std::get<0>(*bad.first_mismatch) <= 1);
    CHECK_THROWS_AS(denominator_check_1A(ds, 9), std::invalid_argument);
}

TEST_CASE("hypothesis reports") {
    const Dataset& ds = data();
    for (const auto& [name, rec] : ds.records()) {
        const HypothesisReport rep = hypothesis_checks(ds, rec);
        for (const auto& [what, ok] : rep.checks)
            if (!ok) MESSAGE(name, " failed: ", what);
        CHECK(rep.ok());
    }
    // 4B carries the full polar-phase table
    const HypothesisReport rep4b = hypothesis_checks(ds, ds.at("4B"));
    CHECK(rep4b.checks.size() >= 8);
}
