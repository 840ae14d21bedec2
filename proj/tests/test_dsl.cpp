#include "doctest.h"

#include <random>

#include "ramres/dsl.hpp"
#include "ramres/gen.hpp"
#include "ramres/golden.hpp"

using namespace ramres;

TEST_CASE("series grammar") {
    auto q = Ring::rationals();
    PuiseuxSeries s = parse_series("t^-2 + 3*t + 1/2*t^3", q);
    CHECK(s.coeff_at(Frac(-2)).is_one());
    CHECK(s.coeff_at(Frac(1)) == AuxPoly::constant(q, s.ctx(), Scalar::from_int(q, 3)));
    CHECK(s.coeff_at(Frac(3)) == AuxPoly::constant(q, s.ctx(), Scalar::from_fraction(q, 1, 2)));
    CHECK(render_series(s) == "t^-2 + 3*t + 1/2*t^3");

    PuiseuxSeries frac = parse_series("t^1/2 - t^3/2", q);
    CHECK(frac.denom() == 2);
    CHECK(frac.coeff_at(Frac(3, 2)) == AuxPoly::from_int(q, frac.ctx(), -1));

    CHECK(parse_series("-2", q).coeff_at(Frac(0)) == AuxPoly::from_int(q, VarContext::constants(), -2));
}

TEST_CASE("matrix grammar and tagging") {
    auto q = Ring::rationals();
    SeriesMatrix sl = parse_matrix("[[t^-1, 1],[0, t]]", q);
    CHECK(sl.tag() == GroupTag::SL);
    CHECK(sl.n() == 2);
    SeriesMatrix gl = parse_matrix("[[t, 1],[0, t]]", q);
    CHECK(gl.tag() == GroupTag::GL);
    SeriesMatrix one = parse_matrix("[[t^-3]]", q);
    CHECK(one.n() == 1);
}

TEST_CASE("syntax and dimension errors") {
    auto q = Ring::rationals();
    CHECK_THROWS_AS((void)parse_matrix("[[t, 1],[0]]", q), Error);
    CHECK_THROWS_AS((void)parse_matrix("[[t såsom]]", q), Error);
    CHECK_THROWS_AS((void)parse_matrix("[[0]]", q), Error);        // not invertible
    CHECK_THROWS_AS((void)parse_matrix("[[e]]", q), Error);        // e needs dual:q
    CHECK_THROWS_AS((void)parse_series("t^", q), Error);
    std::string big = "[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]";
    CHECK_THROWS_AS((void)parse_matrix(big, q), Error);
    try {
        (void)parse_matrix("[[t @]]", q);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::syntax_error);
        CHECK(std::string(e.what()).find("offset") != std::string::npos);
    }
}

TEST_CASE("round trip on random matrices") {
    std::mt19937_64 rng(808017);
    for (const auto& ring : {Ring::rationals(), Ring::prime_field(5),
                             Ring::dual_numbers(Ring::rationals()),
                             Ring::rational_function(Ring::prime_field(3), "a")}) {
        GenOptions opt;
        opt.n = 2;
        for (int i = 0; i < 10; ++i) {
            SeriesMatrix m = random_element_bounded(rng, ring, opt, 3);
            SeriesMatrix again = parse_matrix(render_matrix(m), ring);
            CHECK(again == m);
        }
    }
}

TEST_CASE("golden manifest is complete and green") {
    GoldenSummary sum = run_golden(false);
    for (const auto& [id, why] : sum.failures)
        MESSAGE(id, ": ", why);
    CHECK(sum.ok());
    CHECK(sum.total >= static_cast<int>(golden_manifest().size()));
}
