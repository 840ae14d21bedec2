#include "doctest.h"

#include <random>

#include "ramres/matseries.hpp"

using namespace ramres;

namespace {

PuiseuxSeries tp(const RingPtr& r, const CtxPtr& c, long long e) { return PuiseuxSeries::t_power(r, c, Frac(e)); }
PuiseuxSeries z(const RingPtr& r, const CtxPtr& c) { return PuiseuxSeries::zero(r, c); }
PuiseuxSeries ci(const RingPtr& r, const CtxPtr& c, long long v) {
    return PuiseuxSeries::constant(r, c, Scalar::from_int(r, v));
}

SeriesMatrix rnd_sl2(std::mt19937_64& rng, const RingPtr& ring) {
    auto cc = VarContext::constants();
    std::uniform_int_distribution<int> e(-2, 2), v(-3, 3), pick(0, 2);
    SeriesMatrix m = SeriesMatrix::identity(GroupTag::SL, 2, ring, cc);
    for (int f = 0; f < 4; ++f) {
        int w = pick(rng);
        if (w < 2) {
            PuiseuxSeries x = PuiseuxSeries::monomial(ring, cc, AuxPoly::from_int(ring, cc, v(rng)), Frac(e(rng)));
            std::vector<PuiseuxSeries> ee = {ci(ring, cc, 1), w == 0 ? x : z(ring, cc),
                                             w == 1 ? x : z(ring, cc), ci(ring, cc, 1)};
            m = m * SeriesMatrix::make(GroupTag::SL, 2, std::move(ee), false);
        } else {
            long long k = e(rng);
            std::vector<PuiseuxSeries> ee = {tp(ring, cc, k), z(ring, cc), z(ring, cc), tp(ring, cc, -k)};
            m = m * SeriesMatrix::make(GroupTag::SL, 2, std::move(ee), false);
        }
    }
    return m;
}

} // namespace

TEST_CASE("adjugate of a 2x2") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    std::vector<PuiseuxSeries> e = {ci(q, cc, 1), ci(q, cc, 2), ci(q, cc, 3), ci(q, cc, 4)};
    SeriesMatrix m = SeriesMatrix::make(GroupTag::GL, 2, std::move(e), false);
    SeriesMatrix adj = m.adjugate();
    CHECK(adj.at(0, 0) == ci(q, cc, 4));
    CHECK(adj.at(0, 1) == ci(q, cc, -2));
    CHECK(adj.at(1, 0) == ci(q, cc, -3));
    CHECK(adj.at(1, 1) == ci(q, cc, 1));
}

TEST_CASE("determinants") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    CHECK(SeriesMatrix::identity(GroupTag::SL, 3, q, cc).det() == tp(q, cc, 0));
    // det [[t^a, P],[0, t^d]] = t^{a+d}
    std::vector<PuiseuxSeries> e = {tp(q, cc, 2), ci(q, cc, 1) + tp(q, cc, 5), z(q, cc), tp(q, cc, 3)};
    CHECK(SeriesMatrix::make(GroupTag::GL, 2, std::move(e)).det() == tp(q, cc, 5));
}

TEST_CASE("inverse of diagonal and triangular matrices") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    std::vector<PuiseuxSeries> d = {tp(q, cc, -1), z(q, cc), z(q, cc), tp(q, cc, 1)};
    SeriesMatrix m = SeriesMatrix::make(GroupTag::SL, 2, std::move(d));
    SeriesMatrix mi = m.inverse();
    CHECK(mi.at(0, 0) == tp(q, cc, 1));
    CHECK(mi.at(1, 1) == tp(q, cc, -1));

    // [[t,1],[0,t]] has the algebraically forced inverse [[t^-1, -t^-2],[0, t^-1]]
    std::vector<PuiseuxSeries> g = {tp(q, cc, 1), ci(q, cc, 1), z(q, cc), tp(q, cc, 1)};
    SeriesMatrix gm = SeriesMatrix::make(GroupTag::GL, 2, std::move(g));
    SeriesMatrix gi = gm.inverse();
    CHECK(gi.at(0, 0) == tp(q, cc, -1));
    CHECK(gi.at(0, 1) == -tp(q, cc, -2));
    CHECK(gi.at(1, 1) == tp(q, cc, -1));
    CHECK((gm * gi).agrees_with(SeriesMatrix::identity(GroupTag::GL, 2, q, cc)));

    // unipotent over dual numbers
    auto du = Ring::dual_numbers(Ring::rationals());
    PuiseuxSeries et = PuiseuxSeries::monomial(du, cc, AuxPoly::constant(du, cc, Scalar::epsilon(du)), Frac(-1));
    std::vector<PuiseuxSeries> u = {ci(du, cc, 1), et, z(du, cc), ci(du, cc, 1)};
    SeriesMatrix um = SeriesMatrix::make(GroupTag::SL, 2, std::move(u));
    SeriesMatrix ui = um.inverse();
    CHECK(ui.at(0, 1) == -et);
    CHECK(ui.at(0, 0) == ci(du, cc, 1));
}

TEST_CASE("gauge decomposition") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    // [[t, x],[0, t^-1]] -> d = 1, ug = [[t^2, x t],[0, 1]], det(ug) = t^2
    std::vector<PuiseuxSeries> e = {tp(q, cc, 1), ci(q, cc, 5), z(q, cc), tp(q, cc, -1)};
    SeriesMatrix m = SeriesMatrix::make(GroupTag::SL, 2, std::move(e));
    auto gd = m.gauge_decompose();
    CHECK(gd.d == 1);
    CHECK(gd.ug.at(0, 0) == tp(q, cc, 2));
    CHECK(gd.ug.at(0, 1) == ci(q, cc, 5) * tp(q, cc, 1));
    CHECK(gd.ug.det() == tp(q, cc, 2));
    // round trip
    SeriesMatrix back = gd.ug.map_entries([&](const PuiseuxSeries& s) { return s.shifted(Frac(-gd.d)); });
    CHECK(back == m);

    SeriesMatrix i3 = SeriesMatrix::identity(GroupTag::SL, 3, q, cc);
    CHECK(i3.gauge_decompose().d == 0);

    std::vector<PuiseuxSeries> dd = {tp(q, cc, -2), z(q, cc), z(q, cc), tp(q, cc, 2)};
    auto gd2 = SeriesMatrix::make(GroupTag::SL, 2, std::move(dd)).gauge_decompose();
    CHECK(gd2.d == 2);
    CHECK(gd2.ug.at(0, 0) == tp(q, cc, 0));
    CHECK(gd2.ug.at(1, 1) == tp(q, cc, 4));
}

TEST_CASE("integrality") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    std::vector<PuiseuxSeries> d = {tp(q, cc, 1), z(q, cc), z(q, cc), tp(q, cc, -1)};
    CHECK(!SeriesMatrix::make(GroupTag::SL, 2, std::move(d)).is_integral());
    std::vector<PuiseuxSeries> e = {ci(q, cc, 1) + tp(q, cc, 1), tp(q, cc, 2), z(q, cc), ci(q, cc, 1)};
    CHECK(SeriesMatrix::make(GroupTag::SL, 2, std::move(e), false).is_integral());
    // GL_1 with det t: integral entries but not an integral point of GL_1
    std::vector<PuiseuxSeries> g = {tp(q, cc, 1)};
    CHECK(!SeriesMatrix::make(GroupTag::GL, 1, std::move(g)).is_integral());
}

TEST_CASE("GL embeds into SL with det^{-1} block") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    std::vector<PuiseuxSeries> g = {tp(q, cc, -3)};
    SeriesMatrix m = SeriesMatrix::make(GroupTag::GL, 1, std::move(g));
    SeriesMatrix s = m.embed_gln_sln();
    CHECK(s.n() == 2);
    CHECK(s.tag() == GroupTag::SL);
    CHECK(s.at(0, 0) == tp(q, cc, -3));
    CHECK(s.at(1, 1) == tp(q, cc, 3));
    CHECK(s.at(0, 1).is_exact_zero());

    SeriesMatrix i2 = SeriesMatrix::identity(GroupTag::GL, 2, q, cc);
    CHECK(i2.embed_gln_sln() == SeriesMatrix::identity(GroupTag::SL, 3, q, cc));

    // [[t^a, P],[0, t^d]] embeds with (3,3) entry t^{-a-d}
    std::vector<PuiseuxSeries> e = {tp(q, cc, 2), ci(q, cc, 1), z(q, cc), tp(q, cc, 1)};
    SeriesMatrix em = SeriesMatrix::make(GroupTag::GL, 2, std::move(e)).embed_gln_sln();
    CHECK(em.at(2, 2) == tp(q, cc, -3));
}

TEST_CASE("gauge surmultiplicativity on random pairs") {
    std::mt19937_64 rng(2024);
    auto q = Ring::rationals();
    for (int i = 0; i < 25; ++i) {
        SeriesMatrix a = rnd_sl2(rng, q);
        SeriesMatrix b = rnd_sl2(rng, q);
        auto mat_gauge = [](const SeriesMatrix& m) {
            Frac g(1000000);
            bool any = false;
            for (int r = 0; r < m.n(); ++r)
                for (int c = 0; c < m.n(); ++c) {
                    if (m.at(r, c).raw_terms().empty()) continue;
                    any = true;
                    g = std::min(g, m.at(r, c).gauge(), [](const Frac& x, const Frac& y) { return x < y; });
                }
            REQUIRE(any);
            return g;
        };
        CHECK(mat_gauge(a * b) >= mat_gauge(a) + mat_gauge(b));
    }
}

TEST_CASE("adjugate identity on random matrices") {
    std::mt19937_64 rng(11);
    auto f5 = Ring::prime_field(5);
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    for (const auto& ring : {q, f5}) {
        for (int i = 0; i < 10; ++i) {
            SeriesMatrix m = rnd_sl2(rng, ring);
            SeriesMatrix adj = m.adjugate();
            PuiseuxSeries d = m.det();
            SeriesMatrix prod = m * adj;
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    if (r == c) CHECK(prod.at(r, c) == d);
                    else CHECK(prod.at(r, c).is_exact_zero());
                }
        }
        // and a 3x3 instance
        std::vector<PuiseuxSeries> e;
        for (int k = 0; k < 9; ++k)
            e.push_back(PuiseuxSeries::monomial(ring, cc, AuxPoly::from_int(ring, cc, (k * 7 + 3) % 5 - 2),
                                                Frac(k % 3 - 1)));
        SeriesMatrix m3 = SeriesMatrix::make(GroupTag::GL, 3, std::move(e), false);
        SeriesMatrix prod = m3 * m3.adjugate();
        PuiseuxSeries d = m3.det();
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                if (r == c) CHECK(prod.at(r, c) == d);
                else CHECK(prod.at(r, c).is_exact_zero());
            }
    }
}
