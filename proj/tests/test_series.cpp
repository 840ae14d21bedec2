#include "doctest.h"

#include <random>

#include "ramres/series.hpp"

using namespace ramres;

namespace {

PuiseuxSeries ts(const RingPtr& r, const CtxPtr& c, std::initializer_list<std::pair<long long, long long>> kv) {
    PuiseuxSeries s = PuiseuxSeries::zero(r, c);
    for (auto [e, v] : kv)
        s = s + PuiseuxSeries::monomial(r, c, AuxPoly::from_int(r, c, v), Frac(e));
    return s;
}

PuiseuxSeries rnd_laurent(std::mt19937_64& rng, const RingPtr& r, const CtxPtr& c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> e(lo, hi);
    std::uniform_int_distribution<int> v(-3, 3);
    PuiseuxSeries s = PuiseuxSeries::zero(r, c);
    for (int i = 0; i < 3; ++i)
        s = s + PuiseuxSeries::monomial(r, c, AuxPoly::from_int(r, c, v(rng)), Frac(e(rng)));
    return s;
}

} // namespace

TEST_CASE("laurent arithmetic stays exact") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    PuiseuxSeries tinv = PuiseuxSeries::t_power(q, cc, Frac(-1));
    PuiseuxSeries t = PuiseuxSeries::t_power(q, cc, Frac(1));
    PuiseuxSeries p = tinv * t;
    CHECK(p.exact());
    CHECK(p == PuiseuxSeries::t_power(q, cc, Frac(0)));
}

TEST_CASE("half-integral exponents multiply") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    PuiseuxSeries h = PuiseuxSeries::t_power(q, cc, Frac(0)) + PuiseuxSeries::t_power(q, cc, Frac(1, 2));
    PuiseuxSeries sq = h * h;
    PuiseuxSeries want = ts(q, cc, {{0, 1}, {1, 1}}) +
                         PuiseuxSeries::monomial(q, cc, AuxPoly::from_int(q, cc, 2), Frac(1, 2));
    CHECK(sq == want);
}

TEST_CASE("precision shifts through products") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    // (t^-1 + t + O(t^3)) * t = 1 + t^2 + O(t^4)
    PuiseuxSeries f = (PuiseuxSeries::t_power(q, cc, Frac(-1)) + PuiseuxSeries::t_power(q, cc, Frac(1)))
                          .truncated(Frac(3));
    PuiseuxSeries g = f * PuiseuxSeries::t_power(q, cc, Frac(1));
    CHECK(g.prec().has_value());
    CHECK(*g.prec() == Frac(4));
    CHECK(g.coeff_at(Frac(0)).is_one());
    CHECK(g.coeff_at(Frac(2)).is_one());
    CHECK(g.coeff_at(Frac(1)).is_zero());
    CHECK_THROWS_AS((void)g.coeff_at(Frac(5)), Error);
}

TEST_CASE("inversion: geometric series") {
    auto q = Ring::rationals();
    auto cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(q, cu, "u");
    // invert(1 + u t) to O(t^3) = 1 - u t + u^2 t^2
    PuiseuxSeries f = PuiseuxSeries::t_power(q, cu, Frac(0)) + PuiseuxSeries::monomial(q, cu, u, Frac(1));
    PuiseuxSeries inv = f.inverted(Frac(3));
    PuiseuxSeries want = PuiseuxSeries::t_power(q, cu, Frac(0)) - PuiseuxSeries::monomial(q, cu, u, Frac(1)) +
                         PuiseuxSeries::monomial(q, cu, u * u, Frac(2));
    CHECK(inv.agrees_with(want));
    CHECK(inv.prec().has_value());
    CHECK(*inv.prec() == Frac(3));
}

TEST_CASE("inversion: monomials and dual heads stay exact") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    PuiseuxSeries td = PuiseuxSeries::t_power(q, cc, Frac(4));
    CHECK(td.inverted() == PuiseuxSeries::t_power(q, cc, Frac(-4)));

    auto d = Ring::dual_numbers(Ring::rationals());
    PuiseuxSeries f = PuiseuxSeries::constant(d, cc, Scalar::one(d)) +
                      PuiseuxSeries::monomial(d, cc, AuxPoly::constant(d, cc, Scalar::epsilon(d)), Frac(-1));
    PuiseuxSeries inv = f.inverted(); // 1 - e/t, exactly
    CHECK(inv.exact());
    PuiseuxSeries want = PuiseuxSeries::constant(d, cc, Scalar::one(d)) -
                         PuiseuxSeries::monomial(d, cc, AuxPoly::constant(d, cc, Scalar::epsilon(d)), Frac(-1));
    CHECK(inv == want);
    CHECK((f * inv) == PuiseuxSeries::constant(d, cc, Scalar::one(d)));
}

TEST_CASE("inversion rejects genuine non-units") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    CHECK_THROWS_AS((void)PuiseuxSeries::zero(q, cc).inverted(), Error);
}

TEST_CASE("sigma substitution definition") {
    auto q = Ring::rationals();
    auto cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(q, cu, "u");
    // t -> t(1+u t^2) sends t to t + u t^3, exactly
    PuiseuxSeries t = PuiseuxSeries::t_power(q, VarContext::constants(), Frac(1));
    PuiseuxSeries s = t.subst_sigma(Frac(2), u);
    PuiseuxSeries want = PuiseuxSeries::t_power(q, cu, Frac(1)) + PuiseuxSeries::monomial(q, cu, u, Frac(3));
    CHECK(s.exact());
    CHECK(s == want);
}

TEST_CASE("sigma on negative exponents truncates honestly") {
    auto q = Ring::rationals();
    auto cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(q, cu, "u");
    // sigma_r(t^-1) = t^-1 - u t^{r-1} + u^2 t^{2r-1} - ...
    for (long long r : {1LL, 3LL}) {
        PuiseuxSeries f = PuiseuxSeries::t_power(q, VarContext::constants(), Frac(-1));
        PuiseuxSeries s = f.subst_sigma(Frac(r), u, Frac(2 * r + 2));
        CHECK(s.coeff_at(Frac(-1)).is_one());
        CHECK(s.coeff_at(Frac(r - 1)) == -u);
        CHECK(s.coeff_at(Frac(2 * r - 1)) == u * u);
    }
}

TEST_CASE("sigma over F_p kills inner binomials") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto fp = Ring::prime_field(p);
        auto cu = VarContext::u();
        AuxPoly u = AuxPoly::variable(fp, cu, "u");
        PuiseuxSeries f = PuiseuxSeries::t_power(fp, VarContext::constants(), -Frac(static_cast<long long>(p)));
        PuiseuxSeries s = f.subst_sigma(Frac(1), u, Frac(1));
        // t^-p (1+ut)^-p = t^-p - u^p + O(t^...)
        CHECK(s.coeff_at(-Frac(static_cast<long long>(p))).is_one());
        CHECK(s.coeff_at(Frac(0)) == -u.pow(p));
        for (long long k = 1 - static_cast<long long>(p); k < 0; ++k)
            CHECK(s.coeff_at(Frac(k)).is_zero());
    }
}

TEST_CASE("lambda rotation") {
    auto q = Ring::rationals();
    auto cl = VarContext::lambda();
    PuiseuxSeries f = PuiseuxSeries::t_power(q, VarContext::constants(), Frac(-3));
    PuiseuxSeries s = f.subst_lambda(cl, "l");
    CHECK(s == PuiseuxSeries::monomial(q, cl, AuxPoly::variable(q, cl, "l", -3), Frac(-3)));
    CHECK(PuiseuxSeries::t_power(q, VarContext::constants(), Frac(0)).subst_lambda(cl, "l") ==
          PuiseuxSeries::t_power(q, cl, Frac(0)));
    PuiseuxSeries g = ts(q, VarContext::constants(), {{2, 3}});
    CHECK(g.subst_lambda(cl, "l") ==
          PuiseuxSeries::monomial(q, cl, AuxPoly::variable(q, cl, "l", 2).scaled(Scalar::from_int(q, 3)), Frac(2)));
    PuiseuxSeries frac = PuiseuxSeries::t_power(q, VarContext::constants(), Frac(1, 2));
    CHECK_THROWS_AS((void)frac.subst_lambda(cl, "l"), Error);
}

TEST_CASE("lambda rotation at l=1 restores the series") {
    std::mt19937_64 rng(99);
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    auto cl = VarContext::lambda();
    for (int i = 0; i < 20; ++i) {
        PuiseuxSeries f = rnd_laurent(rng, q, cc);
        PuiseuxSeries rot = f.subst_lambda(cl, "l");
        PuiseuxSeries back = PuiseuxSeries::zero(q, cc);
        for (const auto& [k, c] : rot.raw_terms())
            back = back + PuiseuxSeries::monomial(
                              q, cc, AuxPoly::constant(q, cc, c.specialize({{"l", Scalar::one(q)}})), Frac(k));
        CHECK(back == f);
    }
}

TEST_CASE("power substitution") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    CHECK(PuiseuxSeries::t_power(q, cc, Frac(-1)).subst_power(2) == PuiseuxSeries::t_power(q, cc, Frac(-2)));
    PuiseuxSeries f = ts(q, cc, {{0, 1}, {1, 1}});
    CHECK(f.subst_power(3) == ts(q, cc, {{0, 1}, {3, 1}}));
    PuiseuxSeries g = f.truncated(Frac(2)).subst_power(2);
    CHECK(*g.prec() == Frac(4));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        PuiseuxSeries h = rnd_laurent(rng, q, cc);
        CHECK(h.subst_power(2).subst_power(3) == h.subst_power(6));
    }
}

TEST_CASE("gauge and t=0 specialization") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    CHECK(ts(q, cc, {{-3, 1}, {0, 1}}).gauge() == Frac(-3));
    CHECK(PuiseuxSeries::t_power(q, cc, Frac(0)).gauge() == Frac(0));
    auto d = Ring::dual_numbers(Ring::rationals());
    PuiseuxSeries eps = PuiseuxSeries::monomial(d, cc, AuxPoly::constant(d, cc, Scalar::epsilon(d)), Frac(-1));
    CHECK(eps.gauge() == Frac(-1));
    CHECK_THROWS_AS((void)PuiseuxSeries::zero(q, cc).gauge(), Error);

    auto cu = VarContext::u();
    PuiseuxSeries f = PuiseuxSeries::t_power(q, cu, Frac(0)) -
                      PuiseuxSeries::monomial(q, cu, AuxPoly::variable(q, cu, "u"), Frac(1));
    CHECK(f.specialize_t0().is_one());
    CHECK_THROWS_AS((void)ts(q, cc, {{-1, 2}}).specialize_t0(), Error);
}

TEST_CASE("sigma is a ring homomorphism on random pairs") {
    std::mt19937_64 rng(77);
    auto q = Ring::rationals();
    auto f5 = Ring::prime_field(5);
    auto cc = VarContext::constants();
    for (const auto& r : {q, f5}) {
        auto cu = VarContext::u();
        AuxPoly u = AuxPoly::variable(r, cu, "u");
        for (int i = 0; i < 12; ++i) {
            PuiseuxSeries f = rnd_laurent(rng, r, cc);
            PuiseuxSeries g = rnd_laurent(rng, r, cc);
            Frac rr(1 + (i % 3), 1 + (i % 2));
            Frac target(6);
            PuiseuxSeries lhs = (f * g).subst_sigma(rr, u, target);
            PuiseuxSeries rhs = f.subst_sigma(rr, u, target) * g.subst_sigma(rr, u, target);
            CHECK(lhs.agrees_with(rhs));
            PuiseuxSeries lhs2 = (f + g).subst_sigma(rr, u, target);
            PuiseuxSeries rhs2 = f.subst_sigma(rr, u, target) + g.subst_sigma(rr, u, target);
            CHECK(lhs2.agrees_with(rhs2));
        }
    }
}

TEST_CASE("inversion round trip on random units") {
    std::mt19937_64 rng(13);
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    for (int i = 0; i < 15; ++i) {
        PuiseuxSeries f = PuiseuxSeries::t_power(q, cc, Frac(-2)) + rnd_laurent(rng, q, cc, -1, 3);
        if (f.raw_terms().empty()) continue;
        if (!f.raw_terms().begin()->second.is_unit_monomial()) continue;
        PuiseuxSeries inv = f.inverted(Frac(5));
        PuiseuxSeries prod = f * inv;
        CHECK(prod.agrees_with(PuiseuxSeries::t_power(q, cc, Frac(0))));
    }
}

TEST_CASE("equality raises on mismatched claims") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    PuiseuxSeries a = ts(q, cc, {{0, 1}});
    PuiseuxSeries b = a.truncated(Frac(2));
    CHECK_THROWS_AS((void)(a == b), Error);
    CHECK(a.agrees_with(b));
    PuiseuxSeries c2 = ts(q, cc, {{0, 1}, {1, 5}}).truncated(Frac(2));
    CHECK(!b.agrees_with(c2));
}

TEST_CASE("rendering") {
    auto q = Ring::rationals();
    auto cc = VarContext::constants();
    PuiseuxSeries f = ts(q, cc, {{-2, 1}, {1, 3}}) +
                      PuiseuxSeries::monomial(q, cc, AuxPoly::constant(q, cc, Scalar::from_fraction(q, 1, 2)), Frac(3));
    CHECK(f.str() == "t^-2 + 3*t + 1/2*t^3");
    CHECK(PuiseuxSeries::zero(q, cc).str() == "0");
}
