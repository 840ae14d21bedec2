#include "doctest.h"

#include <random>

#include "ramres/dsl.hpp"
#include "ramres/gen.hpp"
#include "ramres/jets.hpp"

using namespace ramres;

namespace {

CtxPtr jet_ctx2() {
    return VarContext::make({{"u1", false}, {"u2", false}});
}

} // namespace

TEST_CASE("jet composition matches direct substitution") {
    auto q = Ring::rationals();
    CtxPtr c2 = jet_ctx2();
    AuxPoly u1 = AuxPoly::variable(q, c2, "u1");
    AuxPoly u2 = AuxPoly::variable(q, c2, "u2");
    for (int r : {1, 2, 3}) {
        int w = 3 * r + 2;
        Jet f = Jet::phi(r, u1, w);
        Jet g = Jet::phi(r, u2, w);
        Jet fg = f.compose(g);
        // t + (u1+u2) t^{r+1} + (r+1) u1 u2 t^{2r+1} + binomial tail at
        // exponents r+1+rk; in particular nothing between those.
        CHECK(fg.coeff(r + 1) == u1 + u2);
        CHECK(fg.coeff(2 * r + 1) == AuxPoly::from_int(q, c2, r + 1) * u1 * u2);
        for (int k = 2; k <= w; ++k) {
            if (k == 1 || (k - 1) % r == 0) continue;
            CHECK(fg.coeff(k).is_zero());
        }
    }
}

TEST_CASE("jet group axioms") {
    std::mt19937_64 rng(404);
    auto q = Ring::prime_field(7);
    CtxPtr cc = VarContext::constants();
    std::uniform_int_distribution<int> v(-3, 3);
    auto rnd_jet = [&](int w) {
        std::vector<AuxPoly> c;
        c.push_back(AuxPoly::from_int(q, cc, 1 + (rng() % 2))); // unit 1 or 2
        for (int i = 2; i <= w; ++i) c.push_back(AuxPoly::from_int(q, cc, v(rng)));
        return Jet::make(q, cc, w, std::move(c));
    };
    for (int w : {3, 5}) {
        for (int i = 0; i < 10; ++i) {
            Jet a = rnd_jet(w), b = rnd_jet(w), c = rnd_jet(w);
            CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
            CHECK(a.compose(Jet::identity(q, cc, w)) == a);
            CHECK(Jet::identity(q, cc, w).compose(a) == a);
            Jet ai = a.inverted();
            CHECK(a.compose(ai) == Jet::identity(q, cc, w));
            CHECK(ai.compose(a) == Jet::identity(q, cc, w));
        }
    }
    // invert(l t) = l^-1 t
    CtxPtr cl = VarContext::lambda();
    std::vector<AuxPoly> lc = {AuxPoly::variable(q, cl, "l")};
    Jet lt = Jet::make(q, cl, 1, lc);
    CHECK(lt.inverted().coeff(1) == AuxPoly::variable(q, cl, "l", -1));
}

TEST_CASE("level cosets add leading coefficients") {
    // phi^r(u1) o phi^r(u2) = phi^r(u1+u2) modulo the next congruence level.
    auto q = Ring::rationals();
    CtxPtr c2 = jet_ctx2();
    AuxPoly u1 = AuxPoly::variable(q, c2, "u1");
    AuxPoly u2 = AuxPoly::variable(q, c2, "u2");
    for (int r : {1, 2}) {
        int w = 2 * r + 4;
        Jet lhs = Jet::phi(r, u1, w).compose(Jet::phi(r, u2, w));
        Jet rhs = Jet::phi(r, u1 + u2, w);
        for (int k = 1; k <= r + 1; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
    }
}

TEST_CASE("random jets factor through leading-coefficient peels") {
    std::mt19937_64 rng(2025);
    auto q = Ring::rationals();
    CtxPtr cc = VarContext::constants();
    std::uniform_int_distribution<int> v(-3, 3);
    for (int w : {1, 2, 3}) {
        int order = 9;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<AuxPoly> c(static_cast<std::size_t>(order), AuxPoly::zero(q, cc));
            c[0] = AuxPoly::from_int(q, cc, 1);
            for (int i = w + 1; i <= order; ++i)
                c[static_cast<std::size_t>(i - 1)] = AuxPoly::from_int(q, cc, v(rng));
            Jet sigma = Jet::make(q, cc, order, c);
            // peel: sigma = ... o phi^{w+1}(c_{w+2}) o phi^w(c_{w+1})
            Jet cur = sigma;
            std::vector<Jet> peels;
            for (int s = w; s < order; ++s) {
                AuxPoly lead = cur.coeff(s + 1);
                if (lead.is_zero()) continue;
                Jet ph = Jet::phi(s, lead, order);
                peels.push_back(ph);
                cur = cur.compose(ph.inverted());
            }
            CHECK(cur == Jet::identity(q, cc, order));
            // cur = sigma o p1^-1 o ... o pK^-1, so sigma = pK o ... o p1.
            Jet back = Jet::identity(q, cc, order);
            for (auto it = peels.rbegin(); it != peels.rend(); ++it) back = back.compose(*it);
            CHECK(back == sigma);
        }
    }
}

TEST_CASE("apply_jet agrees with the sigma and lambda substitutions") {
    auto q = Ring::rationals();
    SeriesMatrix g = parse_matrix("[[t, 1],[0, t]]", q);
    // sigma = t(1 + u t^2) as a jet
    CtxPtr cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(q, cu, "u");
    Jet sig = Jet::phi(2, u, 12);
    SeriesMatrix a = apply_jet(sig, g, Frac(6));
    SeriesMatrix b = g.map_entries([&](const PuiseuxSeries& s) { return s.subst_sigma(Frac(2), u, Frac(6)); });
    CHECK(a.agrees_with(b));

    CtxPtr cl = VarContext::lambda();
    std::vector<AuxPoly> lc = {AuxPoly::variable(q, cl, "l")};
    Jet lam = Jet::make(q, cl, 1, lc);
    SeriesMatrix c = apply_jet(lam, g, Frac(6));
    SeriesMatrix d = g.map_entries([&](const PuiseuxSeries& s) { return s.subst_lambda(cl, "l"); });
    CHECK(c.agrees_with(d));

    SeriesMatrix e = apply_jet(Jet::identity(q, VarContext::constants(), 8), g, Frac(6));
    CHECK(e.agrees_with(g));
}

TEST_CASE("jet level equals the integral index") {
    auto q = Ring::rationals();
    for (int r : {1, 2, 3}) {
        SeriesMatrix g = parse_matrix("[[1, t^-" + std::to_string(r) + "],[0, 1]]", q);
        CHECK(index_of(g) == IndexResult::positive(Frac(r)));
        CHECK(jet_level(g) == r);
    }
    CHECK_THROWS_AS((void)jet_level(parse_matrix("[[t,1],[0,t]]", q), 0), Error);
}

TEST_CASE("jet residue reports and homomorphism") {
    auto q = Ring::rationals();
    SeriesMatrix g = parse_matrix("[[1, t^-2],[0, 1]]", q);
    JetResidue jr = jet_residue(g);
    CHECK(jr.w == 2);
    CHECK(jr.matches_res_along_phi);
    CHECK(jr.kills_next_level);
    CHECK(jr.trivial_on_2w_plus_1);
    // Res is a homomorphism into constant matrices at the level: generic
    // sigma, tau in J^w with independent coefficients.
    // (leading coefficients add, so the product of images matches.)
    const CtxPtr& jc = jr.res0.ctx;
    std::string lead = "a" + std::to_string(jr.w + 1);
    CtxPtr c2 = jet_ctx2();
    std::map<std::string, AuxPoly> s1, s2, s12;
    for (std::size_t i = 0; i < jc->size(); ++i) {
        const std::string& nm = jc->at(i).name;
        s1[nm] = AuxPoly::zero(q, c2);
        s2[nm] = AuxPoly::zero(q, c2);
        s12[nm] = AuxPoly::zero(q, c2);
    }
    s1[lead] = AuxPoly::variable(q, c2, "u1");
    s2[lead] = AuxPoly::variable(q, c2, "u2");
    s12[lead] = AuxPoly::variable(q, c2, "u1") + AuxPoly::variable(q, c2, "u2");
    CHECK(jr.res0.substitute(c2, s1) * jr.res0.substitute(c2, s2) == jr.res0.substitute(c2, s12));
    // fractional index has no jet comparison
    auto f2 = Ring::prime_field(2);
    SeriesMatrix frac = parse_matrix("[[t^17, t^4],[0, t^2]]", f2);
    try {
        (void)jet_residue(frac);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_integral_index);
    }
}
