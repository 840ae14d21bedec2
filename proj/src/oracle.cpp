#include "ramres/oracle.hpp"

#include <algorithm>
#include <set>

namespace ramres {

namespace {

Frac min_gauge(const SeriesMatrix& m) {
    Frac v(0);
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            const auto& s = m.at(i, j);
            if (s.raw_terms().empty()) continue;
            Frac gv = s.gauge();
            if (gv < v) v = gv;
        }
    return v;
}

} // namespace

bool sigma_membership(const SeriesMatrix& g, Frac r) {
    SlCarrier car = sl_carrier(g);
    SeriesMatrix ginv = car.sl.inverse();
    Frac margin = Frac(1) - std::min(Frac(0), min_gauge(ginv));
    CtxPtr cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(g.ring(), cu, "u");
    SeriesMatrix sg = car.sl.map_entries([&](const PuiseuxSeries& s) { return s.subst_sigma(r, u, margin); });
    SeriesMatrix h = ginv * sg;
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j)
            if (!h.at(i, j).is_integral()) return false;
    return true;
}

bool lambda_membership(const SeriesMatrix& g) {
    SlCarrier car = sl_carrier(g);
    SeriesMatrix ginv = car.sl.inverse();
    CtxPtr cl = VarContext::lambda();
    SeriesMatrix gl = car.sl.map_entries([&](const PuiseuxSeries& s) { return s.subst_lambda(cl, "l"); });
    SeriesMatrix h = ginv * gl;
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j)
            if (!h.at(i, j).is_integral()) return false;
    return true;
}

OracleReport oracle_index(const SeriesMatrix& g) {
    OracleReport rep;
    if (g.is_integral()) {
        rep.index = IndexResult::integral();
        return rep;
    }
    if (lambda_membership(g)) {
        rep.index = IndexResult::zero();
        // Spot-check a few positive values: every one must be a member.
        for (Frac r : {Frac(1, 3), Frac(1, 2), Frac(1), Frac(2)}) {
            if (!sigma_membership(g, r)) {
                rep.half_line_ok = false;
                rep.detail = "index 0 but sigma_" + r.str() + " fails";
            }
        }
        return rep;
    }

    SupportTable st = support_table(g, 1);
    std::vector<Frac> cands = st.candidates();
    if (cands.empty()) {
        rep.half_line_ok = false;
        rep.detail = "lambda membership failed but no support candidates below n*d";
        rep.index = IndexResult::zero();
        return rep;
    }

    // Candidate grid: the support values, midpoints between consecutive
    // ones, a value below the smallest and one above the largest.
    std::set<Frac> grid(cands.begin(), cands.end());
    for (std::size_t i = 0; i + 1 < cands.size(); ++i) grid.insert((cands[i] + cands[i + 1]) / Frac(2));
    grid.insert(cands.front() / Frac(2));
    grid.insert(cands.back() + Frac(1));
    grid.insert(cands.back() + Frac(1, 2));

    Frac endpoint(0);
    bool found = false;
    bool prev_member = false;
    bool first = true;
    for (const Frac& r : grid) {
        bool member = sigma_membership(g, r);
        if (!first && prev_member && !member) {
            rep.half_line_ok = false;
            rep.detail = "membership is not monotone at r = " + r.str();
        }
        if (member && !found) {
            endpoint = r;
            found = true;
        }
        prev_member = member;
        first = false;
    }
    if (!found) {
        rep.half_line_ok = false;
        rep.detail = "no tested candidate was a member";
        rep.index = IndexResult::zero();
        return rep;
    }
    rep.index = IndexResult::positive(endpoint);
    return rep;
}

} // namespace ramres
