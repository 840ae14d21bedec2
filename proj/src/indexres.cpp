#include "ramres/indexres.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ramres {

std::string IndexResult::str() const {
    switch (kind) {
        case Kind::integral: return "integral";
        case Kind::zero: return "0";
        case Kind::positive: return r.str();
    }
    return "?";
}

std::string ResidueHom::str() const {
    switch (kind) {
        case Kind::trivial: return "trivial";
        case Kind::additive: return "additive " + mat.str();
        case Kind::multiplicative: return "multiplicative " + mat.str();
    }
    return "?";
}

std::vector<Frac> SupportTable::candidates() const {
    std::set<Frac> cs;
    long long nd = static_cast<long long>(n) * d;
    for (const auto& rec : recs)
        if (rec.a < nd) cs.insert(Frac(nd - rec.a, rec.b));
    return {cs.begin(), cs.end()};
}

SlCarrier sl_carrier(const SeriesMatrix& g) {
    if (g.tag() == GroupTag::GL) return {g.embed_gln_sln(), g.n(), true};
    return {g, g.n(), false};
}

// ---------------------------------------------------------------- support

namespace {

Scalar const_coeff(const AuxPoly& p) {
    if (!p.is_constant()) fail(Errc::internal_check, "series coefficient carries auxiliary variables");
    return p.constant_value();
}

// Sparse t-polynomial with scalar coefficients, map exponent -> value.
using TPoly = std::map<long long, Scalar>;

TPoly to_tpoly(const PuiseuxSeries& s, long long need_below) {
    PuiseuxSeries r = s.reduced();
    if (r.denom() != 1) fail(Errc::fractional_exponent, "support expansion needs integer exponents");
    if (!r.exact() && *r.prec() < Frac(need_below))
        fail(Errc::insufficient_precision,
             "support expansion needs coefficients below t^" + std::to_string(need_below));
    TPoly p;
    for (const auto& [k, c] : r.raw_terms()) {
        if (k >= need_below) continue;
        p.emplace(k, const_coeff(c));
    }
    return p;
}

} // namespace

SupportTable support_table(const SeriesMatrix& g, long long guard) {
    if (g.is_integral()) fail(Errc::integral_input, "support table of an integral element");
    SlCarrier car = sl_carrier(g);
    GaugeDecomposition gd = car.sl.gauge_decompose();
    const int n = car.sl.n();
    const long long bound = static_cast<long long>(n) * gd.d + std::max<long long>(guard, 0);

    SeriesMatrix adj = gd.ug.adjugate();
    std::vector<TPoly> P(static_cast<std::size_t>(n) * n), D(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            P[static_cast<std::size_t>(i * n + j)] = to_tpoly(gd.ug.at(i, j), bound);
            D[static_cast<std::size_t>(i * n + j)] = to_tpoly(adj.at(i, j), bound);
        }

    const RingPtr& ring = g.ring();
    std::map<long long, std::vector<Scalar>> binoms;
    auto binom_row = [&](long long m) -> const std::vector<Scalar>& {
        auto it = binoms.find(m);
        if (it != binoms.end()) return it->second;
        std::vector<Scalar> row;
        row.reserve(static_cast<std::size_t>(m) + 1);
        mpz_class c = 1;
        for (long long b = 0; b <= m; ++b) {
            if (b > 0) {
                c *= static_cast<long>(m - (b - 1));
                mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(b));
            }
            row.push_back(Scalar::from_mpz(ring, c));
        }
        return binoms.emplace(m, std::move(row)).first->second;
    };

    SupportTable table;
    table.n = n;
    table.d = gd.d;
    table.bound = bound;

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::map<std::pair<long long, long long>, Scalar> acc;
            for (int k = 0; k < n; ++k) {
                const TPoly& delta = D[static_cast<std::size_t>(i * n + k)];
                const TPoly& pkj = P[static_cast<std::size_t>(k * n + j)];
                for (const auto& [m, pm] : pkj) {
                    if (m < 1) continue;
                    const auto& row = binom_row(m);
                    for (const auto& [s, ds] : delta) {
                        long long a = s + m;
                        if (a >= bound) break; // keys ascend
                        Scalar base = ds * pm;
                        for (long long b = 1; b <= m; ++b) {
                            if (row[static_cast<std::size_t>(b)].is_zero()) continue;
                            Scalar add = base * row[static_cast<std::size_t>(b)];
                            auto key = std::make_pair(a, b);
                            auto it = acc.find(key);
                            if (it == acc.end()) {
                                acc.emplace(key, std::move(add));
                            } else {
                                it->second = it->second + add;
                                if (it->second.is_zero()) acc.erase(it);
                            }
                        }
                    }
                }
            }
            for (const auto& [ab, c] : acc)
                table.recs.push_back({i, j, ab.first, ab.second, c});
        }
    }
    return table;
}

// ---------------------------------------------------------------- index

IndexResult index_of(const SeriesMatrix& g) {
    if (g.is_integral()) return IndexResult::integral();
    SupportTable st = support_table(g, 1);
    long long nd = static_cast<long long>(st.n) * st.d;
    bool any = false;
    Frac best(0);
    for (const auto& rec : st.recs) {
        if (rec.a >= nd) continue;
        Frac cand(nd - rec.a, rec.b);
        if (!any || best < cand) best = cand;
        any = true;
    }
    return any ? IndexResult::positive(best) : IndexResult::zero();
}

// ---------------------------------------------------------------- residue

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

PolyMatrix take_block(const PolyMatrix& m, int n) {
    if (n == m.n) return m;
    PolyMatrix r;
    r.n = n;
    r.ring = m.ring;
    r.ctx = m.ctx;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.e.push_back(m.at(i, j));
    return r;
}

PolyMatrix specialize_entries(const SeriesMatrix& h, int keep_n) {
    PolyMatrix r;
    r.n = h.n();
    r.ring = h.ring();
    r.ctx = h.ctx();
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j) {
            if (!h.at(i, j).is_integral())
                fail(Errc::residue_not_integral,
                     "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + h.at(i, j).str());
            r.e.push_back(h.at(i, j).specialize_t0());
        }
    return take_block(r, keep_n);
}

void check_nontrivial(const ResidueHom& res, const RingPtr& ring) {
    const CtxPtr& ctx = res.mat.ctx;
    std::map<std::string, AuxPoly> at_one;
    if (res.kind == ResidueHom::Kind::additive)
        at_one = {{"u", AuxPoly::zero(ring, ctx)}};
    else
        at_one = {{"l", AuxPoly::from_int(ring, ctx, 1)}};
    PolyMatrix spec = res.mat.substitute(ctx, at_one);
    if (!spec.is_identity())
        fail(Errc::residue_not_integral, "residue does not specialize to the identity: " + res.mat.str());
    if (res.mat.is_identity())
        fail(Errc::trivial_residue, "non-integral element produced the identity residue");
}

} // namespace

ResidueHom residue_by_substitution(const SeriesMatrix& g) {
    IndexResult idx = index_of(g);
    if (idx.kind == IndexResult::Kind::integral) return {};

    SlCarrier car = sl_carrier(g);
    SeriesMatrix ginv = car.sl.inverse();
    Frac margin = Frac(2) - std::min(Frac(0), min_gauge(ginv));

    SeriesMatrix h = [&] {
        if (idx.kind == IndexResult::Kind::positive) {
            CtxPtr cu = VarContext::u();
            AuxPoly u = AuxPoly::variable(g.ring(), cu, "u");
            return ginv * car.sl.map_entries(
                              [&](const PuiseuxSeries& s) { return s.subst_sigma(idx.r, u, margin); });
        }
        CtxPtr cl = VarContext::lambda();
        return ginv * car.sl.map_entries([&](const PuiseuxSeries& s) { return s.subst_lambda(cl, "l"); });
    }();

    ResidueHom res;
    res.kind = idx.kind == IndexResult::Kind::positive ? ResidueHom::Kind::additive
                                                       : ResidueHom::Kind::multiplicative;
    res.mat = specialize_entries(h, car.orig_n);
    check_nontrivial(res, g.ring());
    return res;
}

ResidueHom residue_from_support(const SeriesMatrix& g) {
    IndexResult idx = index_of(g);
    if (idx.kind == IndexResult::Kind::integral) return {};
    if (idx.kind == IndexResult::Kind::zero)
        return residue_by_substitution(g); // the closed form covers the positive case only

    SupportTable st = support_table(g, 1);
    long long nd = static_cast<long long>(st.n) * st.d;
    CtxPtr cu = VarContext::u();
    PolyMatrix full = PolyMatrix::identity(st.n, g.ring(), cu);
    for (const auto& rec : st.recs) {
        if (Frac(nd - rec.a) != idx.r * Frac(rec.b)) continue;
        Exps e = {static_cast<int>(rec.b)};
        full.at(rec.i, rec.j) = full.at(rec.i, rec.j) + AuxPoly::monomial(g.ring(), cu, e, rec.c);
    }
    ResidueHom res;
    res.kind = ResidueHom::Kind::additive;
    res.mat = take_block(full, sl_carrier(g).orig_n);
    check_nontrivial(res, g.ring());
    return res;
}

ResidueHom residue_of(const SeriesMatrix& g) {
    ResidueHom a = residue_by_substitution(g);
    if (a.kind == ResidueHom::Kind::additive) {
        ResidueHom b = residue_from_support(g);
        if (a.mat != b.mat)
            fail(Errc::internal_check, "residue routes disagree: " + a.mat.str() + " vs " + b.mat.str());
    }
    return a;
}

bool verify_residue_hom(const ResidueHom& res) {
    if (res.is_trivial()) return true;
    const RingPtr& ring = res.mat.ring;
    if (res.kind == ResidueHom::Kind::additive) {
        CtxPtr cv = VarContext::v1v2();
        AuxPoly v1 = AuxPoly::variable(ring, cv, "v1");
        AuxPoly v2 = AuxPoly::variable(ring, cv, "v2");
        PolyMatrix m1 = res.mat.substitute(cv, {{"u", v1}});
        PolyMatrix m2 = res.mat.substitute(cv, {{"u", v2}});
        return m1 * m2 == res.mat.substitute(cv, {{"u", v1 + v2}});
    }
    CtxPtr cl = VarContext::lambda12();
    AuxPoly l1 = AuxPoly::variable(ring, cl, "l1");
    AuxPoly l2 = AuxPoly::variable(ring, cl, "l2");
    PolyMatrix m1 = res.mat.substitute(cl, {{"l", l1}});
    PolyMatrix m2 = res.mat.substitute(cl, {{"l", l2}});
    return m1 * m2 == res.mat.substitute(cl, {{"l", l1 * l2}});
}

// ---------------------------------------------------------------- left

IndexResult left_index(const SeriesMatrix& g) { return index_of(g.inverse()); }

ResidueHom left_residue(const SeriesMatrix& g) { return residue_of(g.inverse()); }

// ---------------------------------------------------------------- transport

SeriesMatrix pushforward(const SeriesMatrix& g, long long d) {
    if (d <= 0) fail(Errc::internal_check, "pushforward needs d >= 1");
    return g.map_entries([&](const PuiseuxSeries& s) { return s.subst_power(d); });
}

SeriesMatrix frobenius_pushforward(const SeriesMatrix& g, unsigned e) {
    std::uint64_t p = g.ring()->characteristic();
    if (p == 0) fail(Errc::wrong_characteristic, "frobenius pushforward needs characteristic p > 0");
    long long d = 1;
    for (unsigned i = 0; i < e; ++i) d *= static_cast<long long>(p);
    return pushforward(g, d);
}

SeriesMatrix entrywise_frobenius(const SeriesMatrix& g, unsigned e) {
    if (g.ring()->characteristic() == 0)
        fail(Errc::wrong_characteristic, "entrywise frobenius needs characteristic p > 0");
    return g.map_entries([&](const PuiseuxSeries& s) { return s.frobenius(e); });
}

namespace {

PolyMatrix substitute_residue(const PolyMatrix& m, ResidueHom::Kind kind, const AuxPoly& image) {
    const std::string var = kind == ResidueHom::Kind::additive ? "u" : "l";
    return m.substitute(image.ctx(), {{var, image}});
}

} // namespace

LawReport verify_pushforward_laws(const SeriesMatrix& g, long long d) {
    std::uint64_t p = g.ring()->characteristic();
    if (p != 0 && d % static_cast<long long>(p) == 0)
        fail(Errc::wrong_characteristic, "pushforward law needs d prime to the characteristic");
    LawReport rep;
    Analysis a = analyze(g);
    Analysis b = analyze(pushforward(g, d));
    IndexResult expect = a.index;
    if (a.index.is_positive()) expect = IndexResult::positive(a.index.r * Frac(d));
    rep.index_ok = (b.index == expect);
    if (!rep.index_ok) rep.detail = "index " + b.index.str() + " != " + expect.str();

    if (a.residue.is_trivial()) {
        rep.residue_ok = b.residue.is_trivial();
    } else if (a.residue.kind == ResidueHom::Kind::additive) {
        AuxPoly du = AuxPoly::variable(g.ring(), VarContext::u(), "u").scaled(Scalar::from_int(g.ring(), d));
        rep.residue_ok = (b.residue.mat == substitute_residue(a.residue.mat, a.residue.kind, du));
    } else {
        AuxPoly ld = AuxPoly::variable(g.ring(), VarContext::lambda(), "l", static_cast<int>(d));
        rep.residue_ok = (b.residue.mat == substitute_residue(a.residue.mat, a.residue.kind, ld));
    }
    if (!rep.residue_ok && rep.detail.empty()) rep.detail = "residue transform mismatch";
    return rep;
}

LawReport verify_frobenius_laws(const SeriesMatrix& g, unsigned e) {
    std::uint64_t p = g.ring()->characteristic();
    if (p == 0) fail(Errc::wrong_characteristic, "frobenius laws need characteristic p > 0");
    LawReport rep;
    Analysis a = analyze(g);
    Analysis b = analyze(frobenius_pushforward(g, e));
    rep.index_ok = (b.index == a.index);
    if (!rep.index_ok) rep.detail = "index changed under t -> T^(p^e)";

    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (a.residue.is_trivial()) {
        rep.residue_ok = b.residue.is_trivial();
    } else if (a.residue.kind == ResidueHom::Kind::additive) {
        AuxPoly upq = AuxPoly::variable(g.ring(), VarContext::u(), "u").pow(q);
        rep.residue_ok = (b.residue.mat == substitute_residue(a.residue.mat, a.residue.kind, upq));
    } else {
        AuxPoly lpq = AuxPoly::variable(g.ring(), VarContext::lambda(), "l", static_cast<int>(q));
        rep.residue_ok = (b.residue.mat == substitute_residue(a.residue.mat, a.residue.kind, lpq));
    }

    // Entrywise Frobenius preserves the index as well.
    Analysis c = analyze(entrywise_frobenius(g, e));
    if (c.index != a.index) {
        rep.index_ok = false;
        rep.detail += " entrywise frobenius changed the index";
    }
    return rep;
}

PolyMatrix conjugate(const PolyMatrix& tau, const PolyMatrix& sigma) {
    PolyMatrix s = sigma.embed(tau.ctx);
    return s.inverse() * tau * s;
}

PolyMatrix specialize_matrix_t0(const SeriesMatrix& g, const CtxPtr& ctx) {
    PolyMatrix r;
    r.n = g.n();
    r.ring = g.ring();
    r.ctx = ctx;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) r.e.push_back(g.at(i, j).specialize_t0().embed(ctx));
    return r;
}

LawReport invariance_suite(const SeriesMatrix& g, const SeriesMatrix& h_left, const SeriesMatrix& h_right) {
    if (!h_left.is_constant()) fail(Errc::internal_check, "left factor must be constant in t");
    if (!h_right.is_integral()) fail(Errc::internal_check, "right factor must be integral");
    LawReport rep;
    Analysis a = analyze(g);
    Analysis b = analyze(h_left * g * h_right);
    rep.index_ok = (a.index == b.index);
    if (!rep.index_ok) rep.detail = "index not invariant: " + a.index.str() + " vs " + b.index.str();

    if (a.residue.is_trivial() || b.residue.is_trivial()) {
        rep.residue_ok = a.residue.is_trivial() == b.residue.is_trivial();
        return rep;
    }
    PolyMatrix h2bar = specialize_matrix_t0(h_right, a.residue.mat.ctx);
    PolyMatrix expect = conjugate(a.residue.mat, h2bar);
    rep.residue_ok = (b.residue.kind == a.residue.kind) && (b.residue.mat == expect);
    if (!rep.residue_ok) rep.detail += " residue conjugation mismatch";
    return rep;
}

bool congruence_check(const SeriesMatrix& g, Frac s, long long M) {
    if (M < 1) fail(Errc::internal_check, "congruence level M must be >= 1");
    if (!(s > Frac(0))) fail(Errc::internal_check, "congruence check needs s > 0");
    IndexResult idx = index_of(g);
    // Modulus t^{M/n} when r = m/n > 0, t^M when r <= 0. Values of s below
    // the guaranteed range are allowed and simply report false.
    Frac modulus = idx.is_positive() ? Frac(M, idx.r.den) : Frac(M);

    SlCarrier car = sl_carrier(g);
    SeriesMatrix ginv = car.sl.inverse();
    Frac margin = modulus + Frac(1) - std::min(Frac(0), min_gauge(ginv));
    CtxPtr cu = VarContext::u();
    AuxPoly u = AuxPoly::variable(g.ring(), cu, "u");
    SeriesMatrix sg = car.sl.map_entries([&](const PuiseuxSeries& x) { return x.subst_sigma(s, u, margin); });
    SeriesMatrix h = ginv * sg;
    for (int i = 0; i < h.n(); ++i)
        for (int j = 0; j < h.n(); ++j) {
            PuiseuxSeries diff = h.at(i, j);
            if (i == j)
                diff = diff - PuiseuxSeries::t_power(h.ring(), h.ctx(), Frac(0));
            diff = diff.truncated(modulus);
            if (!diff.exact() && *diff.prec() < modulus)
                fail(Errc::insufficient_precision, "congruence undecidable at level " + modulus.str());
            if (!diff.raw_terms().empty()) return false;
        }
    return true;
}

Analysis analyze(const SeriesMatrix& g) {
    Analysis a;
    if (g.is_integral()) {
        a.index = IndexResult::integral();
        a.residue = ResidueHom{};
        return a;
    }
    SlCarrier car = sl_carrier(g);
    a.gauge_d = car.sl.gauge_decompose().d;
    a.index = index_of(g);
    a.residue = residue_of(g);
    a.hom_ok = verify_residue_hom(a.residue);
    a.nontrivial = !a.residue.mat.is_identity();
    return a;
}

} // namespace ramres
