#include "ramres/jets.hpp"

#include <algorithm>

namespace ramres {

Jet Jet::make(RingPtr ring, CtxPtr ctx, int w, std::vector<AuxPoly> coeffs) {
    if (w < 1 || coeffs.size() != static_cast<std::size_t>(w))
        fail(Errc::dimension_error, "jet of order w needs coefficients a_1..a_w");
    if (!(coeffs[0].is_unit_monomial() || (coeffs[0].is_constant() && coeffs[0].constant_value().is_unit())))
        fail(Errc::non_unit_leading_jet_coefficient, "a_1 = " + coeffs[0].str() + " is not a unit");
    Jet j;
    j.ring_ = std::move(ring);
    j.ctx_ = std::move(ctx);
    j.w_ = w;
    j.a_ = std::move(coeffs);
    return j;
}

Jet Jet::identity(RingPtr ring, CtxPtr ctx, int w) {
    std::vector<AuxPoly> c(static_cast<std::size_t>(w), AuxPoly::zero(ring, ctx));
    c[0] = AuxPoly::from_int(ring, ctx, 1);
    return make(std::move(ring), std::move(ctx), w, std::move(c));
}

Jet Jet::phi(int r, const AuxPoly& u, int w) {
    if (r < 1) fail(Errc::internal_check, "phi^r needs r >= 1");
    if (w < r + 1) fail(Errc::dimension_error, "phi^r needs order >= r+1");
    Jet j = identity(u.ring(), u.ctx(), w);
    j.a_[static_cast<std::size_t>(r)] = u;
    return j;
}

const AuxPoly& Jet::coeff(int i) const {
    if (i < 1 || i > w_) fail(Errc::dimension_error, "jet coefficient index out of range");
    return a_[static_cast<std::size_t>(i - 1)];
}

Jet Jet::compose(const Jet& inner) const {
    if (w_ != inner.w_) fail(Errc::dimension_error, "jet orders differ");
    if (!ring_->same(*inner.ring_) || !ctx_->same(*inner.ctx_))
        fail(Errc::descriptor_mismatch, "jet contexts differ");
    const std::size_t w = static_cast<std::size_t>(w_);
    // Dense t-polynomials of degree <= w, index = exponent (0 unused).
    std::vector<AuxPoly> pw(w + 1, AuxPoly::zero(ring_, ctx_)); // inner(t)^i, current power
    std::vector<AuxPoly> out(w + 1, AuxPoly::zero(ring_, ctx_));
    pw[0] = AuxPoly::from_int(ring_, ctx_, 1);
    for (std::size_t i = 1; i <= w; ++i) {
        // pw <- pw * inner, truncated at degree w
        std::vector<AuxPoly> nx(w + 1, AuxPoly::zero(ring_, ctx_));
        for (std::size_t d1 = 0; d1 <= w; ++d1) {
            if (pw[d1].is_zero()) continue;
            for (std::size_t d2 = 1; d2 <= w && d1 + d2 <= w; ++d2) {
                if (inner.a_[d2 - 1].is_zero()) continue;
                nx[d1 + d2] = nx[d1 + d2] + pw[d1] * inner.a_[d2 - 1];
            }
        }
        pw = std::move(nx);
        if (a_[i - 1].is_zero()) continue;
        for (std::size_t d = 1; d <= w; ++d)
            if (!pw[d].is_zero()) out[d] = out[d] + a_[i - 1] * pw[d];
    }
    return make(ring_, ctx_, w_, std::vector<AuxPoly>(out.begin() + 1, out.end()));
}

Jet Jet::inverted() const {
    AuxPoly a1 = a_[0];
    AuxPoly a1_inv = a1.is_unit_monomial()
                         ? a1.inv_unit()
                         : AuxPoly::constant(ring_, ctx_, a1.constant_value().inv());
    std::vector<AuxPoly> h(static_cast<std::size_t>(w_), AuxPoly::zero(ring_, ctx_));
    h[0] = a1_inv;
    Jet inv = make(ring_, ctx_, w_, std::move(h));
    for (int k = 2; k <= w_; ++k) {
        Jet comp = compose(inv);
        AuxPoly ck = comp.a_[static_cast<std::size_t>(k - 1)];
        if (ck.is_zero()) continue;
        inv.a_[static_cast<std::size_t>(k - 1)] = inv.a_[static_cast<std::size_t>(k - 1)] - a1_inv * ck;
    }
    Jet check = compose(inv);
    if (check != identity(ring_, ctx_, w_))
        fail(Errc::internal_check, "jet inversion failed for " + str());
    return inv;
}

PuiseuxSeries Jet::series() const {
    PuiseuxSeries s = PuiseuxSeries::zero(ring_, ctx_);
    for (int i = 1; i <= w_; ++i)
        s = s + PuiseuxSeries::monomial(ring_, ctx_, a_[static_cast<std::size_t>(i - 1)], Frac(i));
    return s.truncated(Frac(w_ + 1));
}

bool operator==(const Jet& a, const Jet& b) {
    if (a.w_ != b.w_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::string Jet::str() const {
    std::string s;
    for (int i = 1; i <= w_; ++i) {
        const AuxPoly& c = a_[static_cast<std::size_t>(i - 1)];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = c.str();
        std::string tp = i == 1 ? "t" : "t^" + std::to_string(i);
        s += (cs == "1") ? tp : (c.composite_str() ? "(" + cs + ")*" + tp : cs + "*" + tp);
    }
    return s.empty() ? "0" : s;
}

SeriesMatrix apply_jet(const Jet& sigma, const SeriesMatrix& g, std::optional<Frac> target) {
    PuiseuxSeries st = sigma.series();
    return g.map_entries([&](const PuiseuxSeries& s) { return s.compose(st, target); });
}

Jet generic_jet_level(const RingPtr& ring, int w, int order) {
    if (order < w + 1) order = w + 1;
    std::vector<VarContext::Var> vars;
    if (w == 0) vars.push_back({"a1", true});
    for (int i = std::max(2, w + 1); i <= order; ++i)
        vars.push_back({"a" + std::to_string(i), false});
    CtxPtr ctx = VarContext::make(std::move(vars));
    std::vector<AuxPoly> c(static_cast<std::size_t>(order), AuxPoly::zero(ring, ctx));
    c[0] = (w == 0) ? AuxPoly::variable(ring, ctx, "a1") : AuxPoly::from_int(ring, ctx, 1);
    for (int i = std::max(2, w + 1); i <= order; ++i)
        c[static_cast<std::size_t>(i - 1)] = AuxPoly::variable(ring, ctx, "a" + std::to_string(i));
    return Jet::make(ring, ctx, order, std::move(c));
}

namespace {

// g^{-1} sigma(g) for the generic level-w jet; integral or not, decided
// symbolically. Retries with a longer jet when precision runs out.
struct LevelProbe {
    bool integral = false;
    SeriesMatrix h;
    Jet sigma;
};

LevelProbe probe_level(const SeriesMatrix& g, int w, long long nd) {
    SlCarrier car = sl_carrier(g);
    SeriesMatrix ginv = car.sl.inverse();
    Frac vmin(0);
    for (int i = 0; i < ginv.n(); ++i)
        for (int j = 0; j < ginv.n(); ++j)
            if (!ginv.at(i, j).raw_terms().empty()) vmin = std::min(vmin, ginv.at(i, j).gauge());
    int order = static_cast<int>(2 * nd + 4);
    for (int attempt = 0; attempt < 4; ++attempt) {
        Jet sigma = generic_jet_level(g.ring(), w, order + attempt * (order + 2));
        try {
            Frac tgt = Frac(2) - vmin;
            SeriesMatrix sg = apply_jet(sigma, car.sl, tgt);
            SeriesMatrix h = ginv.embed(sg.ctx()) * sg;
            bool ok = true;
            for (int i = 0; i < h.n() && ok; ++i)
                for (int j = 0; j < h.n() && ok; ++j)
                    if (!h.at(i, j).is_integral()) ok = false;
            return {ok, h, sigma};
        } catch (const Error& e) {
            if (e.code() != Errc::insufficient_precision || attempt == 3) throw;
        }
    }
    fail(Errc::internal_check, "unreachable");
}

} // namespace

int jet_level(const SeriesMatrix& g, int w_max) {
    if (g.is_integral()) return 0;
    SlCarrier car = sl_carrier(g);
    long long nd = static_cast<long long>(car.sl.n()) * car.sl.gauge_decompose().d;
    if (w_max < 0) w_max = static_cast<int>(2 * nd + 2);
    for (int w = 0; w <= w_max; ++w)
        if (probe_level(g, w, nd).integral) return w;
    fail(Errc::search_bound_exceeded, "no jet level found up to w = " + std::to_string(w_max));
}

JetResidue jet_residue(const SeriesMatrix& g) {
    IndexResult idx = index_of(g);
    if (idx.is_positive() && !idx.r.is_integer())
        fail(Errc::non_integral_index,
             "jet comparison is defined for integer indices, got r = " + idx.r.str());

    JetResidue out;
    out.w = jet_level(g);
    SlCarrier car = sl_carrier(g);
    long long nd = static_cast<long long>(car.sl.n()) * car.sl.gauge_decompose().d;
    LevelProbe probe = probe_level(g, out.w, nd);
    if (!probe.integral) fail(Errc::internal_check, "level probe no longer integral");

    // t^0 block, projected to the input coordinates.
    PolyMatrix full;
    full.n = probe.h.n();
    full.ring = g.ring();
    full.ctx = probe.h.ctx();
    for (int i = 0; i < probe.h.n(); ++i)
        for (int j = 0; j < probe.h.n(); ++j) full.e.push_back(probe.h.at(i, j).specialize_t0());
    if (car.was_gl) {
        PolyMatrix blk;
        blk.n = car.orig_n;
        blk.ring = full.ring;
        blk.ctx = full.ctx;
        for (int i = 0; i < blk.n; ++i)
            for (int j = 0; j < blk.n; ++j) blk.e.push_back(full.at(i, j));
        full = std::move(blk);
    }
    out.res0 = full;
    const CtxPtr& jctx = out.res0.ctx;

    ResidueHom res = residue_of(g);

    // (b) the t^0 block depends only on the leading level coefficient.
    std::string lead = out.w == 0 ? "a1" : "a" + std::to_string(out.w + 1);
    out.kills_next_level = true;
    for (const auto& p : out.res0.e)
        for (std::size_t v = 0; v < jctx->size(); ++v)
            if (jctx->at(v).name != lead && p.uses_var(jctx->at(v).name)) out.kills_next_level = false;

    // (a) restriction along phi^{r} (resp. the torus direction) is res(g).
    if (res.kind == ResidueHom::Kind::additive) {
        int r = static_cast<int>(idx.r.num);
        if (out.w == r) {
            CtxPtr cu = VarContext::u();
            std::map<std::string, AuxPoly> imgs;
            for (std::size_t v = 0; v < jctx->size(); ++v)
                imgs[jctx->at(v).name] = AuxPoly::zero(g.ring(), cu);
            imgs[lead] = AuxPoly::variable(g.ring(), cu, "u");
            out.matches_res_along_phi = (out.res0.substitute(cu, imgs) == res.mat);
        } else {
            out.matches_res_along_phi = false;
            out.detail = "level " + std::to_string(out.w) + " != index " + idx.r.str();
        }
    } else {
        CtxPtr cl = VarContext::lambda();
        std::map<std::string, AuxPoly> imgs;
        for (std::size_t v = 0; v < jctx->size(); ++v)
            imgs[jctx->at(v).name] = AuxPoly::zero(g.ring(), cl);
        imgs["a1"] = AuxPoly::variable(g.ring(), cl, "l");
        out.matches_res_along_phi = (out.res0.substitute(cl, imgs) == res.mat);
    }

    // (c) triviality on J^{2w+1}: zero out levels w+1 .. 2w+1.
    std::map<std::string, AuxPoly> kill;
    for (std::size_t v = 0; v < jctx->size(); ++v) {
        const auto& name = jctx->at(v).name;
        int level = std::stoi(name.substr(1));
        bool zero_out = (out.w == 0) ? (name == "a1" || level <= 1) : (level <= 2 * out.w + 1);
        if (name == "a1")
            kill[name] = AuxPoly::from_int(g.ring(), jctx, 1);
        else if (zero_out)
            kill[name] = AuxPoly::zero(g.ring(), jctx);
        else
            kill[name] = AuxPoly::variable(g.ring(), jctx, name);
    }
    out.trivial_on_2w_plus_1 = out.res0.substitute(jctx, kill).is_identity();
    return out;
}

} // namespace ramres
