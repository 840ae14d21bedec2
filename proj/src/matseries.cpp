#include "ramres/matseries.hpp"

#include <algorithm>

namespace ramres {

namespace {

// Is the series a unit of A((t))? Units are series whose image modulo
// nilpotents has a unit leading coefficient; nilpotent heads are allowed.
bool series_is_unit(const PuiseuxSeries& s) {
    if (s.raw_terms().empty()) return false;
    for (const auto& [k, c] : s.raw_terms()) {
        if (c.is_unit_monomial()) return true;
        if (!c.is_nilpotent()) return false;
    }
    return false;
}

} // namespace

SeriesMatrix SeriesMatrix::make(GroupTag tag, int n, std::vector<PuiseuxSeries> entries, bool check) {
    if (n <= 0 || entries.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        fail(Errc::dimension_error, "matrix needs n*n entries");
    SeriesMatrix m;
    m.tag_ = tag;
    m.n_ = n;
    m.ring_ = entries[0].ring();
    m.ctx_ = entries[0].ctx();
    for (auto& s : entries)
        if (!s.ring()->same(*m.ring_)) fail(Errc::descriptor_mismatch, "matrix entries over different rings");
    m.e_ = std::move(entries);
    // Align contexts entrywise.
    for (auto& s : m.e_) {
        if (!s.ctx()->same(*m.ctx_)) {
            if (s.ctx()->contains_all_of(*m.ctx_)) m.ctx_ = s.ctx();
        }
    }
    for (auto& s : m.e_) s = s.embed(m.ctx_);
    if (check) {
        PuiseuxSeries d = m.det();
        if (tag == GroupTag::SL) {
            PuiseuxSeries one = PuiseuxSeries::t_power(m.ring_, m.ctx_, Frac(0));
            if (!d.agrees_with(one))
                fail(Errc::not_invertible, "SL matrix must have det = 1, got " + d.str());
        } else {
            if (!series_is_unit(d))
                fail(Errc::not_invertible, "GL matrix must have unit det, got " + d.str());
        }
    }
    return m;
}

SeriesMatrix SeriesMatrix::identity(GroupTag tag, int n, RingPtr ring, CtxPtr ctx) {
    std::vector<PuiseuxSeries> e;
    e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e.push_back(i == j ? PuiseuxSeries::t_power(ring, ctx, Frac(0)) : PuiseuxSeries::zero(ring, ctx));
    return make(tag, n, std::move(e), false);
}

SeriesMatrix SeriesMatrix::map_entries(const std::function<PuiseuxSeries(const PuiseuxSeries&)>& f,
                                       bool check) const {
    std::vector<PuiseuxSeries> e;
    e.reserve(e_.size());
    for (const auto& s : e_) e.push_back(f(s));
    return make(tag_, n_, std::move(e), check);
}

SeriesMatrix SeriesMatrix::embed(const CtxPtr& target) const {
    return map_entries([&](const PuiseuxSeries& s) { return s.embed(target); });
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.n_ != b.n_) fail(Errc::dimension_error, "matrix dimensions differ");
    // SL * GL lands in GL.
    GroupTag tag = (a.tag_ == b.tag_) ? a.tag_ : GroupTag::GL;
    std::vector<PuiseuxSeries> e;
    e.reserve(a.e_.size());
    for (int i = 0; i < a.n_; ++i) {
        for (int j = 0; j < a.n_; ++j) {
            PuiseuxSeries acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.n_; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            e.push_back(std::move(acc));
        }
    }
    return SeriesMatrix::make(tag, a.n_, std::move(e), false);
}

namespace {

PuiseuxSeries det_rec(const SeriesMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    PuiseuxSeries acc = PuiseuxSeries::zero(m.ring(), m.ctx());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_cols;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        PuiseuxSeries term = m.at(rows[0], cols[j]) * det_rec(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

// Cofactor expansion; dimensions stay desk-scale (n <= 5 after embedding).
PuiseuxSeries SeriesMatrix::det() const {
    std::vector<int> idx(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) idx[static_cast<std::size_t>(i)] = i;
    return det_rec(*this, idx, idx);
}

SeriesMatrix SeriesMatrix::adjugate() const {
    std::vector<PuiseuxSeries> e(e_.size(), PuiseuxSeries::zero(ring_, ctx_));
    if (n_ == 1) {
        e[0] = PuiseuxSeries::t_power(ring_, ctx_, Frac(0));
        return make(tag_, 1, std::move(e), false);
    }
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n_; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            PuiseuxSeries minor = det_rec(*this, rows, cols);
            // adj(g)_{j,i} = (-1)^{i+j} minor_{i,j}
            e[static_cast<std::size_t>(j * n_ + i)] = ((i + j) % 2 == 0) ? minor : -minor;
        }
    }
    return make(tag_, n_, std::move(e), false);
}

SeriesMatrix SeriesMatrix::inverse(std::optional<Frac> target) const {
    if (tag_ == GroupTag::SL) {
        // det(ug) = t^{nd} is an exact monomial, so no series division.
        GaugeDecomposition gd = gauge_decompose();
        SeriesMatrix adj = gd.ug.adjugate();
        Frac shift(gd.d - static_cast<long long>(n_) * gd.d);
        return adj.map_entries([&](const PuiseuxSeries& s) { return s.shifted(shift); });
    }
    PuiseuxSeries d = det();
    if (!series_is_unit(d)) fail(Errc::not_invertible, "matrix determinant " + d.str() + " is not a unit");
    PuiseuxSeries dinv = d.inverted(target);
    SeriesMatrix adj = adjugate();
    return adj.map_entries([&](const PuiseuxSeries& s) { return s * dinv; });
}

GaugeDecomposition SeriesMatrix::gauge_decompose() const {
    long long d = 0;
    bool any = false;
    for (const auto& s : e_) {
        if (s.raw_terms().empty()) {
            // Blank with claim below 0 could hide Laurent terms.
            if (!s.exact() && *s.prec() < Frac(0))
                fail(Errc::insufficient_precision, "entry gauge unknown: " + s.str());
            continue;
        }
        Frac v = s.gauge();
        if (v.den != 1) fail(Errc::fractional_exponent, "gauge decomposition needs integer exponents");
        any = true;
        d = std::min(d, v.num);
    }
    if (!any) fail(Errc::not_invertible, "zero matrix has no gauge decomposition");
    long long dd = d < 0 ? -d : 0;
    GaugeDecomposition g;
    g.d = dd;
    g.ug = map_entries([&](const PuiseuxSeries& s) { return s.shifted(Frac(dd)); });
    if (tag_ == GroupTag::SL) {
        PuiseuxSeries dt = g.ug.det();
        PuiseuxSeries expect = PuiseuxSeries::t_power(ring_, ctx_, Frac(static_cast<long long>(n_) * dd));
        if (!dt.agrees_with(expect))
            fail(Errc::internal_check, "det(ug) = " + dt.str() + " != t^" + std::to_string(n_ * dd));
    }
    return g;
}

bool SeriesMatrix::is_integral() const {
    for (const auto& s : e_)
        if (!s.is_integral()) return false;
    if (tag_ == GroupTag::GL) {
        PuiseuxSeries d = det();
        if (!d.is_integral()) return false;
        AuxPoly c0 = d.specialize_t0();
        if (!c0.is_constant()) fail(Errc::internal_check, "determinant constant term is not scalar");
        return c0.constant_value().is_unit();
    }
    return true;
}

bool SeriesMatrix::is_constant() const {
    for (const auto& s : e_) {
        if (!s.exact()) return false;
        for (const auto& [k, c] : s.raw_terms())
            if (k != 0) return false;
    }
    return true;
}

SeriesMatrix SeriesMatrix::embed_gln_sln() const {
    if (tag_ != GroupTag::GL) fail(Errc::descriptor_mismatch, "embedding applies to GL matrices");
    PuiseuxSeries d = det();
    if (!series_is_unit(d)) fail(Errc::not_invertible, "determinant " + d.str() + " is not a unit");
    PuiseuxSeries dinv = d.inverted();
    int m = n_ + 1;
    std::vector<PuiseuxSeries> e(static_cast<std::size_t>(m) * m, PuiseuxSeries::zero(ring_, ctx_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) e[static_cast<std::size_t>(i * m + j)] = at(i, j);
    e[static_cast<std::size_t>(n_ * m + n_)] = std::move(dinv);
    return make(GroupTag::SL, m, std::move(e), false);
}

bool SeriesMatrix::agrees_with(const SeriesMatrix& o) const {
    if (n_ != o.n_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!e_[i].agrees_with(o.e_[i])) return false;
    return true;
}

bool operator==(const SeriesMatrix& a, const SeriesMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
        if (!(a.e_[i] == b.e_[i])) return false;
    return true;
}

std::string SeriesMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
        s += "[";
        for (int j = 0; j < n_; ++j) {
            s += at(i, j).str();
            if (j + 1 < n_) s += ", ";
        }
        s += "]";
        if (i + 1 < n_) s += ",";
    }
    return s + "]";
}

// ---------------------------------------------------------------- PolyMatrix

PolyMatrix PolyMatrix::identity(int n, RingPtr ring, CtxPtr ctx) {
    PolyMatrix m;
    m.n = n;
    m.ring = ring;
    m.ctx = ctx;
    m.e.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.e.push_back(AuxPoly::from_int(ring, ctx, i == j ? 1 : 0));
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n != b.n) fail(Errc::dimension_error, "matrix dimensions differ");
    PolyMatrix r;
    r.n = a.n;
    r.ring = a.ring;
    r.ctx = a.ctx;
    r.e.reserve(a.e.size());
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            AuxPoly acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.e.push_back(std::move(acc));
        }
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n != b.n) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] != b.e[i]) return false;
    return true;
}

bool PolyMatrix::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

PolyMatrix PolyMatrix::substitute(const CtxPtr& target, const std::map<std::string, AuxPoly>& images) const {
    PolyMatrix r;
    r.n = n;
    r.ring = ring;
    r.ctx = target;
    r.e.reserve(e.size());
    for (const auto& p : e) r.e.push_back(p.substitute(target, images));
    return r;
}

namespace {

AuxPoly pdet_rec2(const PolyMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    AuxPoly acc = AuxPoly::zero(m.ring, m.ctx);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> sub_cols;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        AuxPoly term = m.at(rows[0], cols[j]) * pdet_rec2(m, sub_rows, sub_cols);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

} // namespace

AuxPoly PolyMatrix::det() const {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    return pdet_rec2(*this, idx, idx);
}

PolyMatrix PolyMatrix::embed(const CtxPtr& target) const {
    PolyMatrix r;
    r.n = n;
    r.ring = ring;
    r.ctx = target;
    r.e.reserve(e.size());
    for (const auto& p : e) r.e.push_back(p.embed(target));
    return r;
}

PolyMatrix PolyMatrix::adjugate() const {
    PolyMatrix r = identity(n, ring, ctx);
    if (n == 1) return r;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> rows, cols;
            for (int k = 0; k < n; ++k) {
                if (k != i) rows.push_back(k);
                if (k != j) cols.push_back(k);
            }
            AuxPoly minor = pdet_rec2(*this, rows, cols);
            r.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return r;
}

PolyMatrix PolyMatrix::inverse() const {
    AuxPoly d = det();
    if (!d.is_unit_monomial()) fail(Errc::not_invertible, "matrix determinant " + d.str() + " is not a unit");
    PolyMatrix adj = adjugate();
    AuxPoly dinv = d.inv_unit();
    for (auto& p : adj.e) p = p * dinv;
    return adj;
}

std::string PolyMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
        s += "[";
        for (int j = 0; j < n; ++j) {
            s += at(i, j).str();
            if (j + 1 < n) s += ", ";
        }
        s += "]";
        if (i + 1 < n) s += ",";
    }
    return s + "]";
}

} // namespace ramres
