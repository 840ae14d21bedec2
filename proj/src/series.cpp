#include "ramres/series.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace ramres {

namespace {

constexpr long long kInf = LLONG_MAX / 8;

long long sat_add(long long a, long long b) {
    if (a >= kInf || b >= kInf) return kInf;
    long long s = a + b;
    return s >= kInf ? kInf : s;
}

// Generalized binomial C(k, j) for integer k (possibly negative); always an
// integer, computed incrementally so every division is exact.
mpz_class binom_int(long long k, unsigned long long j) {
    mpz_class c = 1;
    for (unsigned long long i = 1; i <= j; ++i) {
        c *= mpz_class(static_cast<long>(k)) - static_cast<long>(i - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return c;
}

} // namespace

// ---------------------------------------------------------------- basics

void PuiseuxSeries::insert_term(long long k, const AuxPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        AuxPoly s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = std::move(s);
    }
}

void PuiseuxSeries::drop_beyond_prec() {
    if (!prec_) return;
    terms_.erase(terms_.lower_bound(*prec_), terms_.end());
}

PuiseuxSeries PuiseuxSeries::zero(RingPtr ring, CtxPtr ctx) {
    PuiseuxSeries s;
    s.ring_ = std::move(ring);
    s.ctx_ = std::move(ctx);
    return s;
}

PuiseuxSeries PuiseuxSeries::constant(RingPtr ring, CtxPtr ctx, const Scalar& c) {
    AuxPoly p = AuxPoly::constant(ring, ctx, c);
    return monomial(std::move(ring), std::move(ctx), std::move(p), Frac(0));
}

PuiseuxSeries PuiseuxSeries::monomial(RingPtr ring, CtxPtr ctx, AuxPoly c, Frac e) {
    PuiseuxSeries s = zero(std::move(ring), std::move(ctx));
    s.denom_ = e.den;
    if (!c.is_zero()) s.terms_.emplace(e.num, std::move(c));
    return s;
}

PuiseuxSeries PuiseuxSeries::t_power(RingPtr ring, CtxPtr ctx, Frac e) {
    AuxPoly one = AuxPoly::from_int(ring, ctx, 1);
    return monomial(std::move(ring), std::move(ctx), std::move(one), e);
}

std::optional<Frac> PuiseuxSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return Frac(terms_.begin()->first, denom_);
}

Frac PuiseuxSeries::gauge() const {
    if (terms_.empty()) {
        if (exact()) fail(Errc::zero_series, "gauge of the zero series");
        fail(Errc::insufficient_precision, "series is zero up to O(t^" + prec()->str() + ")");
    }
    return Frac(terms_.begin()->first, denom_);
}

long long PuiseuxSeries::val_lower_units() const {
    if (!terms_.empty()) return terms_.begin()->first;
    if (prec_) return *prec_;
    return kInf;
}

PuiseuxSeries PuiseuxSeries::with_denom(long long m) const {
    if (m == denom_) return *this;
    if (m % denom_ != 0) fail(Errc::internal_check, "with_denom needs a multiple");
    long long f = m / denom_;
    PuiseuxSeries r = zero(ring_, ctx_);
    r.denom_ = m;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * f, c);
    if (prec_) r.prec_ = *prec_ * f;
    return r;
}

PuiseuxSeries PuiseuxSeries::reduced() const {
    long long g = denom_;
    for (const auto& [k, c] : terms_) {
        g = std::gcd(g, k < 0 ? -k : k);
        if (g == 1) return *this;
    }
    if (g == 1 || g == 0) return *this;
    PuiseuxSeries r = zero(ring_, ctx_);
    r.denom_ = denom_ / g;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k / g, c);
    if (prec_) r.prec_ = (*prec_ + g - 1) / g; // ceil keeps only true claims
    return r;
}

PuiseuxSeries PuiseuxSeries::embed(const CtxPtr& target) const {
    if (ctx_->same(*target)) return *this;
    PuiseuxSeries r = zero(ring_, target);
    r.denom_ = denom_;
    r.prec_ = prec_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.embed(target));
    return r;
}

PuiseuxSeries PuiseuxSeries::truncated(Frac bound) const {
    long long m = std::lcm(denom_, bound.den);
    PuiseuxSeries r = with_denom(m);
    long long b = bound.num * (m / bound.den);
    r.prec_ = r.prec_ ? std::min(*r.prec_, b) : b;
    r.drop_beyond_prec();
    return r;
}

PuiseuxSeries PuiseuxSeries::shifted(Frac e) const {
    long long m = std::lcm(denom_, e.den);
    PuiseuxSeries r = with_denom(m);
    long long s = e.num * (m / e.den);
    std::map<long long, AuxPoly> nt;
    for (auto& [k, c] : r.terms_) nt.emplace(k + s, std::move(c));
    r.terms_ = std::move(nt);
    if (r.prec_) r.prec_ = *r.prec_ + s;
    return r;
}

void PuiseuxSeries::align(PuiseuxSeries& a, PuiseuxSeries& b) {
    long long m = std::lcm(a.denom_, b.denom_);
    a = a.with_denom(m);
    b = b.with_denom(m);
    if (!a.ctx_->same(*b.ctx_)) {
        if (a.ctx_->contains_all_of(*b.ctx_)) b = b.embed(a.ctx_);
        else if (b.ctx_->contains_all_of(*a.ctx_)) a = a.embed(b.ctx_);
        else fail(Errc::descriptor_mismatch, "series contexts are incompatible");
    }
    if (!a.ring_->same(*b.ring_)) fail(Errc::descriptor_mismatch, "series rings differ");
}

std::pair<PuiseuxSeries, PuiseuxSeries> PuiseuxSeries::aligned(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    PuiseuxSeries x = a, y = b;
    align(x, y);
    return {std::move(x), std::move(y)};
}

// ---------------------------------------------------------------- ring ops

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto [x, y] = PuiseuxSeries::aligned(a, b);
    PuiseuxSeries r = std::move(x);
    if (y.prec_) r.prec_ = r.prec_ ? std::min(*r.prec_, *y.prec_) : *y.prec_;
    for (const auto& [k, c] : y.terms_) r.insert_term(k, c);
    r.drop_beyond_prec();
    return r;
}

PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) {
        auto [x, y] = PuiseuxSeries::aligned(a, b);
        return PuiseuxSeries::zero(x.ring_, x.ctx_);
    }
    auto [x, y] = PuiseuxSeries::aligned(a, b);
    long long pa = x.prec_ ? *x.prec_ : kInf;
    long long pb = y.prec_ ? *y.prec_ : kInf;
    long long va = x.val_lower_units();
    long long vb = y.val_lower_units();
    long long p = std::min(pa >= kInf ? kInf : sat_add(pa, vb), pb >= kInf ? kInf : sat_add(pb, va));
    PuiseuxSeries r = PuiseuxSeries::zero(x.ring_, x.ctx_);
    r.denom_ = x.denom_;
    if (p < kInf) r.prec_ = p;
    for (const auto& [ka, ca] : x.terms_) {
        for (const auto& [kb, cb] : y.terms_) {
            long long k = ka + kb;
            if (r.prec_ && k >= *r.prec_) continue;
            r.insert_term(k, ca * cb);
        }
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const AuxPoly& c) const {
    if (c.is_zero()) return zero(ring_, ctx_);
    PuiseuxSeries r = zero(ring_, ctx_);
    r.denom_ = denom_;
    r.prec_ = prec_;
    for (const auto& [k, v] : terms_) r.insert_term(k, v * c);
    return r;
}

PuiseuxSeries PuiseuxSeries::pow(unsigned long long e) const {
    PuiseuxSeries acc = t_power(ring_, ctx_, Frac(0));
    PuiseuxSeries base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------- inversion

PuiseuxSeries PuiseuxSeries::inverted(std::optional<Frac> target) const {
    if (terms_.empty()) {
        if (exact()) fail(Errc::zero_series, "inverse of the zero series");
        fail(Errc::insufficient_precision, "cannot invert a series that is zero up to precision");
    }
    long long v = terms_.begin()->first;
    long long v_red = kInf;
    for (const auto& [k, c] : terms_) {
        if (c.is_unit_monomial()) { v_red = k; break; }
        if (!c.is_nilpotent())
            fail(Errc::non_unit_leading_coefficient,
                 "leading block of " + str() + " is neither unit nor nilpotent");
    }
    if (v_red >= kInf)
        fail(Errc::non_unit_leading_coefficient, "no unit coefficient found in " + str());

    AuxPoly c = terms_.at(v_red);
    PuiseuxSeries base = monomial(ring_, ctx_, c.inv_unit(), Frac(-v_red, denom_));
    PuiseuxSeries h = (*this) * base; // = 1 + higher/nilpotent part
    h.insert_term(0 * h.denom_, AuxPoly::from_int(ring_, h.ctx_, -1));

    // Work bound for the geometric series; ordinary precision tracking in
    // the ring operations supplies the honest final claim.
    std::optional<Frac> bound;
    if (target) {
        bound = *target + Frac(v_red, denom_);
    } else if (prec_) {
        long long b = *prec_ + (v - v_red) - 2 * v_red;
        bound = Frac(b + v_red, denom_);
    }

    PuiseuxSeries acc = t_power(ring_, h.ctx_, Frac(0));
    PuiseuxSeries pw = acc;
    PuiseuxSeries mh = -h;
    bool h_pos = h.terms_.empty() || h.terms_.begin()->first > 0;
    const int jmax = 4096;
    int j = 0;
    while (true) {
        if (++j > jmax)
            fail(Errc::insufficient_precision,
                 "series inversion did not terminate; provide a target precision");
        pw = pw * mh;
        if (bound) pw = pw.truncated(*bound);
        if (pw.is_exact_zero()) break;
        acc = acc + pw; // merges terms and precision claims
        if (pw.terms_.empty()) {
            // Blank with a finite claim: with val(h) > 0 every further power
            // lies strictly beyond it, so the merged claim stands.
            if (h_pos) break;
            fail(Errc::insufficient_precision,
                 "inversion across an uncertain nilpotent head needs exact input");
        }
    }
    PuiseuxSeries r = acc * base;
    if (target) r = r.truncated(*target);
    return r;
}

// ---------------------------------------------------------------- substitutions

PuiseuxSeries PuiseuxSeries::subst_sigma(Frac r, const AuxPoly& amp, std::optional<Frac> target) const {
    PuiseuxSeries f = reduced();
    if (f.denom_ != 1)
        fail(Errc::fractional_exponent, "sigma substitution is defined on integer-exponent series");
    if (r < Frac(0)) fail(Errc::internal_check, "sigma substitution needs r >= 0");
    long long m = r.num, n = r.den;
    bool has_neg = !f.terms_.empty() && f.terms_.begin()->first < 0;
    if (m == 0 && has_neg)
        fail(Errc::negative_exponent_present,
             "sigma_0 on a Laurent series: use the lambda rotation instead");

    CtxPtr tctx = amp.ctx();
    if (!tctx->contains_all_of(*ctx_))
        fail(Errc::descriptor_mismatch, "amplitude context must contain the series context");

    long long tunits = kInf; // cutoff in 1/n units
    if (target) {
        // Re-express the cutoff in 1/n units, rounding down (safe).
        long long num = target->num * n;
        long long den = target->den;
        tunits = (num >= 0) ? num / den : -((-num + den - 1) / den);
    }
    bool cut = false;
    if (has_neg && m > 0 && tunits >= kInf && f.exact())
        fail(Errc::insufficient_precision, "sigma on negative exponents needs a target precision");

    PuiseuxSeries out = zero(ring_, tctx);
    out.denom_ = n;

    std::vector<AuxPoly> amp_pow = {AuxPoly::from_int(ring_, tctx, 1)};
    auto amp_power = [&](unsigned long long j) -> const AuxPoly& {
        while (amp_pow.size() <= j) amp_pow.push_back(amp_pow.back() * amp);
        return amp_pow[j];
    };

    long long fprec_units = kInf;
    if (f.prec_) fprec_units = (*f.prec_ >= kInf / n) ? kInf : *f.prec_ * n;
    long long cutoff = std::min(tunits, fprec_units);

    for (const auto& [k, c] : f.terms_) {
        AuxPoly ce = c.embed(tctx);
        unsigned long long jcap = (k >= 0) ? static_cast<unsigned long long>(k) : ~0ull;
        for (unsigned long long j = 0; j <= jcap; ++j) {
            long long key = k * n + static_cast<long long>(j) * m;
            if (key >= cutoff) { cut = true; break; }
            mpz_class b = binom_int(k, j);
            Scalar bc = Scalar::from_mpz(ring_, b);
            if (!bc.is_zero()) out.insert_term(key, ce.scaled(bc) * amp_power(j));
        }
    }

    long long p = std::min(kInf, fprec_units);
    if (cut) p = std::min(p, cutoff);
    if (p < kInf) {
        out.prec_ = p;
        out.drop_beyond_prec();
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::subst_lambda(const CtxPtr& target, const std::string& lname) const {
    PuiseuxSeries f = reduced();
    if (f.denom_ != 1)
        fail(Errc::fractional_exponent, "lambda rotation is defined on integer-exponent series");
    int li = target->index_of(lname);
    if (li < 0 || !target->at(static_cast<std::size_t>(li)).invertible)
        fail(Errc::internal_check, "lambda rotation target must contain invertible " + lname);
    if (!target->contains_all_of(*ctx_))
        fail(Errc::descriptor_mismatch, "lambda target context must contain the series context");
    PuiseuxSeries out = zero(ring_, target);
    out.denom_ = 1;
    out.prec_ = f.prec_;
    for (const auto& [k, c] : f.terms_) {
        AuxPoly lam = AuxPoly::variable(ring_, target, lname, static_cast<int>(k));
        out.insert_term(k, c.embed(target) * lam);
    }
    return out;
}

PuiseuxSeries PuiseuxSeries::subst_power(long long d) const {
    if (d <= 0) fail(Errc::internal_check, "subst_power needs d >= 1");
    PuiseuxSeries r = zero(ring_, ctx_);
    r.denom_ = denom_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * d, c);
    if (prec_) r.prec_ = *prec_ * d;
    return r;
}

PuiseuxSeries PuiseuxSeries::frobenius(unsigned e) const {
    std::uint64_t p = ring_->characteristic();
    if (p == 0) fail(Errc::wrong_characteristic, "frobenius needs positive characteristic");
    long long q = 1;
    for (unsigned i = 0; i < e; ++i) q *= static_cast<long long>(p);
    PuiseuxSeries r = zero(ring_, ctx_);
    r.denom_ = denom_;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k * q, c.frobenius(e));
    if (prec_) r.prec_ = *prec_ * q;
    return r;
}

PuiseuxSeries PuiseuxSeries::compose(const PuiseuxSeries& s, std::optional<Frac> target) const {
    PuiseuxSeries f = reduced();
    if (f.denom_ != 1)
        fail(Errc::fractional_exponent, "composition needs integer exponents in the outer series");
    if (s.val_lower_units() <= 0)
        fail(Errc::internal_check, "composition needs a substituted series of positive valuation");
    PuiseuxSeries out = zero(s.ring_, s.ctx_);
    out.denom_ = s.denom_;
    if (f.terms_.empty() && f.exact()) return out;

    std::optional<PuiseuxSeries> sinv;
    std::map<long long, PuiseuxSeries> cache;
    auto s_power = [&](long long k) {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        PuiseuxSeries r = t_power(s.ring_, s.ctx_, Frac(0));
        if (k > 0) r = s.pow(static_cast<unsigned long long>(k));
        else if (k < 0) {
            if (!sinv) sinv = s.inverted(target);
            r = sinv->pow(static_cast<unsigned long long>(-k));
        }
        if (target) r = r.truncated(*target);
        cache.emplace(k, r);
        return r;
    };

    for (const auto& [k, c] : f.terms_) {
        PuiseuxSeries term = s_power(k).scaled(c.embed(s.ctx_));
        out = out + term;
    }
    // The unknown tail of f enters at valuation >= prec * val(s).
    if (f.prec_) {
        Frac cap = Frac(*f.prec_) * Frac(s.val_lower_units(), s.denom_);
        out = out.truncated(cap);
    }
    if (target) out = out.truncated(*target);
    return out;
}

// ---------------------------------------------------------------- queries

AuxPoly PuiseuxSeries::coeff_at(Frac e) const {
    long long m = std::lcm(denom_, e.den);
    PuiseuxSeries f = with_denom(m);
    long long k = e.num * (m / e.den);
    if (f.prec_ && k >= *f.prec_)
        fail(Errc::insufficient_precision, "coefficient at t^" + e.str() + " is beyond O(t^" + prec()->str() + ")");
    auto it = f.terms_.find(k);
    return it == f.terms_.end() ? AuxPoly::zero(ring_, ctx_) : it->second;
}

AuxPoly PuiseuxSeries::specialize_t0() const {
    if (!terms_.empty() && terms_.begin()->first < 0)
        fail(Errc::negative_exponent_present, "specialization at t=0 of " + str());
    if (prec_ && *prec_ <= 0)
        fail(Errc::insufficient_precision, "constant term unknown at precision O(t^" + prec()->str() + ")");
    auto it = terms_.find(0);
    return it == terms_.end() ? AuxPoly::zero(ring_, ctx_) : it->second;
}

bool PuiseuxSeries::integral_certain() const {
    if (!terms_.empty() && terms_.begin()->first < 0) return false;
    return exact() || *prec_ >= 0;
}

bool PuiseuxSeries::is_integral() const {
    if (!terms_.empty() && terms_.begin()->first < 0) return false;
    if (exact() || *prec_ >= 0) return true;
    fail(Errc::insufficient_precision, "integrality undecidable at precision O(t^" + prec()->str() + ")");
}

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    auto [x, y] = PuiseuxSeries::aligned(a, b);
    long long pa = x.prec_ ? *x.prec_ : kInf;
    long long pb = y.prec_ ? *y.prec_ : kInf;
    long long common = std::min(pa, pb);
    auto it = x.terms_.begin();
    auto jt = y.terms_.begin();
    while (it != x.terms_.end() && it->first < common && jt != y.terms_.end() && jt->first < common) {
        if (it->first != jt->first || it->second != jt->second) return false;
        ++it;
        ++jt;
    }
    if ((it != x.terms_.end() && it->first < common) || (jt != y.terms_.end() && jt->first < common))
        return false;
    if (pa == pb) return true;
    fail(Errc::insufficient_precision,
         "series agree on certain coefficients but carry different precision claims");
}

bool PuiseuxSeries::agrees_with(const PuiseuxSeries& b) const {
    auto [x, y] = aligned(*this, b);
    long long pa = x.prec_ ? *x.prec_ : kInf;
    long long pb = y.prec_ ? *y.prec_ : kInf;
    long long common = std::min(pa, pb);
    auto it = x.terms_.begin();
    auto jt = y.terms_.begin();
    while (it != x.terms_.end() && it->first < common && jt != y.terms_.end() && jt->first < common) {
        if (it->first != jt->first || it->second != jt->second) return false;
        ++it;
        ++jt;
    }
    if ((it != x.terms_.end() && it->first < common) || (jt != y.terms_.end() && jt->first < common))
        return false;
    return true;
}

std::string PuiseuxSeries::str() const {
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Frac e(k, denom_);
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && !c.composite_str();
        if (first) {
            if (neg) { s += "-"; cs = cs.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string tp;
        if (e.num != 0) tp = (e == Frac(1)) ? "t" : "t^" + e.str();
        if (tp.empty()) s += c.composite_str() ? "(" + cs + ")" : cs;
        else if (cs == "1") s += tp;
        else s += (c.composite_str() ? "(" + cs + ")" : cs) + "*" + tp;
    }
    if (prec_) {
        if (!first) s += " + ";
        s += "O(t^" + Frac(*prec_, denom_).str() + ")";
    } else if (first) {
        s = "0";
    }
    return s;
}

PuiseuxSeries aux_to_series(const AuxPoly& p, const std::map<std::string, PuiseuxSeries>& images,
                            RingPtr ring, CtxPtr ctx) {
    PuiseuxSeries acc = PuiseuxSeries::zero(ring, ctx);
    for (const auto& [e, c] : p.terms()) {
        PuiseuxSeries term = PuiseuxSeries::constant(ring, ctx, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = images.find(p.ctx()->at(i).name);
            if (it == images.end()) fail(Errc::internal_check, "no series image for " + p.ctx()->at(i).name);
            PuiseuxSeries img = it->second;
            if (e[i] < 0) img = img.inverted();
            term = term * img.pow(static_cast<unsigned long long>(e[i] < 0 ? -e[i] : e[i]));
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace ramres
