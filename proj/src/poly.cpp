#include "ramres/poly.hpp"

#include <algorithm>
#include <numeric>

namespace ramres {

// ---------------------------------------------------------------- VarContext

CtxPtr VarContext::make(std::vector<Var> vars) {
    auto c = std::make_shared<VarContext>();
    c->vars_ = std::move(vars);
    for (std::size_t i = 0; i < c->vars_.size(); ++i)
        for (std::size_t j = i + 1; j < c->vars_.size(); ++j)
            if (c->vars_[i].name == c->vars_[j].name)
                fail(Errc::internal_check, "duplicate variable " + c->vars_[i].name);
    return c;
}

CtxPtr VarContext::constants() {
    static CtxPtr c = make({});
    return c;
}

CtxPtr VarContext::u() {
    static CtxPtr c = make({{"u", false}});
    return c;
}

CtxPtr VarContext::lambda() {
    static CtxPtr c = make({{"l", true}});
    return c;
}

CtxPtr VarContext::v1v2() {
    static CtxPtr c = make({{"v1", false}, {"v2", false}});
    return c;
}

CtxPtr VarContext::lambda12() {
    static CtxPtr c = make({{"l1", true}, {"l2", true}});
    return c;
}

int VarContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

bool VarContext::contains_all_of(const VarContext& other) const {
    for (const auto& v : other.vars_) {
        int i = index_of(v.name);
        if (i < 0 || vars_[i].invertible != v.invertible) return false;
    }
    return true;
}

bool VarContext::same(const VarContext& other) const {
    if (vars_.size() != other.vars_.size()) return false;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name != other.vars_[i].name || vars_[i].invertible != other.vars_[i].invertible)
            return false;
    return true;
}

// ---------------------------------------------------------------- AuxPoly

void AuxPoly::check_exponents(const Exps& e) const {
    if (e.size() != ctx_->size()) fail(Errc::internal_check, "exponent arity mismatch");
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && !ctx_->at(i).invertible)
            fail(Errc::internal_check, "negative exponent on non-invertible variable " + ctx_->at(i).name);
}

void AuxPoly::insert_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        Scalar s = it->second + c;
        if (s.is_zero()) terms_.erase(it);
        else it->second = std::move(s);
    }
}

AuxPoly AuxPoly::zero(RingPtr ring, CtxPtr ctx) {
    AuxPoly p;
    p.ring_ = std::move(ring);
    p.ctx_ = std::move(ctx);
    return p;
}

AuxPoly AuxPoly::constant(RingPtr ring, CtxPtr ctx, Scalar c) {
    AuxPoly p = zero(std::move(ring), std::move(ctx));
    if (!c.is_zero()) p.terms_.emplace(Exps(p.ctx_->size(), 0), std::move(c));
    return p;
}

AuxPoly AuxPoly::from_int(RingPtr ring, CtxPtr ctx, long long v) {
    Scalar c = Scalar::from_int(ring, v);
    return constant(std::move(ring), std::move(ctx), std::move(c));
}

AuxPoly AuxPoly::variable(RingPtr ring, CtxPtr ctx, const std::string& name, int exp) {
    int i = ctx->index_of(name);
    if (i < 0) fail(Errc::internal_check, "variable " + name + " not in context");
    Exps e(ctx->size(), 0);
    e[static_cast<std::size_t>(i)] = exp;
    Scalar c = Scalar::one(ring);
    return monomial(std::move(ring), std::move(ctx), std::move(e), std::move(c));
}

AuxPoly AuxPoly::monomial(RingPtr ring, CtxPtr ctx, Exps e, Scalar c) {
    AuxPoly p = zero(std::move(ring), std::move(ctx));
    p.check_exponents(e);
    if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool AuxPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Scalar AuxPoly::constant_value() const {
    Exps z(ctx_->size(), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

bool AuxPoly::is_one() const { return is_constant() && constant_value().is_one(); }

bool AuxPoly::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    if (!c.is_unit()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0 && !ctx_->at(i).invertible) return false;
    return true;
}

bool AuxPoly::is_nilpotent() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_nilpotent(); });
}

bool AuxPoly::uses_var(const std::string& name) const {
    int i = ctx_->index_of(name);
    if (i < 0) return false;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(i)] != 0) return true;
    return false;
}

int AuxPoly::degree_in(const std::string& name) const {
    int i = ctx_->index_of(name);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::abs(e[static_cast<std::size_t>(i)]));
    return d;
}

AuxPoly AuxPoly::operator-() const {
    AuxPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

static void check_compatible(const AuxPoly& a, const AuxPoly& b) {
    if (!a.ring()->same(*b.ring()) || !a.ctx()->same(*b.ctx()))
        fail(Errc::descriptor_mismatch, "polynomials over different rings or contexts");
}

AuxPoly operator+(const AuxPoly& a, const AuxPoly& b) {
    check_compatible(a, b);
    AuxPoly r = a;
    for (const auto& [e, c] : b.terms_) r.insert_term(e, c);
    return r;
}

AuxPoly operator-(const AuxPoly& a, const AuxPoly& b) { return a + (-b); }

AuxPoly operator*(const AuxPoly& a, const AuxPoly& b) {
    check_compatible(a, b);
    AuxPoly r = AuxPoly::zero(a.ring_, a.ctx_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Exps e(a.ctx_->size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    }
    return r;
}

AuxPoly AuxPoly::scaled(const Scalar& c) const {
    AuxPoly r = zero(ring_, ctx_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.insert_term(e, v * c);
    return r;
}

AuxPoly AuxPoly::pow(unsigned long long e) const {
    AuxPoly acc = from_int(ring_, ctx_, 1);
    AuxPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

AuxPoly AuxPoly::inv_unit() const {
    if (!is_unit_monomial())
        fail(Errc::non_unit_lambda_image, "polynomial " + str() + " is not a unit monomial");
    const auto& [e, c] = *terms_.begin();
    Exps ie(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ie[i] = -e[i];
    return monomial(ring_, ctx_, std::move(ie), c.inv());
}

bool operator==(const AuxPoly& a, const AuxPoly& b) {
    check_compatible(a, b);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = a.terms_.begin();
    auto jt = b.terms_.begin();
    for (; it != a.terms_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

AuxPoly AuxPoly::embed(const CtxPtr& target) const {
    if (ctx_->same(*target)) return *this;
    if (!target->contains_all_of(*ctx_))
        fail(Errc::descriptor_mismatch, "target context does not contain source variables");
    std::vector<int> where(ctx_->size());
    for (std::size_t i = 0; i < ctx_->size(); ++i) where[i] = target->index_of(ctx_->at(i).name);
    AuxPoly r = zero(ring_, target);
    for (const auto& [e, c] : terms_) {
        Exps ne(target->size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(where[i])] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

AuxPoly AuxPoly::substitute(const CtxPtr& target, const std::map<std::string, AuxPoly>& images) const {
    std::vector<const AuxPoly*> img(ctx_->size(), nullptr);
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto it = images.find(ctx_->at(i).name);
        if (it == images.end())
            fail(Errc::internal_check, "no image for variable " + ctx_->at(i).name);
        if (!it->second.ctx()->same(*target) || !it->second.ring()->same(*ring_))
            fail(Errc::descriptor_mismatch, "image of " + ctx_->at(i).name + " lives in wrong context");
        if (ctx_->at(i).invertible && !it->second.is_unit_monomial())
            fail(Errc::non_unit_lambda_image,
                 "invertible variable " + ctx_->at(i).name + " must map to a unit monomial");
        img[i] = &it->second;
    }
    AuxPoly r = zero(ring_, target);
    for (const auto& [e, c] : terms_) {
        AuxPoly term = constant(ring_, target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) term = term * img[i]->pow(static_cast<unsigned long long>(e[i]));
            else term = term * img[i]->inv_unit().pow(static_cast<unsigned long long>(-e[i]));
        }
        r = r + term;
    }
    return r;
}

Scalar AuxPoly::specialize(const std::map<std::string, Scalar>& values) const {
    std::vector<const Scalar*> val(ctx_->size(), nullptr);
    for (std::size_t i = 0; i < ctx_->size(); ++i) {
        auto it = values.find(ctx_->at(i).name);
        if (it == values.end()) fail(Errc::internal_check, "no value for variable " + ctx_->at(i).name);
        if (ctx_->at(i).invertible && !it->second.is_unit())
            fail(Errc::non_unit_lambda_image, "invertible variable " + ctx_->at(i).name + " needs a unit value");
        val[i] = &it->second;
    }
    Scalar acc = Scalar::zero(ring_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] > 0) t = t * val[i]->pow(static_cast<unsigned long long>(e[i]));
            else t = t * val[i]->inv().pow(static_cast<unsigned long long>(-e[i]));
        }
        acc = acc + t;
    }
    return acc;
}

AuxPoly AuxPoly::frobenius(unsigned e) const {
    std::uint64_t p = ring_->characteristic();
    if (p == 0) fail(Errc::wrong_characteristic, "frobenius needs positive characteristic");
    unsigned long long q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    AuxPoly r = zero(ring_, ctx_);
    for (const auto& [ex, c] : terms_) {
        Exps ne(ex.size());
        for (std::size_t i = 0; i < ex.size(); ++i) ne[i] = ex[i] * static_cast<int>(q);
        r.insert_term(ne, c.pow(q));
    }
    return r;
}

// Graded-lex print order: total degree first, then lexicographic on the
// exponent vector.
std::string AuxPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exps, Scalar>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    auto total = [](const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int ta = total(a->first), tb = total(b->first);
        if (ta != tb) return ta < tb;
        return a->first < b->first;
    });
    std::string s;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && !c.composite_str();
        if (first) {
            if (neg) { s += "-"; cs = cs.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) cs = cs.substr(1);
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ctx_->at(i).name;
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            s += c.composite_str() ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            s += mono;
        } else {
            s += (c.composite_str() ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return s;
}

bool AuxPoly::composite_str() const {
    if (terms_.size() > 1) return true;
    if (terms_.empty()) return false;
    const auto& [e, c] = *terms_.begin();
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    return c.composite_str() || (has_var && !c.is_one());
}

} // namespace ramres
