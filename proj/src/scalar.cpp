#include "ramres/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace ramres {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::descriptor_mismatch: return "descriptor mismatch";
        case Errc::not_a_unit: return "not a unit";
        case Errc::non_unit_lambda_image: return "non-unit lambda image";
        case Errc::insufficient_precision: return "insufficient precision";
        case Errc::fractional_exponent: return "fractional exponent";
        case Errc::zero_series: return "zero series";
        case Errc::negative_exponent_present: return "negative exponent present";
        case Errc::non_unit_leading_coefficient: return "non-unit leading coefficient";
        case Errc::not_invertible: return "not invertible";
        case Errc::integral_input: return "integral input";
        case Errc::residue_not_integral: return "residue not integral";
        case Errc::trivial_residue: return "trivial residue";
        case Errc::wrong_characteristic: return "wrong characteristic";
        case Errc::search_bound_exceeded: return "search bound exceeded";
        case Errc::not_a_field: return "not a field";
        case Errc::linear_system_inconsistent: return "linear system inconsistent";
        case Errc::unsupported_cell_type: return "unsupported cell type";
        case Errc::syntax_error: return "syntax error";
        case Errc::dimension_error: return "dimension error";
        case Errc::non_unit_leading_jet_coefficient: return "non-unit leading jet coefficient";
        case Errc::non_integral_index: return "non-integral index";
        case Errc::internal_check: return "internal check";
    }
    return "unknown";
}

// ---------------------------------------------------------------- Ring

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

RingPtr Ring::rationals() {
    static RingPtr q = [] {
        auto r = std::shared_ptr<Ring>(new Ring());
        r->kind_ = RingKind::rational;
        return RingPtr(r);
    }();
    return q;
}

RingPtr Ring::prime_field(std::uint64_t p) {
    if (p >= (1ull << 31)) fail(Errc::dimension_error, "prime too large for machine-word arithmetic");
    if (!is_prime_u64(p)) fail(Errc::dimension_error, "fp:<p> requires p prime, got " + std::to_string(p));
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::prime_field;
    r->p_ = p;
    return r;
}

RingPtr Ring::rational_function(RingPtr base, std::string var) {
    if (!base || !base->is_field()) fail(Errc::not_a_field, "rational-function base must be a field");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::rational_function;
    r->base_ = std::move(base);
    r->var_ = std::move(var);
    return r;
}

RingPtr Ring::dual_numbers(RingPtr base) {
    if (!base || !base->is_field()) fail(Errc::not_a_field, "dual-numbers base must be a field");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->kind_ = RingKind::dual_numbers;
    r->base_ = std::move(base);
    return r;
}

RingPtr Ring::parse(const std::string& desc) {
    if (desc == "q") return rationals();
    if (desc == "dual:q") return dual_numbers(rationals());
    if (desc.rfind("fp:", 0) == 0) {
        std::string rest = desc.substr(3);
        bool with_var = false;
        if (rest.size() > 3 && rest.substr(rest.size() - 3) == "(a)") {
            with_var = true;
            rest = rest.substr(0, rest.size() - 3);
        }
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            fail(Errc::syntax_error, "bad field descriptor '" + desc + "'");
        std::uint64_t p = std::stoull(rest);
        RingPtr fp = prime_field(p);
        return with_var ? rational_function(fp, "a") : fp;
    }
    fail(Errc::syntax_error, "unknown field descriptor '" + desc + "' (expected q, fp:<p>, fp:<p>(a), dual:q)");
}

std::uint64_t Ring::characteristic() const {
    switch (kind_) {
        case RingKind::rational: return 0;
        case RingKind::prime_field: return p_;
        default: return base_->characteristic();
    }
}

bool Ring::is_field() const {
    switch (kind_) {
        case RingKind::rational:
        case RingKind::prime_field:
        case RingKind::rational_function: return true;
        case RingKind::dual_numbers: return false;
    }
    return false;
}

bool Ring::same(const Ring& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case RingKind::rational: return true;
        case RingKind::prime_field: return p_ == o.p_;
        case RingKind::rational_function: return var_ == o.var_ && base_->same(*o.base_);
        case RingKind::dual_numbers: return base_->same(*o.base_);
    }
    return false;
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::rational: return "q";
        case RingKind::prime_field: return "fp:" + std::to_string(p_);
        case RingKind::rational_function: return base_->describe() + "(" + var_ + ")";
        case RingKind::dual_numbers: return "dual:" + base_->describe();
    }
    return "?";
}

// ------------------------------------------------- dense polynomial helpers

// Payload arithmetic for rational functions: dense univariate polynomials
// over a field, low degree first, no trailing zeros.
namespace {

using Poly = std::vector<Scalar>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size() && i < b.size()) r[i] = a[i] + b[i];
        else if (i < a.size()) r[i] = a[i];
        else r[i] = b[i];
    }
    poly_trim(r);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b, const RingPtr& base) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(base));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = r[i + j] + a[i] * b[j];
    poly_trim(r);
    return r;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& rem, const RingPtr& base) {
    if (b.empty()) fail(Errc::internal_check, "polynomial division by zero");
    rem = a;
    poly_trim(rem);
    q.assign(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, Scalar::zero(base));
    Scalar lead_inv = b.back().inv();
    while (rem.size() >= b.size()) {
        Scalar c = rem.back() * lead_inv;
        std::size_t shift = rem.size() - b.size();
        q[shift] = q[shift] + c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = rem[shift + i] - c * b[i];
        poly_trim(rem);
    }
    poly_trim(q);
}

Poly poly_gcd(Poly a, Poly b, const RingPtr& base) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r, base);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar li = a.back().inv(); // monic
        for (auto& c : a) c = c * li;
    }
    return a;
}

} // namespace

Scalar Scalar::make_rf(const RingPtr& ring, Poly num, Poly den) {
    const RingPtr& base = ring->base();
    poly_trim(num);
    poly_trim(den);
    if (den.empty()) fail(Errc::not_a_unit, "rational function with zero denominator");
    RatFuncVal rf;
    if (num.empty()) {
        rf.den = {one(base)};
        return Scalar(ring, std::move(rf));
    }
    Poly g = poly_gcd(num, den, base);
    if (g.size() > 1) {
        Poly q, r;
        poly_divmod(num, g, q, r, base);
        num = std::move(q);
        poly_divmod(den, g, q, r, base);
        den = std::move(q);
    }
    Scalar li = den.back().inv(); // monic denominator
    for (auto& c : den) c = c * li;
    for (auto& c : num) c = c * li;
    rf.num = std::move(num);
    rf.den = std::move(den);
    return Scalar(ring, std::move(rf));
}

// ---------------------------------------------------------------- Scalar

void Scalar::check_same_ring(const Scalar& a, const Scalar& b) {
    if (!a.ring_ || !b.ring_ || !a.ring_->same(*b.ring_))
        fail(Errc::descriptor_mismatch, "operands live in different rings");
}

Scalar Scalar::zero(const RingPtr& r) { return from_int(r, 0); }
Scalar Scalar::one(const RingPtr& r) { return from_int(r, 1); }

Scalar Scalar::from_int(const RingPtr& r, long long v) {
    return from_mpz(r, mpz_class(static_cast<long>(v)));
}

Scalar Scalar::from_mpz(const RingPtr& r, const mpz_class& v) {
    switch (r->kind()) {
        case RingKind::rational: return Scalar(r, mpq_class(v));
        case RingKind::prime_field: {
            mpz_class m = v % static_cast<unsigned long>(r->prime());
            if (m < 0) m += static_cast<unsigned long>(r->prime());
            return Scalar(r, static_cast<std::uint64_t>(m.get_ui()));
        }
        case RingKind::rational_function: {
            Poly num;
            Scalar c = from_mpz(r->base(), v);
            if (!c.is_zero()) num.push_back(c);
            return make_rf(r, std::move(num), {one(r->base())});
        }
        case RingKind::dual_numbers: {
            DualVal d;
            d.parts = {from_mpz(r->base(), v), zero(r->base())};
            return Scalar(r, std::move(d));
        }
    }
    fail(Errc::internal_check, "unreachable");
}

Scalar Scalar::from_fraction(const RingPtr& r, long long num, long long den) {
    if (den == 0) fail(Errc::syntax_error, "zero denominator");
    Scalar d = from_int(r, den);
    if (!d.is_unit())
        fail(Errc::not_a_unit, "denominator " + std::to_string(den) + " is not a unit in " + r->describe());
    return from_int(r, num) * d.inv();
}

Scalar Scalar::variable(const RingPtr& r) {
    if (r->kind() != RingKind::rational_function)
        fail(Errc::descriptor_mismatch, "ring " + r->describe() + " has no transcendental");
    return make_rf(r, {zero(r->base()), one(r->base())}, {one(r->base())});
}

Scalar Scalar::epsilon(const RingPtr& r) {
    if (r->kind() != RingKind::dual_numbers)
        fail(Errc::descriptor_mismatch, "ring " + r->describe() + " has no nilpotent e");
    DualVal d;
    d.parts = {zero(r->base()), one(r->base())};
    return Scalar(r, std::move(d));
}

Scalar Scalar::dual(const RingPtr& r, Scalar x, Scalar y) {
    if (r->kind() != RingKind::dual_numbers) fail(Errc::descriptor_mismatch, "dual() needs a dual-numbers ring");
    DualVal d;
    d.parts = {std::move(x), std::move(y)};
    return Scalar(r, std::move(d));
}

Scalar Scalar::lift(const RingPtr& r, Scalar base_value) {
    switch (r->kind()) {
        case RingKind::rational_function: {
            Poly num;
            if (!base_value.is_zero()) num.push_back(std::move(base_value));
            return make_rf(r, std::move(num), {one(r->base())});
        }
        case RingKind::dual_numbers: {
            DualVal d;
            Scalar z = zero(r->base());
            d.parts = {std::move(base_value), std::move(z)};
            return Scalar(r, std::move(d));
        }
        default:
            fail(Errc::descriptor_mismatch, "lift target must be a composite ring");
    }
}

bool Scalar::is_zero() const {
    switch (ring_->kind()) {
        case RingKind::rational: return std::get<mpq_class>(v_) == 0;
        case RingKind::prime_field: return std::get<std::uint64_t>(v_) == 0;
        case RingKind::rational_function: return std::get<RatFuncVal>(v_).num.empty();
        case RingKind::dual_numbers: {
            const auto& d = std::get<DualVal>(v_);
            return d.parts[0].is_zero() && d.parts[1].is_zero();
        }
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(ring_); }

bool Scalar::is_unit() const {
    switch (ring_->kind()) {
        case RingKind::rational:
        case RingKind::prime_field:
        case RingKind::rational_function: return !is_zero();
        case RingKind::dual_numbers: return std::get<DualVal>(v_).parts[0].is_unit();
    }
    return false;
}

bool Scalar::is_nilpotent() const {
    if (ring_->kind() == RingKind::dual_numbers) return std::get<DualVal>(v_).parts[0].is_zero();
    return is_zero();
}

Scalar Scalar::operator-() const {
    switch (ring_->kind()) {
        case RingKind::rational: return Scalar(ring_, mpq_class(-std::get<mpq_class>(v_)));
        case RingKind::prime_field: {
            std::uint64_t x = std::get<std::uint64_t>(v_);
            return Scalar(ring_, x == 0 ? x : ring_->prime() - x);
        }
        case RingKind::rational_function: {
            RatFuncVal r = std::get<RatFuncVal>(v_);
            r.num = poly_neg(r.num);
            return Scalar(ring_, std::move(r));
        }
        case RingKind::dual_numbers: {
            DualVal d = std::get<DualVal>(v_);
            d.parts[0] = -d.parts[0];
            d.parts[1] = -d.parts[1];
            return Scalar(ring_, std::move(d));
        }
    }
    fail(Errc::internal_check, "unreachable");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same_ring(a, b);
    const RingPtr& ring = a.ring_;
    switch (ring->kind()) {
        case RingKind::rational: {
            mpq_class r = std::get<mpq_class>(a.v_) + std::get<mpq_class>(b.v_);
            r.canonicalize();
            return Scalar(ring, std::move(r));
        }
        case RingKind::prime_field: {
            std::uint64_t r = std::get<std::uint64_t>(a.v_) + std::get<std::uint64_t>(b.v_);
            if (r >= ring->prime()) r -= ring->prime();
            return Scalar(ring, r);
        }
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(a.v_);
            const auto& y = std::get<RatFuncVal>(b.v_);
            Poly num = poly_add(poly_mul(x.num, y.den, ring->base()), poly_mul(y.num, x.den, ring->base()));
            Poly den = poly_mul(x.den, y.den, ring->base());
            return Scalar::make_rf(ring, std::move(num), std::move(den));
        }
        case RingKind::dual_numbers: {
            const auto& x = std::get<DualVal>(a.v_);
            const auto& y = std::get<DualVal>(b.v_);
            DualVal d;
            d.parts = {x.parts[0] + y.parts[0], x.parts[1] + y.parts[1]};
            return Scalar(ring, std::move(d));
        }
    }
    fail(Errc::internal_check, "unreachable");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same_ring(a, b);
    const RingPtr& ring = a.ring_;
    switch (ring->kind()) {
        case RingKind::rational: {
            mpq_class r = std::get<mpq_class>(a.v_) * std::get<mpq_class>(b.v_);
            r.canonicalize();
            return Scalar(ring, std::move(r));
        }
        case RingKind::prime_field:
            return Scalar(ring, mulmod(std::get<std::uint64_t>(a.v_), std::get<std::uint64_t>(b.v_), ring->prime()));
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(a.v_);
            const auto& y = std::get<RatFuncVal>(b.v_);
            return Scalar::make_rf(ring, poly_mul(x.num, y.num, ring->base()), poly_mul(x.den, y.den, ring->base()));
        }
        case RingKind::dual_numbers: {
            const auto& x = std::get<DualVal>(a.v_);
            const auto& y = std::get<DualVal>(b.v_);
            DualVal d;
            d.parts = {x.parts[0] * y.parts[0], x.parts[0] * y.parts[1] + x.parts[1] * y.parts[0]};
            return Scalar(ring, std::move(d));
        }
    }
    fail(Errc::internal_check, "unreachable");
}

Scalar Scalar::inv() const {
    if (!is_unit()) fail(Errc::not_a_unit, "inverse of non-unit " + str() + " in " + ring_->describe());
    switch (ring_->kind()) {
        case RingKind::rational: {
            mpq_class r = 1 / std::get<mpq_class>(v_);
            r.canonicalize();
            return Scalar(ring_, std::move(r));
        }
        case RingKind::prime_field:
            return Scalar(ring_, powmod(std::get<std::uint64_t>(v_), ring_->prime() - 2, ring_->prime()));
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(v_);
            return make_rf(ring_, x.den, x.num);
        }
        case RingKind::dual_numbers: {
            const auto& d = std::get<DualVal>(v_);
            Scalar xi = d.parts[0].inv();
            DualVal r;
            r.parts = {xi, -(xi * xi * d.parts[1])};
            return Scalar(ring_, std::move(r));
        }
    }
    fail(Errc::internal_check, "unreachable");
}

Scalar Scalar::pow(unsigned long long e) const {
    Scalar acc = one(ring_);
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::check_same_ring(a, b);
    switch (a.ring_->kind()) {
        case RingKind::rational: return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
        case RingKind::prime_field: return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(a.v_);
            const auto& y = std::get<RatFuncVal>(b.v_);
            return x.num.size() == y.num.size() && x.den.size() == y.den.size() &&
                   std::equal(x.num.begin(), x.num.end(), y.num.begin()) &&
                   std::equal(x.den.begin(), x.den.end(), y.den.begin());
        }
        case RingKind::dual_numbers: {
            const auto& x = std::get<DualVal>(a.v_);
            const auto& y = std::get<DualVal>(b.v_);
            return x.parts[0] == y.parts[0] && x.parts[1] == y.parts[1];
        }
    }
    return false;
}

Scalar Scalar::dual_x() const {
    if (ring_->kind() != RingKind::dual_numbers) fail(Errc::descriptor_mismatch, "dual_x on non-dual ring");
    return std::get<DualVal>(v_).parts[0];
}

Scalar Scalar::dual_y() const {
    if (ring_->kind() != RingKind::dual_numbers) fail(Errc::descriptor_mismatch, "dual_y on non-dual ring");
    return std::get<DualVal>(v_).parts[1];
}

namespace {

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        if (p[i].is_zero()) continue;
        std::string c = p[i].str();
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) { s += "-"; c = c.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        first = false;
        if (i == 0) {
            s += c;
        } else {
            std::string v = var + (i == 1 ? "" : "^" + std::to_string(i));
            if (c == "1") s += v;
            else s += (p[i].composite_str() ? "(" + c + ")" : c) + "*" + v;
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace

std::string Scalar::str() const {
    switch (ring_->kind()) {
        case RingKind::rational: return std::get<mpq_class>(v_).get_str();
        case RingKind::prime_field: return std::to_string(std::get<std::uint64_t>(v_));
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(v_);
            std::string n = poly_str(x.num, ring_->var());
            if (x.den.size() == 1 && x.den[0].is_one()) return n;
            return "(" + n + ")/(" + poly_str(x.den, ring_->var()) + ")";
        }
        case RingKind::dual_numbers: {
            const auto& d = std::get<DualVal>(v_);
            if (d.parts[1].is_zero()) return d.parts[0].str();
            std::string ys = d.parts[1].str();
            std::string ye;
            if (ys == "1") ye = "e";
            else if (ys == "-1") ye = "-e";
            else ye = (d.parts[1].composite_str() ? "(" + ys + ")*e" : ys + "*e");
            if (d.parts[0].is_zero()) return ye;
            if (!ye.empty() && ye[0] == '-') return d.parts[0].str() + " - " + ye.substr(1);
            return d.parts[0].str() + " + " + ye;
        }
    }
    return "?";
}

bool Scalar::composite_str() const {
    switch (ring_->kind()) {
        case RingKind::rational:
        case RingKind::prime_field: return false;
        case RingKind::rational_function: {
            const auto& x = std::get<RatFuncVal>(v_);
            std::size_t nterms = 0;
            for (const auto& c : x.num)
                if (!c.is_zero()) ++nterms;
            return nterms > 1 || x.num.size() > 1 || !(x.den.size() == 1 && x.den[0].is_one());
        }
        case RingKind::dual_numbers: {
            const auto& d = std::get<DualVal>(v_);
            return !d.parts[0].is_zero() && !d.parts[1].is_zero();
        }
    }
    return true;
}

} // namespace ramres
