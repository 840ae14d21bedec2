#ifndef RAMRES_SERIES_HPP
#define RAMRES_SERIES_HPP

#include <map>
#include <optional>
#include <string>

#include "ramres/frac.hpp"
#include "ramres/poly.hpp"

namespace ramres {

// Truncated Puiseux series: finitely many certain coefficients on exponents
// in (1/denom)Z plus a precision claim. A coefficient is stored only if it
// is provably correct; prec = nullopt means the series is known exactly (a
// Laurent polynomial). Keys are exponents scaled by denom.
class PuiseuxSeries {
public:
    PuiseuxSeries() = default;

    static PuiseuxSeries zero(RingPtr ring, CtxPtr ctx); // exact zero
    static PuiseuxSeries constant(RingPtr ring, CtxPtr ctx, const Scalar& c);
    static PuiseuxSeries monomial(RingPtr ring, CtxPtr ctx, AuxPoly c, Frac e);
    static PuiseuxSeries t_power(RingPtr ring, CtxPtr ctx, Frac e);

    const RingPtr& ring() const { return ring_; }
    const CtxPtr& ctx() const { return ctx_; }
    long long denom() const { return denom_; }
    const std::map<long long, AuxPoly>& raw_terms() const { return terms_; }
    bool exact() const { return !prec_.has_value(); }
    std::optional<Frac> prec() const {
        if (!prec_) return std::nullopt;
        return Frac(*prec_, denom_);
    }

    bool is_exact_zero() const { return exact() && terms_.empty(); }
    // Smallest certain exponent, if any coefficient is known nonzero.
    std::optional<Frac> valuation() const;
    Frac gauge() const; // errors: zero_series (exact 0), insufficient_precision

    PuiseuxSeries with_denom(long long m) const;   // m a multiple of denom
    PuiseuxSeries reduced() const;                 // minimal denominator
    PuiseuxSeries embed(const CtxPtr& target) const;
    PuiseuxSeries truncated(Frac bound) const;     // drop info at exponents >= bound
    PuiseuxSeries shifted(Frac e) const;           // multiply by t^e

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);
    PuiseuxSeries scaled(const AuxPoly& c) const;
    PuiseuxSeries pow(unsigned long long e) const;

    // Multiplicative inverse. The leading coefficient must be a unit up to
    // nilpotents; target caps the work when the inverse is an infinite
    // series of an exactly-known input.
    PuiseuxSeries inverted(std::optional<Frac> target = std::nullopt) const;

    // t -> t(1 + amp * t^r), r = m/n >= 0, on integer-exponent series; amp is
    // a polynomial of the target context (usually the variable u).
    PuiseuxSeries subst_sigma(Frac r, const AuxPoly& amp, std::optional<Frac> target = std::nullopt) const;
    // t -> l t on integer-exponent series; coefficient at t^k picks up l^k.
    PuiseuxSeries subst_lambda(const CtxPtr& target, const std::string& lname) const;
    // t -> T^d; exponents and precision scale by d.
    PuiseuxSeries subst_power(long long d) const;
    // x -> x^(p^e) on coefficients and t alike (characteristic p).
    PuiseuxSeries frobenius(unsigned e) const;

    // Entire series substituted for t; s must have positive valuation with
    // unit-up-to-nilpotents leading part when negative exponents appear.
    PuiseuxSeries compose(const PuiseuxSeries& s, std::optional<Frac> target = std::nullopt) const;

    AuxPoly coeff_at(Frac e) const; // errors: insufficient_precision
    AuxPoly specialize_t0() const;  // errors: negative_exponent_present, insufficient_precision

    // True when every exponent < 0 coefficient is certainly zero.
    bool integral_certain() const;
    // Throws insufficient_precision when integrality is undecidable.
    bool is_integral() const;

    // Equality per the precision contract: agreement on certain
    // coefficients with equal claims; throws insufficient_precision when
    // the claims differ but the common region agrees.
    friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);
    friend bool operator!=(const PuiseuxSeries& a, const PuiseuxSeries& b) { return !(a == b); }
    bool agrees_with(const PuiseuxSeries& b) const; // never throws

    std::string str() const;

private:
    RingPtr ring_;
    CtxPtr ctx_;
    long long denom_ = 1;
    std::map<long long, AuxPoly> terms_;
    std::optional<long long> prec_;

    void insert_term(long long k, const AuxPoly& c);
    void drop_beyond_prec();
    static void align(PuiseuxSeries& a, PuiseuxSeries& b);
    static std::pair<PuiseuxSeries, PuiseuxSeries> aligned(const PuiseuxSeries& a, const PuiseuxSeries& b);
    long long val_lower_units() const; // min key, or prec for blank inexact, huge for exact zero
};

// Evaluate a polynomial with series values for its variables.
PuiseuxSeries aux_to_series(const AuxPoly& p, const std::map<std::string, PuiseuxSeries>& images,
                            RingPtr ring, CtxPtr ctx);

} // namespace ramres

#endif
