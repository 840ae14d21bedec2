#ifndef RAMRES_SCALAR_HPP
#define RAMRES_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ramres/error.hpp"

namespace ramres {

enum class RingKind { rational, prime_field, rational_function, dual_numbers };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Descriptor of an exact base ring. All arithmetic is exact; no floating
// point anywhere. Rational-function descriptors require a field base and a
// single transcendental; dual numbers adjoin e with e^2 = 0.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr rationals();
    static RingPtr prime_field(std::uint64_t p);
    static RingPtr rational_function(RingPtr base, std::string var);
    static RingPtr dual_numbers(RingPtr base);
    static RingPtr parse(const std::string& desc); // "q", "fp:<p>", "fp:<p>(a)", "dual:q"

    RingKind kind() const { return kind_; }
    std::uint64_t prime() const { return p_; }
    const RingPtr& base() const { return base_; }
    const std::string& var() const { return var_; }

    std::uint64_t characteristic() const;
    bool is_field() const;
    bool reduced() const { return kind_ != RingKind::dual_numbers; }
    bool same(const Ring& other) const;
    std::string describe() const;

private:
    Ring() = default;
    RingKind kind_ = RingKind::rational;
    std::uint64_t p_ = 0;
    RingPtr base_;
    std::string var_;
};

class Scalar;

// Reduced fraction of dense univariate polynomials over the base ring.
// Denominator is monic and coprime to the numerator.
struct RatFuncVal {
    std::vector<Scalar> num; // coefficients, low degree first, no trailing zeros
    std::vector<Scalar> den;
};

// x + y*e with e^2 = 0; parts live in the base ring.
struct DualVal {
    std::vector<Scalar> parts; // exactly {x, y}
};

// Immutable element of an exact base ring, with decidable equality on
// canonical forms.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const RingPtr& r);
    static Scalar one(const RingPtr& r);
    static Scalar from_int(const RingPtr& r, long long v);
    static Scalar from_mpz(const RingPtr& r, const mpz_class& v);
    static Scalar from_fraction(const RingPtr& r, long long num, long long den);
    static Scalar variable(const RingPtr& r);            // the transcendental of a rational-function ring
    static Scalar epsilon(const RingPtr& r);             // the nilpotent of a dual-numbers ring
    static Scalar dual(const RingPtr& r, Scalar x, Scalar y);
    static Scalar lift(const RingPtr& r, Scalar base_value); // embed base-ring value

    const RingPtr& ring() const { return ring_; }
    bool valid() const { return ring_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;
    bool is_unit() const;
    // True exactly when some power vanishes; over our rings this means the
    // dual-numbers part with zero constant term (or zero itself).
    bool is_nilpotent() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar inv() const;
    Scalar pow(unsigned long long e) const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Dual-numbers accessors (constant and nilpotent part).
    Scalar dual_x() const;
    Scalar dual_y() const;

    std::string str() const;
    // True when str() needs parentheses inside a product.
    bool composite_str() const;

private:
    using Payload = std::variant<mpq_class, std::uint64_t, RatFuncVal, DualVal>;
    RingPtr ring_;
    Payload v_;

    Scalar(RingPtr r, Payload p) : ring_(std::move(r)), v_(std::move(p)) {}
    static void check_same_ring(const Scalar& a, const Scalar& b);
    // Canonicalizing factory for rational-function payloads.
    static Scalar make_rf(const RingPtr& ring, std::vector<Scalar> num, std::vector<Scalar> den);
};

} // namespace ramres

#endif
