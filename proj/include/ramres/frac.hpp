#ifndef RAMRES_FRAC_HPP
#define RAMRES_FRAC_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "ramres/error.hpp"

namespace ramres {

// Reduced fraction with machine-word parts. Used for exponents and for the
// index r = m/n; the convention r = m/n always means gcd(m, n) = 1, n >= 1.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) fail(Errc::internal_check, "fraction with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    friend Frac operator+(Frac a, Frac b) { return Frac(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Frac operator-(Frac a, Frac b) { return Frac(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Frac operator*(Frac a, Frac b) { return Frac(a.num * b.num, a.den * b.den); }
    friend Frac operator/(Frac a, Frac b) {
        if (b.num == 0) fail(Errc::internal_check, "fraction division by zero");
        return Frac(a.num * b.den, a.den * b.num);
    }
    Frac operator-() const { Frac r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
    friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Frac& a, const Frac& b) { return b < a; }
    friend bool operator>=(const Frac& a, const Frac& b) { return b <= a; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace ramres

#endif
