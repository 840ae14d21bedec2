#ifndef RAMRES_POLY_HPP
#define RAMRES_POLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ramres/scalar.hpp"

namespace ramres {

class VarContext;
using CtxPtr = std::shared_ptr<const VarContext>;

// Fixed set of auxiliary variables for one construction: {u}, {l}, {v1,v2},
// {l1,l2}, or jet coefficients. Multiplicative variables (l-like) may carry
// negative exponents.
class VarContext {
public:
    struct Var {
        std::string name;
        bool invertible = false;
    };

    static CtxPtr make(std::vector<Var> vars);
    static CtxPtr constants(); // empty context

    // Common contexts.
    static CtxPtr u();            // {u}
    static CtxPtr lambda();       // {l}, invertible
    static CtxPtr v1v2();         // {v1, v2}
    static CtxPtr lambda12();     // {l1, l2}, invertible

    std::size_t size() const { return vars_.size(); }
    const Var& at(std::size_t i) const { return vars_[i]; }
    int index_of(const std::string& name) const; // -1 if absent
    bool contains_all_of(const VarContext& other) const;
    bool same(const VarContext& other) const;

private:
    std::vector<Var> vars_;
};

using Exps = std::vector<int>; // exponent vector parallel to the context

// Sparse multivariate polynomial over a Scalar ring; zero coefficients are
// never stored, so equality is structural.
class AuxPoly {
public:
    AuxPoly() = default;

    static AuxPoly zero(RingPtr ring, CtxPtr ctx);
    static AuxPoly constant(RingPtr ring, CtxPtr ctx, Scalar c);
    static AuxPoly from_int(RingPtr ring, CtxPtr ctx, long long v);
    static AuxPoly variable(RingPtr ring, CtxPtr ctx, const std::string& name, int exp = 1);
    static AuxPoly monomial(RingPtr ring, CtxPtr ctx, Exps e, Scalar c);

    const RingPtr& ring() const { return ring_; }
    const CtxPtr& ctx() const { return ctx_; }
    const std::map<Exps, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const; // coefficient of the empty monomial
    bool is_one() const;
    // Unit = single monomial with unit coefficient supported on invertible
    // variables only.
    bool is_unit_monomial() const;
    bool is_nilpotent() const; // all coefficients nilpotent
    bool uses_var(const std::string& name) const;
    int degree_in(const std::string& name) const; // max |exponent|, 0 if absent

    AuxPoly operator-() const;
    friend AuxPoly operator+(const AuxPoly& a, const AuxPoly& b);
    friend AuxPoly operator-(const AuxPoly& a, const AuxPoly& b);
    friend AuxPoly operator*(const AuxPoly& a, const AuxPoly& b);
    AuxPoly scaled(const Scalar& c) const;
    AuxPoly pow(unsigned long long e) const;
    AuxPoly inv_unit() const; // inverse of a unit monomial

    friend bool operator==(const AuxPoly& a, const AuxPoly& b);
    friend bool operator!=(const AuxPoly& a, const AuxPoly& b) { return !(a == b); }

    // Re-express over a context containing all variables of this one.
    AuxPoly embed(const CtxPtr& target) const;

    // Ring homomorphism determined by variable images; every variable of the
    // context must be assigned, invertible variables to unit monomials.
    AuxPoly substitute(const CtxPtr& target,
                       const std::map<std::string, AuxPoly>& images) const;
    Scalar specialize(const std::map<std::string, Scalar>& values) const;

    // Monomial-wise x -> x^(p^e); a ring map in characteristic p.
    AuxPoly frobenius(unsigned e) const;

    std::string str() const;
    bool composite_str() const;

private:
    RingPtr ring_;
    CtxPtr ctx_;
    std::map<Exps, Scalar> terms_;

    void insert_term(const Exps& e, const Scalar& c);
    void check_exponents(const Exps& e) const;
};

} // namespace ramres

#endif
