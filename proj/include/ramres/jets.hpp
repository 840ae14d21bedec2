#ifndef RAMRES_JETS_HPP
#define RAMRES_JETS_HPP

#include "ramres/indexres.hpp"

namespace ramres {

// Truncated reparameterization t -> a_1 t + a_2 t^2 + ... + a_w t^w with a_1
// a unit; the group law is composition mod t^{w+1}.
class Jet {
public:
    static Jet make(RingPtr ring, CtxPtr ctx, int w, std::vector<AuxPoly> coeffs);
    static Jet identity(RingPtr ring, CtxPtr ctx, int w);
    // phi^r(u): t -> t + u t^{r+1}.
    static Jet phi(int r, const AuxPoly& u, int w);

    const RingPtr& ring() const { return ring_; }
    const CtxPtr& ctx() const { return ctx_; }
    int order() const { return w_; }
    const AuxPoly& coeff(int i) const; // a_i, 1-based

    Jet compose(const Jet& inner) const; // t -> this(inner(t))
    Jet inverted() const;                // compositional inverse
    PuiseuxSeries series() const;        // known mod t^{order+1}

    friend bool operator==(const Jet& a, const Jet& b);
    friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
    std::string str() const;

private:
    RingPtr ring_;
    CtxPtr ctx_;
    int w_ = 0;
    std::vector<AuxPoly> a_; // a_[i] holds a_{i+1}
};

// Entrywise t -> sigma(t); Laurent entries go through the inverse of the
// substituted series.
SeriesMatrix apply_jet(const Jet& sigma, const SeriesMatrix& g, std::optional<Frac> target = std::nullopt);

// Generic element of the congruence level J^w (a_1 = 1, a_2 = ... = a_w = 0,
// fresh variables beyond), truncated at the given order. For w = 0 the
// leading coefficient itself is a fresh invertible variable a1.
Jet generic_jet_level(const RingPtr& ring, int w, int order);

// Smallest w such that g^{-1} sigma(g) is integral for the generic sigma in
// J^w. Search is symbolic; w_max < 0 picks the default bound 2*N*d + 2.
int jet_level(const SeriesMatrix& g, int w_max = -1);

struct JetResidue {
    int w = 0;
    PolyMatrix res0; // t^0 block of g^{-1} sigma(g) for generic sigma in J^w
    bool matches_res_along_phi = false;
    bool kills_next_level = false;
    bool trivial_on_2w_plus_1 = false;
    std::string detail;
};

JetResidue jet_residue(const SeriesMatrix& g);

} // namespace ramres

#endif
