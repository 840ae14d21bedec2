#ifndef RAMRES_MATSERIES_HPP
#define RAMRES_MATSERIES_HPP

#include <functional>
#include <vector>

#include "ramres/series.hpp"

namespace ramres {

enum class GroupTag { SL, GL };

class SeriesMatrix;

// g = t^{-d} * ug with ug integral and not divisible by t; for SL matrices
// det(ug) = t^{nd} (checked on construction).
struct GaugeDecomposition;

// N x N matrix over Puiseux series, the carrier of g in G(A((t))).
class SeriesMatrix {
public:
    SeriesMatrix() = default;

    // check = true verifies the group condition: det == 1 for SL, det a unit
    // of A((t)) for GL.
    static SeriesMatrix make(GroupTag tag, int n, std::vector<PuiseuxSeries> entries, bool check = true);
    static SeriesMatrix identity(GroupTag tag, int n, RingPtr ring, CtxPtr ctx);

    GroupTag tag() const { return tag_; }
    int n() const { return n_; }
    const RingPtr& ring() const { return ring_; }
    const CtxPtr& ctx() const { return ctx_; }
    const PuiseuxSeries& at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
    PuiseuxSeries& at(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }

    SeriesMatrix map_entries(const std::function<PuiseuxSeries(const PuiseuxSeries&)>& f,
                             bool check = false) const;
    SeriesMatrix embed(const CtxPtr& target) const;

    friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
    PuiseuxSeries det() const;
    SeriesMatrix adjugate() const; // g * adj(g) = det(g) * I
    SeriesMatrix inverse(std::optional<Frac> target = std::nullopt) const;

    GaugeDecomposition gauge_decompose() const;

    bool is_integral() const;      // throws insufficient_precision if undecidable
    bool is_constant() const;      // entries constant in t
    SeriesMatrix embed_gln_sln() const; // diag(g, det^{-1}) in SL_{n+1}

    bool agrees_with(const SeriesMatrix& o) const;
    friend bool operator==(const SeriesMatrix& a, const SeriesMatrix& b);
    friend bool operator!=(const SeriesMatrix& a, const SeriesMatrix& b) { return !(a == b); }

    std::string str() const;

private:
    GroupTag tag_ = GroupTag::SL;
    int n_ = 0;
    RingPtr ring_;
    CtxPtr ctx_;
    std::vector<PuiseuxSeries> e_;
};

struct GaugeDecomposition {
    long long d = 0;
    SeriesMatrix ug;
};

// Constant matrices of AuxPoly (used for residues and t=0 specializations).
struct PolyMatrix {
    int n = 0;
    RingPtr ring;
    CtxPtr ctx;
    std::vector<AuxPoly> e;

    static PolyMatrix identity(int n, RingPtr ring, CtxPtr ctx);
    const AuxPoly& at(int i, int j) const { return e[static_cast<std::size_t>(i * n + j)]; }
    AuxPoly& at(int i, int j) { return e[static_cast<std::size_t>(i * n + j)]; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }
    bool is_identity() const;
    PolyMatrix substitute(const CtxPtr& target, const std::map<std::string, AuxPoly>& images) const;
    PolyMatrix embed(const CtxPtr& target) const;
    AuxPoly det() const;
    PolyMatrix adjugate() const;
    // Inverse of a matrix whose determinant is a unit monomial.
    PolyMatrix inverse() const;
    std::string str() const;
};

} // namespace ramres

#endif
