#ifndef RAMRES_INDEXRES_HPP
#define RAMRES_INDEXRES_HPP

#include <string>
#include <vector>

#include "ramres/matseries.hpp"

namespace ramres {

// One nonzero coefficient c^{a,b}_{i,j} of the expansion
//   sum_k adj(ug)_{i,k}(t) (P_{k,j}(t(1+eps)) - P_{k,j}(t)) = sum c t^a eps^b.
struct SupportRecord {
    int i = 0, j = 0;
    long long a = 0; // t-exponent, >= 0
    long long b = 0; // eps-exponent, >= 1
    Scalar c;
};

struct SupportTable {
    int n = 0;        // dimension of the SL carrier
    long long d = 0;  // gauge: g = t^{-d} ug
    long long bound = 0; // records complete for a < bound; always bound >= n*d
    std::vector<SupportRecord> recs;

    // Candidate indices (n*d - a)/b from records with a < n*d, deduplicated
    // and sorted increasing.
    std::vector<Frac> candidates() const;
};

struct IndexResult {
    enum class Kind { integral, zero, positive };
    Kind kind = Kind::integral;
    Frac r; // meaningful for positive only

    static IndexResult integral() { return {Kind::integral, Frac(0)}; }
    static IndexResult zero() { return {Kind::zero, Frac(0)}; }
    static IndexResult positive(Frac r) { return {Kind::positive, r}; }
    bool is_positive() const { return kind == Kind::positive; }
    // Value as a rational with the integral sentinel -1.
    Frac sentinel_value() const {
        if (kind == Kind::integral) return Frac(-1);
        return kind == Kind::zero ? Frac(0) : r;
    }
    friend bool operator==(const IndexResult& a, const IndexResult& b) {
        return a.kind == b.kind && (a.kind != Kind::positive || a.r == b.r);
    }
    friend bool operator!=(const IndexResult& a, const IndexResult& b) { return !(a == b); }
    std::string str() const;
};

// res(g): the t=0 specialization of g^{-1} sigma_{r(g)}(g), a homomorphism
// G_a -> G in the variable u when r > 0, or of g^{-1} g(l t), a homomorphism
// G_m -> G in l when r = 0. Reported in the coordinates of the input group.
struct ResidueHom {
    enum class Kind { trivial, additive, multiplicative };
    Kind kind = Kind::trivial;
    PolyMatrix mat; // context {u} or {l}

    bool is_trivial() const { return kind == Kind::trivial; }
    std::string str() const;
};

struct Analysis {
    long long gauge_d = 0;
    IndexResult index;
    ResidueHom residue;
    bool hom_ok = true;
    bool nontrivial = true;
};

// The SL carrier of a group element: GL matrices embed as diag(g, det^{-1}).
struct SlCarrier {
    SeriesMatrix sl;
    int orig_n = 0;
    bool was_gl = false;
};
SlCarrier sl_carrier(const SeriesMatrix& g);

SupportTable support_table(const SeriesMatrix& g, long long guard = 2);

IndexResult index_of(const SeriesMatrix& g);
ResidueHom residue_of(const SeriesMatrix& g);         // runs both routes and cross-checks
ResidueHom residue_by_substitution(const SeriesMatrix& g); // j(g^{-1} sigma_r(g)) route
ResidueHom residue_from_support(const SeriesMatrix& g);    // closed-form route
bool verify_residue_hom(const ResidueHom& res);

IndexResult left_index(const SeriesMatrix& g);
ResidueHom left_residue(const SeriesMatrix& g);

SeriesMatrix pushforward(const SeriesMatrix& g, long long d);
SeriesMatrix frobenius_pushforward(const SeriesMatrix& g, unsigned e); // t -> T^{p^e}
SeriesMatrix entrywise_frobenius(const SeriesMatrix& g, unsigned e);   // g -> F_e(g)

struct LawReport {
    bool index_ok = false;
    bool residue_ok = false;
    std::string detail;
    bool ok() const { return index_ok && residue_ok; }
};
LawReport verify_pushforward_laws(const SeriesMatrix& g, long long d);
LawReport verify_frobenius_laws(const SeriesMatrix& g, unsigned e);
LawReport invariance_suite(const SeriesMatrix& g, const SeriesMatrix& h_left, const SeriesMatrix& h_right);

bool congruence_check(const SeriesMatrix& g, Frac s, long long M);

Analysis analyze(const SeriesMatrix& g);

// Conjugation tau^sigma = sigma^{-1} tau sigma for constant matrices.
PolyMatrix conjugate(const PolyMatrix& tau, const PolyMatrix& sigma);

// t=0 specialization of an integral matrix, as a constant PolyMatrix.
PolyMatrix specialize_matrix_t0(const SeriesMatrix& g, const CtxPtr& ctx);

} // namespace ramres

#endif
