#ifndef RAMRES_GRASS_HPP
#define RAMRES_GRASS_HPP

#include <optional>

#include "ramres/indexres.hpp"

namespace ramres {

// Exponent vector of a diagonal torus element diag(t^{mu_1}, ..., t^{mu_N}),
// kept dominant (decreasing).
struct Coweight {
    std::vector<long long> mu;

    friend bool operator==(const Coweight& a, const Coweight& b) { return a.mu == b.mu; }
    friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
    bool is_zero() const;
    std::string str() const;
};

// Smith normal form over k[[t]]: g = u diag(t^mu) v with u, v integral of
// unit determinant; returns the dominant-sorted mu.
Coweight cartan_coweight(const SeriesMatrix& g);

struct CellMembership {
    SeriesMatrix h; // constant, in G(k)
    SeriesMatrix k; // integral with unit determinant; g = h t^mu k
};

// Solves g = h t^mu k when r(g) = 0; returns nullopt when r(g) != 0.
std::optional<CellMembership> cell_membership_index_zero(const SeriesMatrix& g, const Coweight& mu);

enum class CellType { minuscule, quasi_minuscule, rank_one };

// Root data are hard-coded for SL_2, SL_3 and GL_2.
struct CellDatum {
    Coweight mu;
    // positive roots (i, j), i < j, with pairing <mu, alpha_ij> = mu_i - mu_j
    std::vector<std::tuple<int, int, long long>> pairings;
};
CellDatum cell_datum(GroupTag tag, int n, const Coweight& mu);
CellType classify_cell(GroupTag tag, int n, const Coweight& mu);

SeriesMatrix torus_element(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu);

// Cell point (prod u_alpha(sum_i t^i x_{alpha,i})) t^mu for the supported
// cell shapes; coords are the x-coefficients, one vector per root with
// pairing >= 2, entries x_{alpha,1}.. x_{alpha,<mu,alpha>-1}.
SeriesMatrix assemble_cell_point(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                                 const std::vector<std::vector<Scalar>>& coords);

// Closed-form index prediction for the assembled point.
IndexResult cell_index_prediction(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                                  const std::vector<std::vector<Scalar>>& coords);

// For the rank-one family: r(g) = 0 iff P = 0, asserted by computation.
bool index_zero_iff_P_zero(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                           const std::vector<Scalar>& P);

// det(X I - res(l)) = prod (X - l^{mu_i}) as polynomials in l, X.
bool residue_charpoly_matches(const ResidueHom& res, const Coweight& mu);

} // namespace ramres

#endif
