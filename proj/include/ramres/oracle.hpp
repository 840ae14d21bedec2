#ifndef RAMRES_ORACLE_HPP
#define RAMRES_ORACLE_HPP

#include "ramres/indexres.hpp"

namespace ramres {

// Verification-only routines. They decide indices purely through sigma/lambda
// membership of g^{-1} sigma_r(g), never through the closed form that
// index_of uses, so they can cross-examine it.
//
// Over a field the same infimum could also be characterized through
// integrality over the function-field coefficients A(u)[[t]]; that
// alternative route is noted here for the record and intentionally not a
// second code path.

// Is g^{-1} sigma_r(g) integral?
bool sigma_membership(const SeriesMatrix& g, Frac r);

// Is g^{-1} g(l t) integral over A[l, l^{-1}][[t]]?
bool lambda_membership(const SeriesMatrix& g);

struct OracleReport {
    IndexResult index;
    bool half_line_ok = true;   // memberships form {r : r >= endpoint}
    std::string detail;
};

// Decide the index by testing candidate rationals (support candidates plus a
// grid of nearby values) for membership.
OracleReport oracle_index(const SeriesMatrix& g);

} // namespace ramres

#endif
