#ifndef RAMRES_DSL_HPP
#define RAMRES_DSL_HPP

#include <string>

#include "ramres/matseries.hpp"

namespace ramres {

// Series/matrix input language. Entries are sums of terms c*t^k; k may be an
// integer or a fraction p/q; coefficients follow the scalar grammar of the
// ring ('a' is the transcendental of fp:<p>(a), 'e' the dual-numbers
// nilpotent). Example: [[t^-2 + 3*t + 1/2*t^3, 1],[0, e*t^-1]].
PuiseuxSeries parse_series(const std::string& src, const RingPtr& ring);

// [[e11, e12],[e21, e22]]; square, dimension 1..4. Matrices with det exactly
// 1 are tagged SL, all others GL (with the unit-determinant check).
SeriesMatrix parse_matrix(const std::string& src, const RingPtr& ring);

std::string render_series(const PuiseuxSeries& s);
std::string render_matrix(const SeriesMatrix& m);

} // namespace ramres

#endif
