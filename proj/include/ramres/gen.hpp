#ifndef RAMRES_GEN_HPP
#define RAMRES_GEN_HPP

#include <random>

#include "ramres/matseries.hpp"

namespace ramres {

// Seeded random instances for the property suites. Elements are products of
// elementary, torus and constant factors, so group membership is automatic.
struct GenOptions {
    int n = 2;
    GroupTag tag = GroupTag::SL;
    int max_abs_exp = 2; // t-exponent range of the factors
    int factors = 4;
    bool integral = false; // only nonnegative exponents
    bool constant = false; // element of G(A)
};

Scalar random_scalar(std::mt19937_64& rng, const RingPtr& ring, bool nonzero = false);
Scalar random_unit(std::mt19937_64& rng, const RingPtr& ring);

SeriesMatrix random_element(std::mt19937_64& rng, const RingPtr& ring, const GenOptions& opt);

// Entry exponents all within [-bound, bound]; resamples until satisfied.
SeriesMatrix random_element_bounded(std::mt19937_64& rng, const RingPtr& ring, GenOptions opt,
                                    long long bound);

} // namespace ramres

#endif
