#include "ramres/gen.hpp"

namespace ramres {

Scalar random_scalar(std::mt19937_64& rng, const RingPtr& ring, bool nonzero) {
    std::uniform_int_distribution<long long> small(-4, 4);
    for (int tries = 0; tries < 64; ++tries) {
        Scalar s = Scalar::zero(ring);
        switch (ring->kind()) {
            case RingKind::rational: s = Scalar::from_int(ring, small(rng)); break;
            case RingKind::prime_field: s = Scalar::from_int(ring, small(rng)); break;
            case RingKind::rational_function: {
                Scalar lo = Scalar::lift(ring, random_scalar(rng, ring->base()));
                if (rng() % 3 == 0)
                    s = lo + Scalar::lift(ring, random_scalar(rng, ring->base())) * Scalar::variable(ring);
                else
                    s = lo;
                break;
            }
            case RingKind::dual_numbers: {
                Scalar x = random_scalar(rng, ring->base());
                Scalar y = (rng() % 2 == 0) ? random_scalar(rng, ring->base()) : Scalar::zero(ring->base());
                s = Scalar::dual(ring, x, y);
                break;
            }
        }
        if (!nonzero || !s.is_zero()) return s;
    }
    return Scalar::one(ring);
}

Scalar random_unit(std::mt19937_64& rng, const RingPtr& ring) {
    for (int tries = 0; tries < 64; ++tries) {
        Scalar s = random_scalar(rng, ring, true);
        if (s.is_unit()) return s;
    }
    return Scalar::one(ring);
}

namespace {

PuiseuxSeries random_entry_poly(std::mt19937_64& rng, const RingPtr& ring, const GenOptions& opt) {
    CtxPtr cc = VarContext::constants();
    int lo = (opt.integral || opt.constant) ? 0 : -opt.max_abs_exp;
    int hi = opt.constant ? 0 : opt.max_abs_exp;
    std::uniform_int_distribution<int> e(lo, hi);
    std::uniform_int_distribution<int> nterms(1, 2);
    PuiseuxSeries s = PuiseuxSeries::zero(ring, cc);
    int k = nterms(rng);
    for (int i = 0; i < k; ++i)
        s = s + PuiseuxSeries::monomial(ring, cc, AuxPoly::constant(ring, cc, random_scalar(rng, ring, true)),
                                        Frac(e(rng)));
    return s;
}

} // namespace

SeriesMatrix random_element(std::mt19937_64& rng, const RingPtr& ring, const GenOptions& opt) {
    CtxPtr cc = VarContext::constants();
    const int n = opt.n;
    SeriesMatrix acc = SeriesMatrix::identity(opt.tag, n, ring, cc);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> texp(opt.integral || opt.constant ? 0 : -opt.max_abs_exp,
                                            opt.constant ? 0 : opt.max_abs_exp);
    for (int f = 0; f < opt.factors; ++f) {
        SeriesMatrix m = SeriesMatrix::identity(opt.tag, n, ring, cc);
        switch (kind(rng)) {
            case 0:
            case 1: { // elementary
                int i = idx(rng), j = idx(rng);
                if (i == j) j = (j + 1) % n;
                m.at(i, j) = random_entry_poly(rng, ring, opt);
                break;
            }
            case 2: { // torus: diag(t^k, t^-k, 1, ...) paired to keep det = 1
                if (opt.integral || opt.constant || n < 2) {
                    int i = idx(rng), j = idx(rng);
                    if (i == j) j = (j + 1) % n;
                    m.at(i, j) = random_entry_poly(rng, ring, opt);
                    break;
                }
                int i = idx(rng), j = idx(rng);
                if (i == j) j = (j + 1) % n;
                long long k = texp(rng);
                m.at(i, i) = PuiseuxSeries::t_power(ring, cc, Frac(k));
                m.at(j, j) = PuiseuxSeries::t_power(ring, cc, Frac(-k));
                break;
            }
            default: { // constant diagonal units with det 1
                int i = idx(rng), j = idx(rng);
                if (i == j) j = (j + 1) % n;
                Scalar c = random_unit(rng, ring);
                m.at(i, i) = PuiseuxSeries::constant(ring, cc, c);
                m.at(j, j) = PuiseuxSeries::constant(ring, cc, c.inv());
                break;
            }
        }
        acc = acc * m;
    }
    if (opt.tag == GroupTag::GL) {
        // one extra unit-determinant twist
        SeriesMatrix m = SeriesMatrix::identity(opt.tag, n, ring, cc);
        long long k = (opt.integral || opt.constant) ? 0 : texp(rng);
        m.at(0, 0) = PuiseuxSeries::monomial(ring, cc, AuxPoly::constant(ring, cc, random_unit(rng, ring)),
                                             Frac(k));
        acc = acc * m;
    }
    return acc;
}

SeriesMatrix random_element_bounded(std::mt19937_64& rng, const RingPtr& ring, GenOptions opt,
                                    long long bound) {
    for (int tries = 0; tries < 256; ++tries) {
        SeriesMatrix m = random_element(rng, ring, opt);
        bool ok = true;
        for (int i = 0; i < m.n() && ok; ++i)
            for (int j = 0; j < m.n() && ok; ++j)
                for (const auto& [k, c] : m.at(i, j).raw_terms())
                    if (k < -bound || k > bound) { ok = false; break; }
        if (ok) return m;
        if (tries % 16 == 15 && opt.factors > 2) --opt.factors;
    }
    // Shrink to a guaranteed-small element.
    opt.factors = 2;
    opt.max_abs_exp = 1;
    return random_element(rng, ring, opt);
}

} // namespace ramres
