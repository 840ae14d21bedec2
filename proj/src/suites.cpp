#include "ramres/suites.hpp"

#include <chrono>

#include "ramres/dsl.hpp"
#include "ramres/gen.hpp"
#include "ramres/golden.hpp"
#include "ramres/grass.hpp"
#include "ramres/jets.hpp"
#include "ramres/oracle.hpp"

namespace ramres {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void note_failure(SuiteResult& r, const std::string& what) {
    ++r.failures;
    r.pass = false;
    if (r.detail.size() < 400) {
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += what;
    }
}

std::vector<RingPtr> oracle_rings() {
    return {Ring::rationals(), Ring::prime_field(2), Ring::prime_field(5)};
}

} // namespace

SuiteResult suite_golden() {
    Timer t;
    SuiteResult r;
    r.name = "paper-example golden suite";
    GoldenSummary sum = run_golden(false);
    r.cases = sum.total;
    r.failures = sum.total - sum.passed;
    r.pass = sum.ok();
    for (const auto& [id, why] : sum.failures) {
        if (r.detail.size() > 400) break;
        if (!r.detail.empty()) r.detail += "; ";
        r.detail += id + ": " + why;
    }
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_oracle_equivalence(std::uint64_t seed, int count) {
    Timer t;
    SuiteResult r;
    r.name = "oracle equivalence (closed form == sigma membership)";
    for (const auto& ring : oracle_rings()) {
        for (int n : {2, 3}) {
            for (int i = 0; i < count; ++i) {
                std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull) ^
                                    (ring->characteristic() << 17) ^ static_cast<std::uint64_t>(n));
                GenOptions opt;
                opt.n = n;
                SeriesMatrix g = random_element_bounded(rng, ring, opt, 3);
                ++r.cases;
                try {
                    OracleReport rep = oracle_index(g);
                    IndexResult closed = index_of(g);
                    if (!rep.half_line_ok)
                        note_failure(r, "half-line violated over " + ring->describe() + ": " + rep.detail);
                    else if (rep.index != closed)
                        note_failure(r, "oracle " + rep.index.str() + " != closed " + closed.str());
                } catch (const std::exception& e) {
                    note_failure(r, std::string("exception: ") + e.what());
                }
            }
        }
    }
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_homomorphism(std::uint64_t seed, int count) {
    Timer t;
    SuiteResult r;
    r.name = "residue homomorphism / non-triviality / two-path agreement";
    for (const auto& ring : oracle_rings()) {
        for (int n : {2, 3}) {
            for (int i = 0; i < count; ++i) {
                std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(i) * 0x9e3779b97f4a7c15ull) ^
                                    (ring->characteristic() << 17) ^ static_cast<std::uint64_t>(n));
                GenOptions opt;
                opt.n = n;
                SeriesMatrix g = random_element_bounded(rng, ring, opt, 3);
                if (g.is_integral()) continue;
                ++r.cases;
                try {
                    // analyze() cross-checks the substitution route against
                    // the support closed form internally.
                    Analysis a = analyze(g);
                    if (!a.hom_ok) note_failure(r, "hom law failed over " + ring->describe());
                    if (!a.nontrivial) note_failure(r, "trivial residue for a non-integral element");
                } catch (const std::exception& e) {
                    note_failure(r, std::string("exception: ") + e.what());
                }
            }
        }
    }
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_structure_laws(std::uint64_t seed, int count) {
    Timer t;
    SuiteResult r;
    r.name = "structure laws (invariance, pushforward, frobenius, pairs, congruence)";
    std::vector<RingPtr> rings = {Ring::rationals(), Ring::prime_field(5)};

    for (int i = 0; i < count; ++i) {
        const RingPtr& ring = rings[static_cast<std::size_t>(i) % rings.size()];
        std::mt19937_64 rng(seed ^ (0xabcd1234u + static_cast<std::uint64_t>(i) * 77));
        GenOptions opt;
        opt.n = 2;
        SeriesMatrix g = random_element_bounded(rng, ring, opt, 2);
        ++r.cases;
        try {
            // left-G(A)/right-G(A[[t]]) invariance with residue conjugation
            GenOptions copt = opt;
            copt.constant = true;
            GenOptions iopt = opt;
            iopt.integral = true;
            LawReport inv = invariance_suite(g, random_element(rng, ring, copt),
                                             random_element(rng, ring, iopt));
            if (!inv.ok()) note_failure(r, "invariance: " + inv.detail);

            // pushforward laws with d prime to the characteristic
            long long d = (i % 2) ? 2 : 3;
            LawReport push = verify_pushforward_laws(g, d);
            if (!push.ok()) note_failure(r, "pushforward: " + push.detail);

            // frobenius laws in characteristic p
            if (ring->characteristic() > 0) {
                LawReport frob = verify_frobenius_laws(g, 1);
                if (!frob.ok()) note_failure(r, "frobenius: " + frob.detail);
            }

            // block pairs: membership half-lines intersect, so the pair
            // index is the sup of the members' indices (integral = none).
            SeriesMatrix g2 = random_element_bounded(rng, ring, opt, 2);
            std::vector<PuiseuxSeries> e(16, PuiseuxSeries::zero(ring, g.ctx()));
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    e[static_cast<std::size_t>(a * 4 + b)] = g.at(a, b);
                    e[static_cast<std::size_t>((a + 2) * 4 + b + 2)] = g2.at(a, b);
                }
            SeriesMatrix blk = SeriesMatrix::make(GroupTag::SL, 4, std::move(e), false);
            IndexResult i1 = index_of(g), i2 = index_of(g2), ib = index_of(blk);
            IndexResult expect = IndexResult::integral();
            if (i1.kind != IndexResult::Kind::integral || i2.kind != IndexResult::Kind::integral) {
                Frac m(0);
                if (i1.is_positive()) m = std::max(m, i1.r);
                if (i2.is_positive()) m = std::max(m, i2.r);
                expect = m > Frac(0) ? IndexResult::positive(m) : IndexResult::zero();
            }
            if (ib != expect)
                note_failure(r, "pair index " + ib.str() + " != sup " + expect.str());

            // congruence quotients vanish to the stated depth
            IndexResult idx = index_of(g);
            for (long long M : {1LL, 2LL, 3LL}) {
                bool ok = true;
                if (idx.is_positive())
                    ok = congruence_check(g, idx.r + Frac(M, idx.r.den), M);
                else if (idx.kind == IndexResult::Kind::zero)
                    ok = congruence_check(g, Frac(M), M);
                if (!ok) note_failure(r, "congruence at M=" + std::to_string(M));
            }
        } catch (const std::exception& e) {
            note_failure(r, std::string("exception: ") + e.what());
        }
    }
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_integrality(std::uint64_t seed, int count) {
    Timer t;
    SuiteResult r;
    r.name = "index integrality over Q; p-power denominators over F_p";
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 1000003ull * static_cast<std::uint64_t>(i));
        GenOptions opt;
        opt.n = (i % 3 == 0) ? 3 : 2;
        SeriesMatrix g = random_element_bounded(rng, Ring::rationals(), opt, 3);
        ++r.cases;
        try {
            IndexResult idx = index_of(g);
            if (idx.is_positive()) {
                if (idx.r.den != 1) note_failure(r, "non-integral index over Q: " + idx.r.str());
                long long nd = static_cast<long long>(sl_carrier(g).sl.n()) *
                               sl_carrier(g).sl.gauge_decompose().d;
                if (!(idx.r <= Frac(nd))) note_failure(r, "index exceeds N d");
            }
        } catch (const std::exception& e) {
            note_failure(r, std::string("exception: ") + e.what());
        }
    }
    for (std::uint64_t p : {2ull, 5ull}) {
        auto fp = Ring::prime_field(p);
        for (int i = 0; i < count; ++i) {
            std::mt19937_64 rng(seed + 7ull * p + 1000003ull * static_cast<std::uint64_t>(i));
            GenOptions opt;
            opt.n = (i % 3 == 0) ? 3 : 2;
            SeriesMatrix g = random_element_bounded(rng, fp, opt, 3);
            ++r.cases;
            try {
                IndexResult idx = index_of(g);
                if (idx.is_positive()) {
                    long long den = idx.r.den;
                    while (den % static_cast<long long>(p) == 0) den /= static_cast<long long>(p);
                    if (den != 1) note_failure(r, "denominator not a p-power: " + idx.r.str());
                    long long nd = static_cast<long long>(sl_carrier(g).sl.n()) *
                                   sl_carrier(g).sl.gauge_decompose().d;
                    if (idx.r.num > nd) note_failure(r, "p^s r exceeds N d");
                }
            } catch (const std::exception& e) {
                note_failure(r, std::string("exception: ") + e.what());
            }
        }
    }
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_jets() {
    Timer t;
    SuiteResult r;
    r.name = "jet comparison at integral indices r in {1,2,3}";
    auto q = Ring::rationals();
    struct Item {
        std::string src;
        int want_r;
    };
    // SL_2 elements with integral index: unipotent monomials and rank-one
    // cell points.
    std::vector<Item> items = {
        {"[[1, t^-1],[0, 1]]", 1},
        {"[[1, t^-2],[0, 1]]", 2},
        {"[[1, t^-3],[0, 1]]", 3},
        {"[[t, 2],[0, t^-1]]", 1},      // mu = (1,-1) cell point, P = 2t
        {"[[t^2, 1],[0, t^-2]]", 2},    // mu = (2,-2) cell point, P = t^2
        {"[[t^2, t^-1],[0, t^-2]]", 3}, // mu = (2,-2) cell point, P = t
    };
    for (const auto& it : items) {
        ++r.cases;
        try {
            SeriesMatrix g = parse_matrix(it.src, q);
            IndexResult idx = index_of(g);
            if (idx != IndexResult::positive(Frac(it.want_r))) {
                note_failure(r, it.src + ": index " + idx.str() + " != " + std::to_string(it.want_r));
                continue;
            }
            int w = jet_level(g);
            // The two printed alternatives are w = r and w = r + 1; report
            // which one the computation realizes (always r here).
            if (w != it.want_r && w != it.want_r + 1) {
                note_failure(r, it.src + ": level " + std::to_string(w) + " is neither r nor r+1");
                continue;
            }
            if (w != it.want_r)
                r.detail += it.src + " realizes w = r+1; ";
            JetResidue jr = jet_residue(g);
            if (!jr.matches_res_along_phi) note_failure(r, it.src + ": phi-restriction mismatch");
            if (!jr.kills_next_level) note_failure(r, it.src + ": depends on deeper jet coefficients");
            if (!jr.trivial_on_2w_plus_1) note_failure(r, it.src + ": not trivial on J^{2w+1}");
        } catch (const std::exception& e) {
            note_failure(r, it.src + ": exception " + e.what());
        }
    }
    if (r.pass && r.detail.empty()) r.detail = "every instance realizes w = r";
    r.seconds = t.secs();
    return r;
}

SuiteResult suite_grassmannian(std::uint64_t seed, int count) {
    Timer t;
    SuiteResult r;
    r.name = "grassmannian suite (cartan, fixed locus, cells)";
    std::vector<RingPtr> fields = {Ring::rationals(), Ring::prime_field(5)};
    for (const auto& k : fields) {
        std::mt19937_64 rng(seed ^ (k->characteristic() * 0x51ed2701u + 5));
        std::uniform_int_distribution<long long> mv(0, 2);
        GenOptions iopt;
        iopt.n = 2;
        iopt.integral = true;
        GenOptions copt = iopt;
        copt.constant = true;
        copt.integral = false;

        for (int i = 0; i < count; ++i) {
            ++r.cases;
            try {
                long long m = mv(rng);
                Coweight mu{{m, -m}};

                // Cartan round trip on u t^mu v.
                SeriesMatrix u = random_element(rng, k, iopt);
                SeriesMatrix v = random_element(rng, k, iopt);
                SeriesMatrix g = u * torus_element(GroupTag::SL, 2, k, mu) * v;
                Coweight back = cartan_coweight(g);
                if (back != mu) {
                    note_failure(r, "cartan " + back.str() + " != " + mu.str());
                    continue;
                }

                if (!mu.is_zero()) {
                    // fixed-locus characterization, both directions
                    SeriesMatrix h = random_element(rng, k, copt);
                    SeriesMatrix gz = h * torus_element(GroupTag::SL, 2, k, mu) *
                                      random_element(rng, k, iopt);
                    IndexResult idx = index_of(gz);
                    if (idx.kind != IndexResult::Kind::zero) {
                        note_failure(r, "h t^mu v has index " + idx.str());
                        continue;
                    }
                    auto mem = cell_membership_index_zero(gz, mu);
                    if (!mem) {
                        note_failure(r, "membership missing for an index-0 element");
                        continue;
                    }
                    if (!(mem->h * torus_element(GroupTag::SL, 2, k, mu) * mem->k).agrees_with(gz))
                        note_failure(r, "membership does not reconstruct g");
                    ResidueHom res = residue_of(gz);
                    if (!residue_charpoly_matches(res, mu))
                        note_failure(r, "char poly of res is not prod (X - l^mu_i)");
                }

                // positive-index elements are never in a fixed cell
                SeriesMatrix bad = parse_matrix("[[t, 1],[0, t^-1]]", k);
                if (cell_membership_index_zero(bad, Coweight{{1, -1}}).has_value())
                    note_failure(r, "membership produced for a positive-index element");
            } catch (const std::exception& e) {
                note_failure(r, std::string("exception: ") + e.what());
            }
        }

        // closed forms: minuscule, quasi-minuscule, rank-one corollary with
        // <mu, alpha> in {2, 3, 4}
        std::mt19937_64 rng2(seed + 17 * k->characteristic() + 3);
        ++r.cases;
        try {
            Coweight mg{{1, 0}};
            if (index_of(torus_element(GroupTag::GL, 2, k, mg)).kind != IndexResult::Kind::zero)
                note_failure(r, "minuscule torus point has nonzero index");
            Coweight m3{{1, 0, -1}};
            std::vector<Scalar> x = {random_scalar(rng2, k, true)};
            SeriesMatrix qm = assemble_cell_point(GroupTag::SL, 3, k, m3, {x});
            if (index_of(qm) != IndexResult::positive(Frac(1)))
                note_failure(r, "quasi-minuscule index is not <mu,gamma> - 1");

            std::vector<std::pair<GroupTag, Coweight>> fams = {
                {GroupTag::SL, Coweight{{1, -1}}},
                {GroupTag::GL, Coweight{{2, -1}}},
                {GroupTag::SL, Coweight{{2, -2}}},
            };
            for (auto& [tag, mu] : fams) {
                long long h = mu.mu[0] - mu.mu[1];
                for (int trial = 0; trial < 8; ++trial) {
                    std::vector<Scalar> P;
                    for (long long ii = 1; ii < h; ++ii)
                        P.push_back(trial == 0 ? Scalar::zero(k) : random_scalar(rng2, k));
                    if (!index_zero_iff_P_zero(tag, 2, k, mu, P))
                        note_failure(r, "rank-one corollary failed at pairing " + std::to_string(h));
                    SeriesMatrix cp = assemble_cell_point(tag, 2, k, mu, {P});
                    if (index_of(cp) != cell_index_prediction(tag, 2, k, mu, {P}))
                        note_failure(r, "closed form mismatch at pairing " + std::to_string(h));
                }
            }
        } catch (const std::exception& e) {
            note_failure(r, std::string("exception: ") + e.what());
        }
    }
    r.seconds = t.secs();
    return r;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int count) {
    return {
        suite_golden(),
        suite_oracle_equivalence(seed, count),
        suite_homomorphism(seed, count),
        suite_structure_laws(seed, count),
        suite_integrality(seed, count),
        suite_jets(),
        suite_grassmannian(seed, count),
    };
}

} // namespace ramres
