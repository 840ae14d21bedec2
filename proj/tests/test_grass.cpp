#include "doctest.h"

#include <random>

#include "ramres/dsl.hpp"
#include "ramres/gen.hpp"
#include "ramres/grass.hpp"

using namespace ramres;

namespace {

Coweight random_dominant(std::mt19937_64& rng, int n, long long hi, bool sl) {
    std::uniform_int_distribution<long long> v(-hi, hi);
    std::vector<long long> mu(static_cast<std::size_t>(n));
    while (true) {
        long long sum = 0;
        for (auto& x : mu) {
            x = v(rng);
            sum += x;
        }
        if (sl && sum != 0) continue;
        std::sort(mu.begin(), mu.end(), std::greater<long long>());
        return Coweight{mu};
    }
}

} // namespace

TEST_CASE("cartan of diagonal and triangular matrices") {
    auto q = Ring::rationals();
    CHECK(cartan_coweight(SeriesMatrix::identity(GroupTag::SL, 2, q, VarContext::constants())) ==
          Coweight{{0, 0}});
    CHECK(cartan_coweight(parse_matrix("[[t^-1, 0],[0, t]]", q)) == Coweight{{1, -1}});
    CHECK(cartan_coweight(parse_matrix("[[t, 7],[0, t^-1]]", q)) == Coweight{{1, -1}});
    CHECK_THROWS_AS((void)cartan_coweight(parse_matrix("[[1 + e*t^-1]]", Ring::dual_numbers(Ring::rationals()))),
                    Error);
}

TEST_CASE("cartan round trip on random u t^mu v") {
    std::mt19937_64 rng(91);
    for (const auto& ring : {Ring::rationals(), Ring::prime_field(5)}) {
        GenOptions iopt;
        iopt.n = 2;
        iopt.integral = true;
        for (int i = 0; i < 12; ++i) {
            Coweight mu = random_dominant(rng, 2, 2, true);
            SeriesMatrix u = random_element(rng, ring, iopt);
            SeriesMatrix v = random_element(rng, ring, iopt);
            SeriesMatrix g = u * torus_element(GroupTag::SL, 2, ring, mu) * v;
            CHECK(cartan_coweight(g) == mu);
        }
        GenOptions i3 = iopt;
        i3.n = 3;
        for (int i = 0; i < 6; ++i) {
            Coweight mu = random_dominant(rng, 3, 1, true);
            SeriesMatrix u = random_element(rng, ring, i3);
            SeriesMatrix v = random_element(rng, ring, i3);
            SeriesMatrix g = u * torus_element(GroupTag::SL, 3, ring, mu) * v;
            CHECK(cartan_coweight(g) == mu);
        }
    }
}

TEST_CASE("membership solves exactly the index-zero locus") {
    std::mt19937_64 rng(14);
    for (const auto& ring : {Ring::rationals(), Ring::prime_field(5)}) {
        GenOptions copt;
        copt.n = 2;
        copt.constant = true;
        GenOptions iopt;
        iopt.n = 2;
        iopt.integral = true;
        for (int i = 0; i < 10; ++i) {
            Coweight mu = random_dominant(rng, 2, 2, true);
            if (mu.is_zero()) continue;
            SeriesMatrix h = random_element(rng, ring, copt);
            SeriesMatrix v = random_element(rng, ring, iopt);
            SeriesMatrix g = h * torus_element(GroupTag::SL, 2, ring, mu) * v;
            IndexResult idx = index_of(g);
            REQUIRE(idx.kind == IndexResult::Kind::zero);
            auto mem = cell_membership_index_zero(g, mu);
            REQUIRE(mem.has_value());
            CHECK((mem->h * torus_element(GroupTag::SL, 2, ring, mu) * mem->k).agrees_with(g));
            CHECK(mem->k.is_integral());
            // residue encodes the stratum
            ResidueHom res = residue_of(g);
            CHECK(residue_charpoly_matches(res, mu));
        }
    }
}

TEST_CASE("no membership on positive-index elements") {
    auto q = Ring::rationals();
    SeriesMatrix g = parse_matrix("[[t, 5],[0, t^-1]]", q);
    CHECK(index_of(g) == IndexResult::positive(Frac(1)));
    CHECK(!cell_membership_index_zero(g, Coweight{{1, -1}}).has_value());
}

TEST_CASE("index-zero elements live in exactly one cell") {
    auto q = Ring::rationals();
    SeriesMatrix g = parse_matrix("[[t^-1, 1],[0, t]]", q); // Cartan (1,-1)
    CHECK(cell_membership_index_zero(g, Coweight{{1, -1}}).has_value());
    // the decomposition cannot be forced into another dominant cell
    CHECK_THROWS_AS((void)cell_membership_index_zero(g, Coweight{{2, -2}}), Error);
}

TEST_CASE("cell classification") {
    CHECK(classify_cell(GroupTag::GL, 2, Coweight{{1, 0}}) == CellType::minuscule);
    CHECK(classify_cell(GroupTag::SL, 2, Coweight{{1, -1}}) == CellType::rank_one);
    CHECK(classify_cell(GroupTag::SL, 3, Coweight{{1, 0, -1}}) == CellType::quasi_minuscule);
    CHECK(classify_cell(GroupTag::GL, 2, Coweight{{2, -1}}) == CellType::rank_one);
    CHECK_THROWS_AS((void)classify_cell(GroupTag::SL, 3, Coweight{{2, 0, -2}}), Error);
    CHECK_THROWS_AS((void)cell_datum(GroupTag::SL, 4, Coweight{{1, 0, 0, -1}}), Error);
}

TEST_CASE("closed forms match the index on sampled cell points") {
    std::mt19937_64 rng(2718);
    for (const auto& ring : {Ring::rationals(), Ring::prime_field(5)}) {
        // rank one over SL_2 and GL_2, pairings 2, 3, 4
        std::vector<std::pair<GroupTag, Coweight>> cells = {
            {GroupTag::SL, Coweight{{1, -1}}},
            {GroupTag::GL, Coweight{{2, -1}}},
            {GroupTag::SL, Coweight{{2, -2}}},
        };
        for (auto& [tag, mu] : cells) {
            long long h = mu.mu[0] - mu.mu[1];
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<Scalar> P;
                for (long long i = 1; i < h; ++i) P.push_back(random_scalar(rng, ring));
                SeriesMatrix g = assemble_cell_point(tag, 2, ring, mu, {P});
                IndexResult want = cell_index_prediction(tag, 2, ring, mu, {P});
                CHECK(index_of(g) == want);
                CHECK(index_zero_iff_P_zero(tag, 2, ring, mu, P));
            }
        }
        // quasi-minuscule over SL_3
        Coweight mu3{{1, 0, -1}};
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Scalar> x = {random_scalar(rng, ring)};
            SeriesMatrix g = assemble_cell_point(GroupTag::SL, 3, ring, mu3, {x});
            CHECK(index_of(g) == cell_index_prediction(GroupTag::SL, 3, ring, mu3, {x}));
        }
    }
}

TEST_CASE("characteristic polynomial identity for sampled index-zero points") {
    std::mt19937_64 rng(31);
    auto f5 = Ring::prime_field(5);
    GenOptions iopt;
    iopt.n = 2;
    iopt.integral = true;
    for (int i = 0; i < 8; ++i) {
        Coweight mu = random_dominant(rng, 2, 2, true);
        if (mu.is_zero()) continue;
        SeriesMatrix v = random_element(rng, f5, iopt);
        SeriesMatrix g = torus_element(GroupTag::SL, 2, f5, mu) * v;
        ResidueHom res = residue_of(g);
        CHECK(residue_charpoly_matches(res, mu));
        CHECK(!residue_charpoly_matches(res, Coweight{{mu.mu[0] + 1, mu.mu[1] - 1}}));
    }
}
