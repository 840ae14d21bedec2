#include "ramres/grass.hpp"

#include <algorithm>
#include <numeric>

namespace ramres {

bool Coweight::is_zero() const {
    return std::all_of(mu.begin(), mu.end(), [](long long x) { return x == 0; });
}

std::string Coweight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        s += std::to_string(mu[i]);
        if (i + 1 < mu.size()) s += ",";
    }
    return s + ")";
}

// ---------------------------------------------------------------- cartan

namespace {

struct SmithState {
    std::vector<PuiseuxSeries> m;
    int n;
    PuiseuxSeries& at(int i, int j) { return m[static_cast<std::size_t>(i * n + j)]; }
};

std::vector<long long> smith_valuations(const SeriesMatrix& g, long long W) {
    const int n = g.n();
    SmithState st{{}, n};
    st.m.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) st.m.push_back(g.at(i, j));

    std::vector<long long> vals;
    for (int step = 0; step < n; ++step) {
        long long best_val = 0;
        int bi = -1, bj = -1;
        bool have_blank = false;
        Frac blank_floor(0);
        for (int i = step; i < n; ++i)
            for (int j = step; j < n; ++j) {
                const PuiseuxSeries& s = st.at(i, j);
                if (s.raw_terms().empty()) {
                    // Exact zero never hides anything; a truncated blank
                    // hides terms only at >= its claim.
                    if (!s.exact()) {
                        Frac p = *s.prec();
                        if (!have_blank || p < blank_floor) blank_floor = p;
                        have_blank = true;
                    }
                    continue;
                }
                Frac v = s.gauge();
                if (v.den != 1) fail(Errc::fractional_exponent, "cartan needs integer exponents");
                if (bi < 0 || v.num < best_val) {
                    best_val = v.num;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) {
            if (have_blank)
                fail(Errc::insufficient_precision, "all remaining entries are blank up to precision");
            fail(Errc::not_invertible, "matrix is singular over k((t))");
        }
        if (have_blank && blank_floor < Frac(best_val))
            fail(Errc::insufficient_precision, "pivot valuation not separated from a blank entry");
        if (bi != step)
            for (int j = 0; j < n; ++j) std::swap(st.at(bi, j), st.at(step, j));
        if (bj != step)
            for (int i = 0; i < n; ++i) std::swap(st.at(i, bj), st.at(i, step));
        vals.push_back(best_val);

        PuiseuxSeries pinv = st.at(step, step).inverted(Frac(W));
        // Schur complement: clears both the pivot row and column over k[[t]].
        for (int i = step + 1; i < n; ++i) {
            PuiseuxSeries f = st.at(i, step) * pinv;
            for (int j = step + 1; j < n; ++j)
                st.at(i, j) = st.at(i, j) - f * st.at(step, j);
        }
    }
    return vals;
}

} // namespace

Coweight cartan_coweight(const SeriesMatrix& g) {
    if (!g.ring()->is_field()) fail(Errc::not_a_field, "cartan decomposition needs a field base");
    long long maxdeg = 4;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j)
            for (const auto& [k, c] : g.at(i, j).raw_terms())
                maxdeg = std::max(maxdeg, k < 0 ? -k : k);
    long long W = 2 * maxdeg * g.n() + 8;
    for (int attempt = 0;; ++attempt) {
        try {
            std::vector<long long> vals = smith_valuations(g, W);
            std::sort(vals.begin(), vals.end(), std::greater<long long>());
            return Coweight{std::move(vals)};
        } catch (const Error& e) {
            if (e.code() != Errc::insufficient_precision || attempt >= 3) throw;
            W *= 2;
        }
    }
}

// ---------------------------------------------------------------- membership

namespace {

using Row = std::vector<Scalar>;

// Nullspace basis of the k-linear system rows * x = 0.
std::vector<Row> nullspace(std::vector<Row> rows, int dim, const RingPtr& ring) {
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < dim && rank < static_cast<int>(rows.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(sel)]);
        Scalar inv = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)].inv();
        for (auto& v : rows[static_cast<std::size_t>(rank)]) v = v * inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            Scalar f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero()) continue;
            for (int c = 0; c < dim; ++c)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<Row> basis;
    for (int free = 0; free < dim; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        Row v(static_cast<std::size_t>(dim), Scalar::zero(ring));
        v[static_cast<std::size_t>(free)] = Scalar::one(ring);
        for (int r = 0; r < rank; ++r) {
            Scalar coeff = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(free)];
            if (!coeff.is_zero()) v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(r)])] = -coeff;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar det_scalar(const std::vector<Row>& rows, const RingPtr& ring) {
    std::vector<Row> m = rows;
    int n = static_cast<int>(m.size());
    Scalar det = Scalar::one(ring);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                sel = r;
                break;
            }
        if (sel < 0) return Scalar::zero(ring);
        if (sel != col) {
            std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        Scalar p = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det = det * p;
        Scalar pi = p.inv();
        for (int r = col + 1; r < n; ++r) {
            Scalar f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * pi;
            if (f.is_zero()) continue;
            for (int c = col; c < n; ++c)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return det;
}

// Enumerate span elements of a basis with small coordinates.
std::vector<Row> span_samples(const std::vector<Row>& basis, const RingPtr& ring) {
    std::vector<Scalar> coeffs;
    if (ring->kind() == RingKind::prime_field && ring->prime() <= 7) {
        for (std::uint64_t v = 0; v < ring->prime(); ++v) coeffs.push_back(Scalar::from_int(ring, static_cast<long long>(v)));
    } else {
        for (long long v : {0LL, 1LL, -1LL, 2LL, -2LL, 3LL}) coeffs.push_back(Scalar::from_int(ring, v));
    }
    std::vector<Row> out;
    std::size_t k = basis.size();
    if (k == 0) return out;
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        Row v(basis[0].size(), Scalar::zero(ring));
        bool nonzero = false;
        for (std::size_t i = 0; i < k; ++i) {
            const Scalar& c = coeffs[idx[i]];
            if (c.is_zero()) continue;
            nonzero = true;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] + c * basis[i][j];
        }
        if (nonzero) out.push_back(std::move(v));
        std::size_t p = 0;
        while (p < k && ++idx[p] == coeffs.size()) idx[p++] = 0;
        if (p == k) break;
        if (out.size() > 800) break;
    }
    return out;
}

bool pick_rows(const std::vector<std::vector<Row>>& options, std::vector<Row>& chosen, std::size_t i,
               const RingPtr& ring) {
    if (i == options.size()) return !det_scalar(chosen, ring).is_zero();
    for (const Row& cand : options[i]) {
        chosen.push_back(cand);
        // Prune: partial rows must stay independent.
        std::vector<Row> part = chosen;
        std::vector<Row> sq(part.size(), Row(part.size(), Scalar::zero(ring)));
        bool indep = true;
        {
            // rank via elimination on the partial rectangular system
            std::vector<Row> m = part;
            std::size_t rank = 0;
            for (std::size_t col = 0; col < m[0].size() && rank < m.size(); ++col) {
                std::size_t sel = rank;
                while (sel < m.size() && m[sel][col].is_zero()) ++sel;
                if (sel == m.size()) continue;
                std::swap(m[rank], m[sel]);
                Scalar piv = m[rank][col].inv();
                for (auto& x : m[rank]) x = x * piv;
                for (std::size_t r = 0; r < m.size(); ++r) {
                    if (r == rank || m[r][col].is_zero()) continue;
                    Scalar f = m[r][col];
                    for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] = m[r][c] - f * m[rank][c];
                }
                ++rank;
            }
            indep = (rank == part.size());
        }
        if (indep && pick_rows(options, chosen, i + 1, ring)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<CellMembership> cell_membership_index_zero(const SeriesMatrix& g, const Coweight& mu) {
    if (!g.ring()->is_field()) fail(Errc::not_a_field, "cell membership needs a field base");
    if (static_cast<int>(mu.mu.size()) != g.n()) fail(Errc::dimension_error, "coweight length mismatch");
    IndexResult idx = index_of(g);
    if (idx.kind != IndexResult::Kind::zero) return std::nullopt;

    const int n = g.n();
    const RingPtr& ring = g.ring();

    // Row i of y = h^{-1} must kill every coefficient of t^e, e < mu_i, in
    // sum_k y_{ik} g_{kj}; that system is linear over k.
    std::vector<std::vector<Row>> options;
    for (int i = 0; i < n; ++i) {
        std::vector<Row> constraints;
        for (int j = 0; j < n; ++j) {
            long long lo = 0;
            bool any = false;
            for (int k = 0; k < n; ++k) {
                const auto& s = g.at(k, j).reduced();
                if (s.denom() != 1) fail(Errc::fractional_exponent, "membership needs integer exponents");
                if (!s.raw_terms().empty()) {
                    lo = any ? std::min(lo, s.raw_terms().begin()->first) : s.raw_terms().begin()->first;
                    any = true;
                }
            }
            if (!any) continue;
            for (long long e = lo; e < mu.mu[static_cast<std::size_t>(i)]; ++e) {
                Row row;
                row.reserve(static_cast<std::size_t>(n));
                bool nontrivial = false;
                for (int k = 0; k < n; ++k) {
                    AuxPoly c = g.at(k, j).coeff_at(Frac(e));
                    Scalar v = c.is_zero() ? Scalar::zero(ring) : c.constant_value();
                    if (!v.is_zero()) nontrivial = true;
                    row.push_back(v);
                }
                if (nontrivial) constraints.push_back(std::move(row));
            }
        }
        std::vector<Row> basis = nullspace(std::move(constraints), n, ring);
        if (basis.empty())
            fail(Errc::linear_system_inconsistent,
                 "no admissible row " + std::to_string(i) + " for mu = " + mu.str());
        options.push_back(span_samples(basis, ring));
    }

    std::vector<Row> rows;
    if (!pick_rows(options, rows, 0, ring))
        fail(Errc::linear_system_inconsistent, "no invertible solution for mu = " + mu.str());

    Scalar det = det_scalar(rows, ring);
    if (g.tag() == GroupTag::SL) {
        Scalar fixup = det.inv();
        for (auto& v : rows[0]) v = v * fixup;
    }

    CtxPtr cc = VarContext::constants();
    std::vector<PuiseuxSeries> ye;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ye.push_back(PuiseuxSeries::constant(ring, cc, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
    SeriesMatrix y = SeriesMatrix::make(g.tag(), n, std::move(ye), false);
    SeriesMatrix h = y.inverse();
    SeriesMatrix k = torus_element(g.tag(), n, ring, mu).inverse() * (y * g);
    if (!k.is_integral())
        fail(Errc::linear_system_inconsistent, "membership factor k is not integral");
    return CellMembership{h, k};
}

// ---------------------------------------------------------------- cells

CellDatum cell_datum(GroupTag tag, int n, const Coweight& mu) {
    if (!((tag == GroupTag::SL && (n == 2 || n == 3)) || (tag == GroupTag::GL && n == 2)))
        fail(Errc::unsupported_cell_type, "root data available for SL_2, SL_3, GL_2 only");
    if (static_cast<int>(mu.mu.size()) != n) fail(Errc::dimension_error, "coweight length mismatch");
    for (std::size_t i = 0; i + 1 < mu.mu.size(); ++i)
        if (mu.mu[i] < mu.mu[i + 1]) fail(Errc::internal_check, "coweight must be dominant");
    CellDatum cd;
    cd.mu = mu;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            cd.pairings.emplace_back(i, j, mu.mu[static_cast<std::size_t>(i)] - mu.mu[static_cast<std::size_t>(j)]);
    return cd;
}

CellType classify_cell(GroupTag tag, int n, const Coweight& mu) {
    CellDatum cd = cell_datum(tag, n, mu);
    int big = 0;
    long long maxp = 0;
    for (const auto& [i, j, p] : cd.pairings) {
        if (p >= 2) ++big;
        maxp = std::max(maxp, p);
    }
    if (maxp <= 1) return CellType::minuscule;
    if (n == 2) return CellType::rank_one;
    if (big == 1) return CellType::quasi_minuscule;
    fail(Errc::unsupported_cell_type, "no closed form for mu = " + mu.str());
}

SeriesMatrix torus_element(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu) {
    CtxPtr cc = VarContext::constants();
    std::vector<PuiseuxSeries> e(static_cast<std::size_t>(n) * n, PuiseuxSeries::zero(ring, cc));
    for (int i = 0; i < n; ++i)
        e[static_cast<std::size_t>(i * n + i)] = PuiseuxSeries::t_power(ring, cc, Frac(mu.mu[static_cast<std::size_t>(i)]));
    return SeriesMatrix::make(tag, n, std::move(e), false);
}

SeriesMatrix assemble_cell_point(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                                 const std::vector<std::vector<Scalar>>& coords) {
    CellDatum cd = cell_datum(tag, n, mu);
    CtxPtr cc = VarContext::constants();
    SeriesMatrix acc = SeriesMatrix::identity(tag, n, ring, cc);
    std::size_t ci = 0;
    for (const auto& [i, j, p] : cd.pairings) {
        if (p < 2) continue;
        if (ci >= coords.size()) fail(Errc::dimension_error, "missing coordinates for a root");
        const auto& xs = coords[ci++];
        if (xs.size() + 1 != static_cast<std::size_t>(p))
            fail(Errc::dimension_error, "root with pairing p needs p-1 coordinates");
        PuiseuxSeries pol = PuiseuxSeries::zero(ring, cc);
        for (std::size_t s = 0; s < xs.size(); ++s)
            pol = pol + PuiseuxSeries::monomial(ring, cc, AuxPoly::constant(ring, cc, xs[s]),
                                                Frac(static_cast<long long>(s) + 1));
        SeriesMatrix u = SeriesMatrix::identity(tag, n, ring, cc);
        u.at(i, j) = pol;
        acc = acc * u;
    }
    return acc * torus_element(tag, n, ring, mu);
}

IndexResult cell_index_prediction(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                                  const std::vector<std::vector<Scalar>>& coords) {
    CellType type = classify_cell(tag, n, mu);
    if (mu.is_zero()) return IndexResult::integral();
    if (type == CellType::minuscule) return IndexResult::zero();

    // Unique root with pairing >= 2 in both remaining shapes.
    long long h = 0;
    for (const auto& [i, j, p] : cell_datum(tag, n, mu).pairings) h = std::max(h, p);
    const std::vector<Scalar>& xs = coords.empty() ? std::vector<Scalar>{} : coords[0];

    if (type == CellType::quasi_minuscule) {
        bool x_nonzero = !xs.empty() && !xs[0].is_zero();
        return x_nonzero ? IndexResult::positive(Frac(h - 1)) : IndexResult::zero();
    }

    // Rank one: r = max{(h - i)/b : p_i C(i, b) != 0 in k, 1 <= b <= i}.
    bool any = false;
    Frac best(0);
    for (std::size_t s = 0; s < xs.size(); ++s) {
        if (xs[s].is_zero()) continue;
        long long i = static_cast<long long>(s) + 1;
        mpz_class c = 1;
        for (long long b = 1; b <= i; ++b) {
            c *= static_cast<long>(i - (b - 1));
            mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(b));
            if (Scalar::from_mpz(ring, c).is_zero()) continue;
            Frac cand(h - i, b);
            if (!any || best < cand) best = cand;
            any = true;
        }
    }
    return any ? IndexResult::positive(best) : IndexResult::zero();
}

bool index_zero_iff_P_zero(GroupTag tag, int n, const RingPtr& ring, const Coweight& mu,
                           const std::vector<Scalar>& P) {
    SeriesMatrix g = assemble_cell_point(tag, n, ring, mu, {P});
    IndexResult idx = index_of(g);
    bool p_zero = std::all_of(P.begin(), P.end(), [](const Scalar& c) { return c.is_zero(); });
    return (idx.kind == IndexResult::Kind::zero) == p_zero;
}

bool residue_charpoly_matches(const ResidueHom& res, const Coweight& mu) {
    if (res.kind != ResidueHom::Kind::multiplicative) return false;
    const RingPtr& ring = res.mat.ring;
    CtxPtr cx = VarContext::make({{"l", true}, {"X", false}});
    PolyMatrix shifted;
    shifted.n = res.mat.n;
    shifted.ring = ring;
    shifted.ctx = cx;
    AuxPoly X = AuxPoly::variable(ring, cx, "X");
    for (int i = 0; i < res.mat.n; ++i)
        for (int j = 0; j < res.mat.n; ++j) {
            AuxPoly v = -res.mat.at(i, j).embed(cx);
            if (i == j) v = v + X;
            shifted.e.push_back(v);
        }
    AuxPoly charpoly = shifted.det();
    AuxPoly expect = AuxPoly::from_int(ring, cx, 1);
    for (long long m : mu.mu)
        expect = expect * (X - AuxPoly::variable(ring, cx, "l", static_cast<int>(m)));
    return charpoly == expect;
}

} // namespace ramres
