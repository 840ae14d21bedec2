#include "ramres/dsl.hpp"

#include <cctype>

namespace ramres {

namespace {

struct Parser {
    const std::string& src;
    std::size_t pos = 0;
    RingPtr ring;
    CtxPtr ctx = VarContext::constants();

    [[noreturn]] void err(const std::string& what) const {
        fail(Errc::syntax_error, what + " at offset " + std::to_string(pos) + " in '" + src + "'");
    }

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < src.size() && src[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) err(std::string("expected '") + c + "'");
    }

    bool at_number() {
        skip_ws();
        return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
    }

    long long number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (start == pos) err("expected a number");
        return std::stoll(src.substr(start, pos - start));
    }

    long long signed_number() {
        skip_ws();
        bool neg = accept('-');
        long long v = number();
        return neg ? -v : v;
    }

    // exponent: integer or fraction p/q
    Frac exponent() {
        long long p = signed_number();
        if (accept('/')) return Frac(p, number());
        return Frac(p);
    }

    // coefficient grammar: sums of products of atoms, with parentheses, so
    // that rendered coefficients parse back.
    Scalar primary() {
        skip_ws();
        if (pos >= src.size()) err("expected a coefficient");
        char c = src[pos];
        if (c == '(') {
            ++pos;
            Scalar v = coeff_sum();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar::from_int(ring, number());
        if (c == 'a') {
            if (ring->kind() != RingKind::rational_function) err("'a' needs the field fp:<p>(a)");
            ++pos;
            Scalar a = Scalar::variable(ring);
            if (accept('^')) return a.pow(static_cast<unsigned long long>(number()));
            return a;
        }
        if (c == 'e') {
            if (ring->kind() != RingKind::dual_numbers) err("'e' needs the field dual:q");
            ++pos;
            Scalar e = Scalar::epsilon(ring);
            if (accept('^')) return e.pow(static_cast<unsigned long long>(number()));
            return e;
        }
        err("unexpected character in coefficient");
    }

    Scalar factor() {
        Scalar v = primary();
        while (peek('/')) {
            ++pos;
            Scalar d = primary();
            if (!d.is_unit()) fail(Errc::not_a_unit, "division by the non-unit " + d.str());
            v = v * d.inv();
        }
        return v;
    }

    Scalar coeff_product() {
        Scalar v = factor();
        while (true) {
            skip_ws();
            if (pos >= src.size() || src[pos] != '*') break;
            std::size_t save = pos;
            ++pos;
            if (at_t()) { pos = save; break; }
            v = v * factor();
        }
        return v;
    }

    Scalar coeff_sum() {
        skip_ws();
        bool neg = accept('-');
        Scalar v = coeff_product();
        if (neg) v = -v;
        while (true) {
            skip_ws();
            if (accept('+')) v = v + coeff_product();
            else if (accept('-')) v = v - coeff_product();
            else break;
        }
        return v;
    }

    bool at_t() {
        skip_ws();
        // 't' begins a power of t only when not followed by an identifier char
        return pos < src.size() && src[pos] == 't';
    }

    // term := [-] (coeff ['*' tpart] | tpart)
    PuiseuxSeries term(bool negated) {
        Scalar coeff = Scalar::one(ring);
        bool have_coeff = false;
        skip_ws();
        if (!at_t()) {
            coeff = coeff_product();
            have_coeff = true;
            accept('*');
        }
        Frac e(0);
        if (at_t()) {
            ++pos;
            if (accept('^')) e = exponent();
            else e = Frac(1);
        } else if (!have_coeff) {
            err("expected a term");
        }
        if (negated) coeff = -coeff;
        return PuiseuxSeries::monomial(ring, ctx, AuxPoly::constant(ring, ctx, coeff), e);
    }

    PuiseuxSeries entry() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        PuiseuxSeries acc = term(neg);
        while (true) {
            skip_ws();
            if (accept('+')) acc = acc + term(false);
            else if (accept('-')) acc = acc + term(true);
            else break;
        }
        return acc;
    }

    std::vector<PuiseuxSeries> row() {
        expect('[');
        std::vector<PuiseuxSeries> out;
        out.push_back(entry());
        while (accept(',')) out.push_back(entry());
        expect(']');
        return out;
    }

    SeriesMatrix matrix() {
        expect('[');
        std::vector<std::vector<PuiseuxSeries>> rows;
        rows.push_back(row());
        while (accept(',')) rows.push_back(row());
        expect(']');
        skip_ws();
        if (pos != src.size()) err("trailing input");
        std::size_t n = rows.size();
        if (n < 1 || n > 4) fail(Errc::dimension_error, "matrix dimension must be 1..4");
        std::vector<PuiseuxSeries> flat;
        for (auto& r : rows) {
            if (r.size() != n) fail(Errc::dimension_error, "matrix must be square");
            for (auto& e : r) flat.push_back(std::move(e));
        }
        // Tag by determinant: exactly 1 -> SL, otherwise GL with a unit check.
        SeriesMatrix m = SeriesMatrix::make(GroupTag::GL, static_cast<int>(n), flat, false);
        PuiseuxSeries d = m.det();
        bool is_sl = false;
        if (d.exact() && d.raw_terms().size() == 1) {
            const auto& [k, c] = *d.raw_terms().begin();
            is_sl = (k == 0 && c.is_one());
        }
        return SeriesMatrix::make(is_sl ? GroupTag::SL : GroupTag::GL, static_cast<int>(n), std::move(flat));
    }
};

} // namespace

PuiseuxSeries parse_series(const std::string& src, const RingPtr& ring) {
    Parser p{src, 0, ring};
    PuiseuxSeries s = p.entry();
    p.skip_ws();
    if (p.pos != src.size()) p.err("trailing input");
    return s;
}

SeriesMatrix parse_matrix(const std::string& src, const RingPtr& ring) {
    Parser p{src, 0, ring};
    return p.matrix();
}

std::string render_series(const PuiseuxSeries& s) { return s.str(); }

std::string render_matrix(const SeriesMatrix& m) { return m.str(); }

} // namespace ramres
