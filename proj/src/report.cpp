#include "ramres/report.hpp"

namespace ramres {

nlohmann::json to_json(const IndexResult& idx) {
    nlohmann::json j;
    switch (idx.kind) {
        case IndexResult::Kind::integral:
            j = {{"kind", "integral"}, {"num", -1}, {"den", 1}};
            break;
        case IndexResult::Kind::zero:
            j = {{"kind", "zero"}, {"num", 0}, {"den", 1}};
            break;
        case IndexResult::Kind::positive:
            j = {{"kind", "positive"}, {"num", idx.r.num}, {"den", idx.r.den}};
            break;
    }
    return j;
}

namespace {

nlohmann::json matrix_strings(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

} // namespace

nlohmann::json to_json(const ResidueHom& res) {
    nlohmann::json j;
    switch (res.kind) {
        case ResidueHom::Kind::trivial: j["kind"] = "trivial"; break;
        case ResidueHom::Kind::additive: j["kind"] = "additive"; break;
        case ResidueHom::Kind::multiplicative: j["kind"] = "multiplicative"; break;
    }
    if (!res.is_trivial()) j["matrix"] = matrix_strings(res.mat);
    else j["matrix"] = nlohmann::json::array();
    return j;
}

nlohmann::json to_json(const Analysis& a) {
    return {{"gauge", a.gauge_d},
            {"index", to_json(a.index)},
            {"residue", to_json(a.residue)},
            {"checks", {{"hom", a.hom_ok}, {"nontrivial", a.nontrivial}}}};
}

nlohmann::json to_json(const JetResidue& jr) {
    return {{"w", jr.w},
            {"res_along_phi_matches", jr.matches_res_along_phi},
            {"kills_next_level", jr.kills_next_level},
            {"trivial_on_2w_plus_1", jr.trivial_on_2w_plus_1}};
}

nlohmann::json cartan_json(const Coweight& mu, const std::optional<CellMembership>& mem) {
    nlohmann::json j;
    j["mu"] = mu.mu;
    nlohmann::json cm;
    cm["found"] = mem.has_value();
    if (mem) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < mem->h.n(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < mem->h.n(); ++k) row.push_back(mem->h.at(i, k).str());
            rows.push_back(row);
        }
        cm["h"] = rows;
    } else {
        cm["h"] = nlohmann::json::array();
    }
    j["cell_membership"] = cm;
    return j;
}

std::string analysis_text(const Analysis& a) {
    std::string s;
    s += "gauge d      : " + std::to_string(a.gauge_d) + "\n";
    s += "index r(g)   : " + a.index.str() + "\n";
    s += "residue      : " + a.residue.str() + "\n";
    s += "checks       : hom=" + std::string(a.hom_ok ? "ok" : "FAIL") +
         " nontrivial=" + std::string(a.nontrivial ? "ok" : "FAIL") + "\n";
    return s;
}

} // namespace ramres
