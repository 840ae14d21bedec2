#ifndef RAMRES_REPORT_HPP
#define RAMRES_REPORT_HPP

#include <string>

#include "json.hpp"

#include "ramres/grass.hpp"
#include "ramres/indexres.hpp"
#include "ramres/jets.hpp"

namespace ramres {

// Machine-readable result records; the text output of the CLI is a
// formatting of the same objects.
nlohmann::json to_json(const IndexResult& idx);
nlohmann::json to_json(const ResidueHom& res);
nlohmann::json to_json(const Analysis& a);
nlohmann::json to_json(const JetResidue& jr);
nlohmann::json cartan_json(const Coweight& mu, const std::optional<CellMembership>& mem);

std::string analysis_text(const Analysis& a);

} // namespace ramres

#endif
