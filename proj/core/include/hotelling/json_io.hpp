#pragma once

#include "json.hpp"

#include "hotelling/equilibrium.hpp"
#include "hotelling/game.hpp"
#include "hotelling/oracle.hpp"

namespace hotelling {

// Schemas:
//   distribution  {"family":"exponential","lambda":3.0}
//   game          {"n":4,"variant":"asymmetric","dist":{...}}
//   profile       [0.2,0.5,0.6]
// Parsers reject unknown and missing keys with invalid_argument.

nlohmann::json to_json(const Distribution& dist);
Distribution distribution_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Game& game);
Game game_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Profile& profile);
Profile profile_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CanonicalPair& pair, int n);
nlohmann::json to_json(const EquilibriumReport& report, int n);
EquilibriumReport equilibrium_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const UtilityBreakdown& breakdown);
nlohmann::json to_json(const UtilityEstimate& estimate);

}  // namespace hotelling
