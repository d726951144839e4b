#include "hotelling/json_io.hpp"

#include <set>

namespace hotelling {

using nlohmann::json;

namespace {

void expect_keys(const json& j, const std::set<std::string>& required,
                 const std::set<std::string>& optional, const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected an object");
    for (const auto& key : required)
        if (!j.contains(key))
            throw std::invalid_argument(std::string(what) + ": missing key '" + key + "'");
    for (const auto& item : j.items())
        if (!required.count(item.key()) && !optional.count(item.key()))
            throw std::invalid_argument(std::string(what) + ": unknown key '" + item.key() + "'");
}

double number(const json& j, const char* what) {
    if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
    return j.get<double>();
}

}  // namespace

json to_json(const Distribution& dist) {
    json j{{"family", family_name(dist.family())}};
    switch (dist.family()) {
        case Family::uniform: break;
        case Family::linear: j["r"] = dist.r(); break;
        case Family::pareto:
            j["alpha"] = dist.alpha();
            j["xi"] = dist.xi();
            break;
        case Family::exponential: j["lambda"] = dist.lambda(); break;
    }
    return j;
}

Distribution distribution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw std::invalid_argument("distribution: missing key 'family'");
    switch (family_from_name(j.at("family").get<std::string>())) {
        case Family::uniform:
            expect_keys(j, {"family"}, {}, "distribution");
            return Distribution::uniform();
        case Family::linear:
            expect_keys(j, {"family", "r"}, {}, "distribution");
            return Distribution::linear(number(j.at("r"), "r"));
        case Family::pareto:
            expect_keys(j, {"family", "alpha"}, {"xi"}, "distribution");
            return Distribution::pareto(number(j.at("alpha"), "alpha"),
                                        j.contains("xi") ? number(j.at("xi"), "xi") : 0.01);
        case Family::exponential:
            expect_keys(j, {"family", "lambda"}, {}, "distribution");
            return Distribution::exponential(number(j.at("lambda"), "lambda"));
    }
    throw std::logic_error("distribution_from_json: bad enum");
}

json to_json(const Game& game) {
    return {{"n", game.n()},
            {"variant", variant_name(game.variant())},
            {"dist", to_json(game.dist())}};
}

Game game_from_json(const json& j) {
    expect_keys(j, {"n", "variant", "dist"}, {}, "game");
    if (!j.at("n").is_number_integer())
        throw std::invalid_argument("game: 'n' must be an integer");
    return Game(j.at("n").get<int>(), distribution_from_json(j.at("dist")),
                variant_from_name(j.at("variant").get<std::string>()));
}

json to_json(const Profile& profile) { return profile.locations(); }

Profile profile_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("profile: expected a non-empty array");
    std::vector<double> locs;
    locs.reserve(j.size());
    for (const auto& v : j) locs.push_back(number(v, "profile entry"));
    return Profile(std::move(locs));
}

json to_json(const CanonicalPair& pair, int n) {
    return {{"a", pair.a}, {"b", pair.b}, {"profile", to_json(pair.induced_profile(n))}};
}

json to_json(const EquilibriumReport& report, int n) {
    json j{{"exists", report.exists},
           {"reason", reason_name(report.reason)},
           {"pair", report.pair ? to_json(*report.pair, n) : json(nullptr)},
           {"peripheral_margin",
            report.peripheral_margin ? json(*report.peripheral_margin) : json(nullptr)},
           {"internal_margin",
            report.internal_margin ? json(*report.internal_margin) : json(nullptr)},
           {"rho_a", report.rho_a ? json(*report.rho_a) : json(nullptr)},
           {"warnings", report.warnings}};
    return j;
}

EquilibriumReport equilibrium_report_from_json(const json& j) {
    expect_keys(j, {"exists", "reason", "pair", "peripheral_margin", "internal_margin",
                    "rho_a", "warnings"},
                {}, "report");
    EquilibriumReport report;
    report.exists = j.at("exists").get<bool>();
    report.reason = reason_from_name(j.at("reason").get<std::string>());
    if (!j.at("pair").is_null()) {
        const auto& p = j.at("pair");
        report.pair = CanonicalPair{number(p.at("a"), "a"), number(p.at("b"), "b")};
    }
    if (!j.at("peripheral_margin").is_null())
        report.peripheral_margin = number(j.at("peripheral_margin"), "peripheral_margin");
    if (!j.at("internal_margin").is_null())
        report.internal_margin = number(j.at("internal_margin"), "internal_margin");
    if (!j.at("rho_a").is_null()) report.rho_a = number(j.at("rho_a"), "rho_a");
    report.warnings = j.at("warnings").get<std::vector<std::string>>();
    return report;
}

json to_json(const UtilityBreakdown& breakdown) {
    json players = json::array();
    for (const auto& u : breakdown.per_player)
        players.push_back({{"left", u.left}, {"right", u.right}, {"total", u.total}});
    return players;
}

json to_json(const UtilityEstimate& estimate) {
    json players = json::array();
    for (const auto& pe : estimate.per_player)
        players.push_back({{"mean", pe.mean}, {"std_error", pe.std_error}});
    return players;
}

}  // namespace hotelling
