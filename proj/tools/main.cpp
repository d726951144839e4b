// Command line front end: canonical | check | threshold | sweep | simulate.
//
// Exit codes: 0 success (equilibrium verdicts are data, never a failure),
// 2 invalid input, 3 numerical failure, 4 unwritable output path.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hotelling/equilibrium.hpp"
#include "hotelling/json_io.hpp"
#include "hotelling/numeric.hpp"
#include "hotelling/oracle.hpp"

using nlohmann::json;
using namespace hotelling;

namespace {

struct OutputError {
    std::string path;
};

bool log_enabled() {
    const char* v = std::getenv("HOTELLING_LOG");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

void log_line(const std::string& msg) {
    if (log_enabled()) std::cerr << "[hotelling] " << msg << "\n";
}

std::string fmt12(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt12(std::optional<double> v) { return v ? fmt12(*v) : "nan"; }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream ofs(out_path);
    if (!ofs) throw OutputError{out_path};
    ofs << text;
    if (!ofs.flush()) throw OutputError{out_path};
    log_line("wrote " + out_path);
}

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(what) + ": bad number '" + item + "'");
        }
    }
    if (values.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

// "lo:hi" or "lo:hi:step"
std::vector<double> parse_range_spec(const std::string& text, std::size_t parts, const char* what) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) values.push_back(std::stod(item));
    if (values.size() != parts)
        throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(parts) +
                                    " colon-separated numbers, got '" + text + "'");
    return values;
}

struct GameFlags {
    std::string game_json;
    std::string family;
    std::string variant = "asymmetric";
    int n = 0;
    double lambda = 0.0;
    double alpha = 0.0;
    double xi = 0.01;
    double r = 0.0;

    void add_to(CLI::App* cmd, bool with_n = true) {
        cmd->add_option("--game", game_json, "Game as inline JSON or a path to a JSON file");
        cmd->add_option("--family", family, "uniform | linear | pareto | exponential");
        cmd->add_option("--variant", variant, "symmetric | asymmetric (default asymmetric)");
        if (with_n) cmd->add_option("--n", n, "Number of players (>= 2)");
        cmd->add_option("--lambda", lambda, "Exponential rate");
        cmd->add_option("--alpha", alpha, "Pareto shape");
        cmd->add_option("--xi", xi, "Pareto scale (default 0.01)");
        cmd->add_option("--r", r, "Linear density slope in [-2, 2]");
    }

    Distribution distribution() const {
        switch (family_from_name(family)) {
            case Family::uniform: return Distribution::uniform();
            case Family::linear: return Distribution::linear(r);
            case Family::pareto: return Distribution::pareto(alpha, xi);
            case Family::exponential: return Distribution::exponential(lambda);
        }
        throw std::invalid_argument("unknown family");
    }

    Game build() const {
        if (!game_json.empty()) {
            std::string text = game_json;
            if (text.find('{') == std::string::npos) {
                std::ifstream ifs(text);
                if (!ifs) throw std::invalid_argument("cannot read game file '" + text + "'");
                std::stringstream buf;
                buf << ifs.rdbuf();
                text = buf.str();
            }
            return game_from_json(json::parse(text));
        }
        if (family.empty())
            throw std::invalid_argument("provide --game, or --family plus --n");
        if (n < 2) throw std::invalid_argument("provide --n >= 2");
        return Game(n, distribution(), variant_from_name(variant));
    }
};

std::string pretty_pair(const CanonicalPair& pair, int n) {
    std::string s = "a=" + fmt12(pair.a) + " b=" + fmt12(pair.b) + " profile=[";
    const Profile profile = pair.induced_profile(n);
    for (std::size_t i = 0; i < profile.size(); ++i)
        s += (i ? ", " : "") + fmt12(profile[i]);
    return s + "]";
}

int run_canonical(const GameFlags& gf, const std::string& out, bool pretty) {
    const Game game = gf.build();
    log_line("solving canonical pair, n=" + std::to_string(game.n()));
    const auto pair = canonical_pair(game);
    const double hp = game.h_prime(0.5);
    const double mp = game.m_prime(0.0);

    std::string text;
    if (pretty) {
        const std::string cmp = " (H'(1/2)=" + fmt12(hp) + (hp > mp ? " > " : " <= ") +
                                "M'(0)=" + fmt12(mp) + ")";
        text = pair ? "pair: " + pretty_pair(*pair, game.n()) + cmp + "\n"
                    : "none" + cmp + "\n";
    } else {
        json j{{"game", to_json(game)},
               {"h_prime_half", hp},
               {"m_prime_zero", mp},
               {"pair", pair ? to_json(*pair, game.n()) : json(nullptr)}};
        text = j.dump() + "\n";
    }
    emit(text, out);
    return 0;
}

int run_check(const GameFlags& gf, bool empirical, double grid, std::uint64_t clients,
              std::uint64_t seed, const std::string& out, bool pretty) {
    const Game game = gf.build();
    const EquilibriumReport report = decide_equilibrium(game);

    std::optional<Profile> candidate;
    if (report.pair)
        candidate = report.pair->induced_profile(game.n());
    else if (game.n() == 2)
        candidate = Profile({0.5, 0.5});

    json j{{"game", to_json(game)}, {"report", to_json(report, game.n())}};
    std::string summary = std::string("equilibrium: ") + (report.exists ? "yes" : "no") +
                          " (" + reason_name(report.reason) + ")";
    if (report.pair) summary += "\n  " + pretty_pair(*report.pair, game.n());
    if (report.peripheral_margin)
        summary += "\n  peripheral margin " + fmt12(report.peripheral_margin) +
                   ", internal margin " + fmt12(report.internal_margin);
    for (const auto& w : report.warnings) summary += "\n  warning: " + w;

    if (empirical) {
        if (candidate) {
            log_line("grid search, step=" + fmt12(grid));
            const auto moves = find_improving_moves(game, *candidate, grid);
            json jmoves = json::array();
            for (const auto& m : moves)
                jmoves.push_back({{"player", m.player},
                                  {"location", m.location},
                                  {"gain", m.gain}});
            json emp{{"profile", to_json(*candidate)},
                     {"grid_step", grid},
                     {"verdict", moves.empty()},
                     {"improving_moves", jmoves}};
            if (clients > 0) {
                SimulationConfig config;
                config.num_clients = clients;
                config.seed = seed;
                config.variant = game.variant();
                const auto est = simulate_utilities(game, *candidate, config);
                emp["clients"] = clients;
                emp["seed"] = seed;
                emp["estimates"] = to_json(est);
            }
            j["empirical"] = emp;
            if (moves.empty())
                summary += "\n  empirical: no improving move found";
            else
                summary += "\n  empirical: player " + std::to_string(moves[0].player) + " -> " +
                           fmt12(moves[0].location) + " gains " + fmt12(moves[0].gain);
        } else {
            j["empirical"] = nullptr;
            summary += "\n  empirical: skipped (no candidate profile)";
        }
    }

    emit(pretty ? summary + "\n" : j.dump() + "\n", out);
    return 0;
}

int run_threshold(const std::string& variant_name_in, const std::string& family_name_in,
                  const std::string& n_range, const std::string& out, const std::string& format) {
    const Variant variant = variant_from_name(variant_name_in);
    const Family family = family_from_name(family_name_in);

    if (family == Family::pareto && variant == Variant::symmetric) {
        const double z = pareto_threshold();
        const double p = std::pow(2.0, 1.0 / z);
        const double residual = p * std::pow(2.0 + p, z) - 8.0;
        std::string text;
        if (format == "json")
            text = json{{"family", "pareto"},
                        {"variant", "symmetric"},
                        {"z", z},
                        {"residual", residual}}
                       .dump() +
                   "\n";
        else
            text = "z,residual\n" + fmt12(z) + "," + fmt12(residual) + "\n";
        emit(text, out);
        return 0;
    }

    if (family != Family::exponential)
        throw std::invalid_argument("threshold supports exponential (both variants) and "
                                    "symmetric pareto");

    const auto range = parse_range_spec(n_range, 2, "--n-range");
    const int lo = static_cast<int>(range[0]);
    const int hi = static_cast<int>(range[1]);
    if (lo < 3 || hi < lo) throw std::invalid_argument("--n-range: need 3 <= lo <= hi");

    std::string header;
    json jout{{"family", "exponential"}, {"variant", variant_name(variant)}};
    if (variant == Variant::asymmetric) {
        const AlphaBeta ab = exp_asym_alpha0();
        header = "# alpha0=" + fmt12(ab.alpha0) + " beta0=" + fmt12(ab.beta0) + "\n";
        jout["alpha0"] = ab.alpha0;
        jout["beta0"] = ab.beta0;
    }

    json rows = json::array();
    std::string csv = header + "n,threshold\n";
    for (int n = lo; n <= hi; ++n) {
        const double t = variant == Variant::asymmetric ? exp_asym_threshold(n)
                                                        : exp_sym_threshold(n);
        csv += std::to_string(n) + "," + fmt12(t) + "\n";
        rows.push_back({{"n", n}, {"threshold", t}});
    }
    jout["rows"] = rows;
    emit(format == "json" ? jout.dump() + "\n" : csv, out);
    return 0;
}

struct SweepRow {
    double axis_value = 0.0;
    std::optional<double> lambda, beta1, beta2;
    std::optional<double> a, b, peripheral, internal;
    bool exists = false;
};

int run_sweep(const GameFlags& gf, const std::string& axis, const std::string& range_spec,
              const std::string& out, const std::string& format) {
    const auto range = parse_range_spec(range_spec, 3, "--range");
    const double start = range[0], stop = range[1], step = range[2];
    if (!(start < stop) || !(step > 0.0))
        throw std::invalid_argument("--range: need start < stop and step > 0");
    if ((stop - start) / step > 1e6)
        throw std::invalid_argument("--range: more than 1e6 grid points");

    const bool alpha_axis = axis == "alpha";
    if (axis != "lambda" && axis != "alpha" && axis != "n" && axis != "pareto-shape")
        throw std::invalid_argument("--axis: one of lambda, alpha, n, pareto-shape");
    if ((axis == "lambda" || alpha_axis) && !gf.family.empty() && gf.family != "exponential")
        throw std::invalid_argument("--axis " + axis + " requires the exponential family");
    if (alpha_axis && variant_from_name(gf.variant) != Variant::asymmetric)
        throw std::invalid_argument("--axis alpha is the asymmetric exponential system");
    if (axis != "n" && gf.n < 2) throw std::invalid_argument("provide --n >= 2");

    const Variant variant = variant_from_name(gf.variant);
    std::vector<SweepRow> table;
    const std::size_t count = static_cast<std::size_t>((stop - start) / step + 0.5) + 1;
    for (std::size_t i = 0; i < count; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + step * 1e-9) break;
        SweepRow row;
        row.axis_value = v;

        std::optional<Game> game;
        if (axis == "lambda") {
            game.emplace(gf.n, Distribution::exponential(v), variant);
        } else if (alpha_axis) {
            const double lam = v * (gf.n + 1) - 2.0 * std::log((1.0 + v) / 2.0);
            row.lambda = lam;
            row.beta1 = exp_asym_beta1(v);
            row.beta2 = exp_asym_beta2(v);
            game.emplace(gf.n, Distribution::exponential(lam), variant);
        } else if (axis == "n") {
            const int n = static_cast<int>(std::lround(v));
            if (n < 2) throw std::invalid_argument("--axis n: values must be >= 2");
            game.emplace(n, gf.distribution(), variant);
        } else {
            game.emplace(gf.n, Distribution::pareto(v, gf.xi), variant);
        }

        const EquilibriumReport report = decide_equilibrium(*game);
        if (report.pair) {
            row.a = report.pair->a;
            row.b = report.pair->b;
        }
        row.peripheral = report.peripheral_margin;
        row.internal = report.internal_margin;
        row.exists = report.exists;
        table.push_back(row);
    }
    log_line("sweep rows: " + std::to_string(table.size()));

    std::string fixed = "family=" + (alpha_axis || axis == "lambda" ? "exponential" : gf.family) +
                        " variant=" + variant_name(variant);
    if (axis != "n") fixed += " n=" + std::to_string(gf.n);
    if (axis == "pareto-shape") fixed += " xi=" + fmt12(gf.xi);

    std::string text;
    if (format == "json") {
        json rows = json::array();
        for (const auto& r : table) {
            json jr{{axis, r.axis_value}, {"exists", r.exists}};
            jr["a"] = r.a ? json(*r.a) : json(nullptr);
            jr["b"] = r.b ? json(*r.b) : json(nullptr);
            jr["peripheral_margin"] = r.peripheral ? json(*r.peripheral) : json(nullptr);
            jr["internal_margin"] = r.internal ? json(*r.internal) : json(nullptr);
            if (alpha_axis) {
                jr["lambda"] = *r.lambda;
                jr["beta1"] = *r.beta1;
                jr["beta2"] = r.beta2 ? json(*r.beta2) : json(nullptr);
            }
            rows.push_back(jr);
        }
        text = json{{"axis", axis}, {"fixed", fixed}, {"rows", rows}}.dump() + "\n";
    } else {
        text = "# fixed: " + fixed + "\n";
        text += alpha_axis ? "alpha,lambda,beta1,beta2,a,b,peripheral_margin,internal_margin,exists\n"
                           : axis + ",a,b,peripheral_margin,internal_margin,exists\n";
        for (const auto& r : table) {
            text += fmt12(r.axis_value) + ",";
            if (alpha_axis) text += fmt12(r.lambda) + "," + fmt12(r.beta1) + "," + fmt12(r.beta2) + ",";
            text += fmt12(r.a) + "," + fmt12(r.b) + "," + fmt12(r.peripheral) + "," +
                    fmt12(r.internal) + "," + (r.exists ? "true" : "false") + "\n";
        }
    }
    emit(text, out);
    return 0;
}

int run_simulate(const GameFlags& gf, const std::string& profile_spec, std::uint64_t clients,
                 std::uint64_t seed, const std::string& out, bool pretty) {
    const Game game = gf.build();
    const Profile profile(parse_number_list(profile_spec, "--profile"));

    SimulationConfig config;
    config.num_clients = clients;
    config.seed = seed;
    config.variant = game.variant();
    log_line("simulating " + std::to_string(clients) + " clients");
    const UtilityEstimate est = simulate_utilities(game, profile, config);
    const UtilityBreakdown analytic = game.profile_utilities(profile);

    json players = json::array();
    std::string table = "player  location        mean        std_error   analytic    z\n";
    double total_mean = 0.0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const double mean = est.per_player[i].mean;
        const double se = est.per_player[i].std_error;
        const double exact = analytic.per_player[i].total;
        const double z = se > 0.0 ? (mean - exact) / se : 0.0;
        total_mean += mean;
        players.push_back({{"location", profile[i]},
                           {"mean", mean},
                           {"std_error", se},
                           {"analytic", exact},
                           {"z", z}});
        char line[160];
        std::snprintf(line, sizeof line, "%-7zu %-15.12g %-11.6g %-11.3g %-11.6g %+.2f\n", i,
                      profile[i], mean, se, exact, z);
        table += line;
    }
    json j{{"game", to_json(game)},     {"profile", to_json(profile)},
           {"clients", clients},        {"seed", seed},
           {"players", players},        {"total_mean", total_mean},
           {"total_analytic", analytic.sum()}};
    table += "total mean " + fmt12(total_mean) + ", total analytic " + fmt12(analytic.sum()) + "\n";
    emit(pretty ? table : j.dump() + "\n", out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Location competition on [0,1] with tolerance-limited clients: "
                 "canonical spacing, equilibrium verdicts, thresholds, sweeps, simulation"};
    app.require_subcommand(1);

    std::string out, format = "csv";
    bool pretty = false;

    GameFlags gf_canonical, gf_check, gf_sweep, gf_simulate;

    auto* cmd_canonical = app.add_subcommand("canonical", "Solve the canonical spacing pair");
    gf_canonical.add_to(cmd_canonical);
    cmd_canonical->add_option("--out", out, "Write to file instead of stdout");
    cmd_canonical->add_flag("--pretty", pretty, "Human-readable summary");

    auto* cmd_check = app.add_subcommand("check", "Decide equilibrium existence");
    gf_check.add_to(cmd_check);
    bool empirical = false;
    double grid = 1e-3;
    std::uint64_t check_clients = 0, check_seed = 0;
    cmd_check->add_flag("--empirical", empirical, "Grid best-response search on the candidate");
    cmd_check->add_option("--grid", grid, "Grid step for --empirical (default 1e-3)");
    cmd_check->add_option("--clients", check_clients, "Also estimate utilities by simulation");
    cmd_check->add_option("--seed", check_seed, "Simulation seed (default 0)");
    cmd_check->add_option("--out", out, "Write to file instead of stdout");
    cmd_check->add_flag("--pretty", pretty, "Human-readable summary");

    auto* cmd_threshold = app.add_subcommand("threshold", "Existence thresholds per family");
    std::string th_variant = "asymmetric", th_family = "exponential", n_range = "3:10";
    cmd_threshold->add_option("--variant", th_variant, "symmetric | asymmetric");
    cmd_threshold->add_option("--family", th_family, "exponential | pareto");
    cmd_threshold->add_option("--n-range", n_range, "lo:hi player counts (default 3:10)");
    cmd_threshold->add_option("--out", out, "Write to file instead of stdout");
    cmd_threshold->add_option("--format", format, "csv (default) | json");

    auto* cmd_sweep = app.add_subcommand("sweep", "Tabulate verdicts along one parameter axis");
    std::string axis, range_spec;
    gf_sweep.add_to(cmd_sweep);
    cmd_sweep->add_option("--axis", axis, "lambda | alpha | n | pareto-shape")->required();
    cmd_sweep->add_option("--range", range_spec, "start:stop:step")->required();
    cmd_sweep->add_option("--out", out, "Write to file instead of stdout");
    cmd_sweep->add_option("--format", format, "csv (default) | json");

    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo utilities for a profile");
    gf_simulate.add_to(cmd_simulate);
    std::string profile_spec;
    std::uint64_t sim_clients = 1'000'000, sim_seed = 0;
    cmd_simulate->add_option("--profile", profile_spec, "Comma-separated locations")->required();
    cmd_simulate->add_option("--clients", sim_clients, "Sample count (default 1e6)");
    cmd_simulate->add_option("--seed", sim_seed, "RNG seed (default 0)");
    cmd_simulate->add_option("--out", out, "Write to file instead of stdout");
    cmd_simulate->add_flag("--pretty", pretty, "Human-readable summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_canonical->parsed()) return run_canonical(gf_canonical, out, pretty);
        if (cmd_check->parsed())
            return run_check(gf_check, empirical, grid, check_clients, check_seed, out, pretty);
        if (cmd_threshold->parsed())
            return run_threshold(th_variant, th_family, n_range, out, format);
        if (cmd_sweep->parsed()) return run_sweep(gf_sweep, axis, range_spec, out, format);
        if (cmd_simulate->parsed())
            return run_simulate(gf_simulate, profile_spec, sim_clients, sim_seed, out, pretty);
        return 2;
    } catch (const OutputError& e) {
        std::cerr << "error: cannot write '" << e.path << "'\n";
        return 4;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
