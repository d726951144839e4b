#include "hotelling/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hotelling {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

struct SplitMix64 {
    std::uint64_t state;

    std::uint64_t next() {
        std::uint64_t z = (state += kGamma);
        return mix64(z);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace

double sample_radius(const Distribution& dist, double u) {
    if (!(u >= 0.0 && u < 1.0)) throw std::invalid_argument("sample_radius: u outside [0, 1)");
    switch (dist.family()) {
        case Family::uniform:
            return u;
        case Family::linear: {
            // root of q t + r t^2 / 2 = u in stable form
            const double q = dist.q(), r = dist.r();
            if (u == 0.0) return 0.0;
            return 2.0 * u / (q + std::sqrt(q * q + 2.0 * r * u));
        }
        case Family::pareto:
            return dist.xi() * std::pow(1.0 - u, -1.0 / dist.alpha());
        case Family::exponential:
            return -std::log1p(-u) / dist.lambda();
    }
    throw std::logic_error("sample_radius: bad enum");
}

ClientSample draw_client(const Distribution& dist, Variant variant,
                         std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng{mix64(seed + kGamma * (index + 1))};
    ClientSample cs;
    cs.position = rng.next_unit();
    cs.reach_left = sample_radius(dist, rng.next_unit());
    cs.reach_right = variant == Variant::symmetric ? cs.reach_left
                                                   : sample_radius(dist, rng.next_unit());
    return cs;
}

UtilityEstimate simulate_utilities(const Game& game, const Profile& profile,
                                   const SimulationConfig& config) {
    if (config.variant != game.variant())
        throw std::invalid_argument("simulate_utilities: config variant differs from game");
    if (config.num_clients == 0)
        throw std::invalid_argument("simulate_utilities: need at least one client");

    const auto& locs = profile.group_locations();
    std::vector<std::uint64_t> wins(locs.size(), 0);

    for (std::uint64_t k = 0; k < config.num_clients; ++k) {
        const ClientSample cs = draw_client(game.dist(), game.variant(), config.seed, k);
        const auto right = std::lower_bound(locs.begin(), locs.end(), cs.position);

        bool has_left = right != locs.begin();
        bool has_right = right != locs.end();
        const double dl = has_left ? cs.position - *(right - 1) : 0.0;
        const double dr = has_right ? *right - cs.position : 0.0;
        has_left = has_left && dl <= cs.reach_left;
        has_right = has_right && dr <= cs.reach_right;

        if (has_left && has_right)
            ++wins[static_cast<std::size_t>((dl <= dr ? right - 1 : right) - locs.begin())];
        else if (has_left)
            ++wins[static_cast<std::size_t>(right - 1 - locs.begin())];
        else if (has_right)
            ++wins[static_cast<std::size_t>(right - locs.begin())];
    }

    const double n = static_cast<double>(config.num_clients);
    UtilityEstimate est;
    est.per_player.reserve(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const std::size_t g = profile.group_of()[i];
        const double share = 1.0 / static_cast<double>(profile.group_sizes()[g]);
        const double w = static_cast<double>(wins[g]);
        PlayerEstimate pe;
        pe.mean = w * share / n;
        if (config.num_clients > 1) {
            // per-client contribution is share or 0, so the sample variance
            // reduces to a scaled binomial form
            const double var = share * share * w * (1.0 - w / n) / (n - 1.0);
            pe.std_error = std::sqrt(var / n);
        }
        est.per_player.push_back(pe);
    }
    return est;
}

double deviation_utility(const Game& game, const std::vector<double>& others_sorted,
                         double location) {
    const auto lo = std::lower_bound(others_sorted.begin(), others_sorted.end(), location);
    const auto hi = std::upper_bound(lo, others_sorted.end(), location);
    const double gamma = 1.0 + static_cast<double>(hi - lo);

    const double ul = lo == others_sorted.begin()
                          ? game.hinterland_value(location)
                          : game.internal_value(location - *(lo - 1));
    const double ur = hi == others_sorted.end()
                          ? game.hinterland_value(1.0 - location)
                          : game.internal_value(*hi - location);
    return (ul + ur) / gamma;
}

BestResponse brute_force_best_response(const Game& game, const Profile& profile,
                                       std::size_t player, double grid_step) {
    if (player >= profile.size())
        throw std::invalid_argument("brute_force_best_response: player index out of range");
    if (!(grid_step > 0.0 && grid_step <= 0.5))
        throw std::invalid_argument("brute_force_best_response: grid_step must be in (0, 0.5]");

    std::vector<double> others = profile.locations();
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(player));

    std::vector<double> candidates;
    const std::size_t steps = static_cast<std::size_t>(std::ceil(1.0 / grid_step));
    candidates.reserve(steps + 1 + others.size());
    for (std::size_t j = 0; j <= steps; ++j)
        candidates.push_back(std::min(static_cast<double>(j) * grid_step, 1.0));
    candidates.insert(candidates.end(), others.begin(), others.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<double> values(candidates.size());
    double best = -1.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        values[i] = deviation_utility(game, others, candidates[i]);
        best = std::max(best, values[i]);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (values[i] >= best - 1e-12) return {candidates[i], values[i]};
    throw std::logic_error("brute_force_best_response: empty candidate set");
}

std::vector<ImprovingMove> find_improving_moves(const Game& game, const Profile& profile,
                                                double grid_step, double slack) {
    const UtilityBreakdown base = game.profile_utilities(profile);
    std::vector<ImprovingMove> moves;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const BestResponse br = brute_force_best_response(game, profile, i, grid_step);
        const double gain = br.utility - base.per_player[i].total;
        if (gain > slack) moves.push_back({i, br.location, gain});
    }
    return moves;
}

bool verify_equilibrium_empirically(const Game& game, const Profile& profile,
                                    double grid_step, double slack) {
    return find_improving_moves(game, profile, grid_step, slack).empty();
}

}  // namespace hotelling
