#pragma once

#include <cstdint>
#include <vector>

#include "hotelling/game.hpp"

namespace hotelling {

struct SimulationConfig {
    std::uint64_t num_clients = 1'000'000;
    std::uint64_t seed = 0;
    Variant variant = Variant::symmetric;  // must match the game's variant
};

struct PlayerEstimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct UtilityEstimate {
    std::vector<PlayerEstimate> per_player;
};

struct BestResponse {
    double location = 0.0;
    double utility = 0.0;
};

struct ImprovingMove {
    std::size_t player = 0;
    double location = 0.0;
    double gain = 0.0;
};

// One client's draws: a deterministic function of (seed, index), so results
// are reproducible regardless of evaluation order.
struct ClientSample {
    double position = 0.0;
    double reach_left = 0.0;
    double reach_right = 0.0;
};

ClientSample draw_client(const Distribution& dist, Variant variant,
                         std::uint64_t seed, std::uint64_t index);

// Inverse-CDF radius sample from a unit draw in [0, 1).
double sample_radius(const Distribution& dist, double u);

// Empirical per-player utilities: each client patronizes the nearest location
// within reach (left on distance ties), and colocated players split the win.
UtilityEstimate simulate_utilities(const Game& game, const Profile& profile,
                                   const SimulationConfig& config);

// Utility of a single player placed at `location` against fixed opponents.
double deviation_utility(const Game& game, const std::vector<double>& others_sorted,
                         double location);

// Argmax of deviation_utility over {0, step, ..., 1} plus the opponents'
// locations; leftmost argmax within 1e-12 on value ties.
BestResponse brute_force_best_response(const Game& game, const Profile& profile,
                                       std::size_t player, double grid_step = 1e-3);

// All players whose best response beats their current utility by > slack.
std::vector<ImprovingMove> find_improving_moves(const Game& game, const Profile& profile,
                                                double grid_step = 1e-3,
                                                double slack = 1e-6);

bool verify_equilibrium_empirically(const Game& game, const Profile& profile,
                                    double grid_step = 1e-3, double slack = 1e-6);

}  // namespace hotelling
