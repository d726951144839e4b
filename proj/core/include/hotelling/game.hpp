#pragma once

#include <cstddef>
#include <vector>

#include "hotelling/distribution.hpp"

namespace hotelling {

// symmetric: one radius draw per client, reach is the same on both sides;
// asymmetric: independent left and right draws
enum class Variant { symmetric, asymmetric };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

// Sorted player locations on [0,1]. Exactly equal coordinates form a
// colocation group; group members split attracted mass evenly.
class Profile {
public:
    explicit Profile(std::vector<double> locations);

    std::size_t size() const { return locations_.size(); }
    const std::vector<double>& locations() const { return locations_; }
    double operator[](std::size_t i) const { return locations_[i]; }

    const std::vector<std::size_t>& group_of() const { return group_of_; }
    const std::vector<double>& group_locations() const { return group_locations_; }
    const std::vector<std::size_t>& group_sizes() const { return group_sizes_; }

    bool operator==(const Profile& other) const { return locations_ == other.locations_; }

private:
    std::vector<double> locations_;
    std::vector<std::size_t> group_of_;
    std::vector<double> group_locations_;
    std::vector<std::size_t> group_sizes_;
};

struct PlayerUtility {
    double left = 0.0;
    double right = 0.0;
    double total = 0.0;
};

struct UtilityBreakdown {
    std::vector<PlayerUtility> per_player;
    double sum() const;
};

enum class Condition {
    monotone_h,      // H' > 0 on [0,1)
    monotone_m,      // M' > 0 on [0,1)
    concave_h,       // H'' < 0
    concave_m,       // M'' < 0
    ordering,        // H >= M
    zero_at_origin,  // H(0) = M(0) = 0
};

struct ConditionViolation {
    Condition which;
    double x;
    double margin;  // signed slack of the violated inequality
    // true when the density mass the strict inequality relies on is positive
    // there; false marks zero-density points reported for information only
    bool density_positive;
};

struct AssumptionReport {
    std::vector<ConditionViolation> violations;
    // no violations at density-positive points (zero-density flags allowed)
    bool passes() const;
};

// n players on [0,1] with a common radius distribution.
//
// H(x) is the value of a hinterland of width x (integral of survival);
// M(x) is the value of an internal region of width x shared toward a
// neighbor at distance x.
class Game {
public:
    Game(int n, Distribution dist, Variant variant);

    int n() const { return n_; }
    const Distribution& dist() const { return dist_; }
    Variant variant() const { return variant_; }

    double hinterland_value(double x) const;  // H
    double internal_value(double x) const;    // M
    double h_prime(double x) const;
    double m_prime(double x) const;
    double h_second(double x) const;
    double m_second(double x) const;

    // peripheral-deviation value H(t) + M(x-t), 0 <= t <= x
    double theta(double x, double t) const;
    // internal-deviation value M(t) + M(x-t)
    double mu(double x, double t) const;
    // maximizer of theta(x, .) over [0, x]
    double rho(double x) const;

    UtilityBreakdown profile_utilities(const Profile& profile) const;
    AssumptionReport check_hm_assumptions(double grid_step = 1e-3) const;

    bool operator==(const Game& other) const {
        return n_ == other.n_ && variant_ == other.variant_ && dist_ == other.dist_;
    }

private:
    double clamp01(double x, const char* where) const;

    int n_;
    Distribution dist_;
    Variant variant_;
};

}  // namespace hotelling
