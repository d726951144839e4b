#include "hotelling/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hotelling/numeric.hpp"

namespace hotelling {

std::string variant_name(Variant v) {
    return v == Variant::symmetric ? "symmetric" : "asymmetric";
}

Variant variant_from_name(const std::string& name) {
    if (name == "symmetric") return Variant::symmetric;
    if (name == "asymmetric") return Variant::asymmetric;
    throw std::invalid_argument("unknown variant: " + name);
}

Profile::Profile(std::vector<double> locations) : locations_(std::move(locations)) {
    if (locations_.empty()) throw std::invalid_argument("Profile: needs at least one player");
    std::sort(locations_.begin(), locations_.end());
    if (locations_.front() < 0.0 || locations_.back() > 1.0)
        throw std::invalid_argument("Profile: locations must lie in [0, 1]");
    group_of_.resize(locations_.size());
    for (std::size_t i = 0; i < locations_.size(); ++i) {
        if (i == 0 || locations_[i] != locations_[i - 1]) {
            group_locations_.push_back(locations_[i]);
            group_sizes_.push_back(0);
        }
        group_of_[i] = group_locations_.size() - 1;
        ++group_sizes_.back();
    }
}

double UtilityBreakdown::sum() const {
    double s = 0.0;
    for (const auto& u : per_player) s += u.total;
    return s;
}

bool AssumptionReport::passes() const {
    for (const auto& v : violations)
        if (v.density_positive) return false;
    return true;
}

Game::Game(int n, Distribution dist, Variant variant)
    : n_(n), dist_(std::move(dist)), variant_(variant) {
    if (n_ < 2) throw std::invalid_argument("Game: n must be at least 2");
    if (std::abs(hinterland_value(0.0)) > 1e-12 || std::abs(internal_value(0.0)) > 1e-12)
        throw std::logic_error("Game: H(0) or M(0) deviates from zero");
}

double Game::clamp01(double x, const char* where) const {
    if (x < -1e-9 || x > 1.0 + 1e-9)
        throw std::domain_error(std::string(where) + ": argument outside [0, 1]");
    return std::min(std::max(x, 0.0), 1.0);
}

double Game::hinterland_value(double x) const {
    x = clamp01(x, "hinterland_value");
    return dist_.survival_integral(x);
}

double Game::internal_value(double x) const {
    x = clamp01(x, "internal_value");
    if (variant_ == Variant::symmetric) return dist_.survival_integral(0.5 * x);
    if (dist_.family() == Family::exponential) {
        const double l = dist_.lambda();
        return (1.0 - std::exp(-l * x) * (1.0 + 0.5 * l * x)) / l;
    }
    const auto f = [&](double t) { return dist_.survival(t) * dist_.cdf(x - t); };
    const double lo = dist_.support_lower();
    return dist_.survival_integral(0.5 * x) +
           adaptive_simpson(f, 0.5 * x, x, {lo, x - lo});
}

double Game::h_prime(double x) const {
    x = clamp01(x, "h_prime");
    return dist_.survival(x);
}

double Game::m_prime(double x) const {
    x = clamp01(x, "m_prime");
    if (variant_ == Variant::symmetric) return 0.5 * dist_.survival(0.5 * x);
    if (dist_.family() == Family::exponential) {
        const double l = dist_.lambda();
        return 0.5 * std::exp(-l * x) * (1.0 + l * x);
    }
    const double edge = dist_.survival(0.5 * x);
    const auto f = [&](double t) { return dist_.survival(t) * dist_.pdf(x - t); };
    const double lo = dist_.support_lower();
    return 0.5 * edge * edge + adaptive_simpson(f, 0.5 * x, x, {lo, x - lo});
}

double Game::h_second(double x) const {
    x = clamp01(x, "h_second");
    return -dist_.pdf(x);
}

double Game::m_second(double x) const {
    x = clamp01(x, "m_second");
    if (variant_ == Variant::symmetric) return -0.25 * dist_.pdf(0.5 * x);
    if (dist_.family() == Family::exponential) {
        const double l = dist_.lambda();
        return -0.5 * l * l * x * std::exp(-l * x);
    }
    const auto f = [&](double t) { return dist_.pdf(t) * dist_.pdf(x - t); };
    const double lo = dist_.support_lower();
    return -adaptive_simpson(f, 0.5 * x, x, {lo, x - lo});
}

double Game::theta(double x, double t) const {
    x = clamp01(x, "theta");
    if (t < -1e-9 || t > x + 1e-9) throw std::domain_error("theta: t outside [0, x]");
    t = std::min(std::max(t, 0.0), x);
    return hinterland_value(t) + internal_value(x - t);
}

double Game::mu(double x, double t) const {
    x = clamp01(x, "mu");
    if (t < -1e-9 || t > x + 1e-9) throw std::domain_error("mu: t outside [0, x]");
    t = std::min(std::max(t, 0.0), x);
    return internal_value(t) + internal_value(x - t);
}

double Game::rho(double x) const {
    x = clamp01(x, "rho");
    if (x == 0.0) return 0.0;
    if (h_prime(x) > m_prime(0.0)) return x;
    const auto g = [&](double t) { return h_prime(t) - m_prime(x - t); };
    return brent_root(g, 0.0, x, 1e-12, 200);
}

UtilityBreakdown Game::profile_utilities(const Profile& profile) const {
    const auto& locs = profile.group_locations();
    const auto& sizes = profile.group_sizes();
    const std::size_t last = locs.size() - 1;

    std::vector<PlayerUtility> group_util(locs.size());
    for (std::size_t g = 0; g < locs.size(); ++g) {
        const double ul = g == 0 ? hinterland_value(locs[0])
                                 : internal_value(locs[g] - locs[g - 1]);
        const double ur = g == last ? hinterland_value(1.0 - locs[last])
                                    : internal_value(locs[g + 1] - locs[g]);
        const double inv_gamma = 1.0 / static_cast<double>(sizes[g]);
        group_util[g].left = ul * inv_gamma;
        group_util[g].right = ur * inv_gamma;
        group_util[g].total = group_util[g].left + group_util[g].right;
    }

    UtilityBreakdown out;
    out.per_player.reserve(profile.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
        out.per_player.push_back(group_util[profile.group_of()[i]]);
    return out;
}

AssumptionReport Game::check_hm_assumptions(double grid_step) const {
    if (!(grid_step > 0.0 && grid_step <= 0.1))
        throw std::invalid_argument("check_hm_assumptions: grid_step must be in (0, 0.1]");

    AssumptionReport report;
    const auto flag = [&](Condition c, double x, double margin, bool dens) {
        report.violations.push_back({c, x, margin, dens});
    };

    if (std::abs(hinterland_value(0.0)) > 1e-12)
        flag(Condition::zero_at_origin, 0.0, hinterland_value(0.0), true);
    if (std::abs(internal_value(0.0)) > 1e-12)
        flag(Condition::zero_at_origin, 0.0, internal_value(0.0), true);

    const double conv_lo = 2.0 * dist_.support_lower();
    const std::size_t steps = static_cast<std::size_t>(std::ceil(1.0 / grid_step));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double x = std::min(static_cast<double>(k) * grid_step, 1.0);

        const double diff = hinterland_value(x) - internal_value(x);
        if (diff < -1e-10) flag(Condition::ordering, x, diff, true);

        if (x < 1.0) {
            const double hp = h_prime(x);
            if (hp <= 0.0) flag(Condition::monotone_h, x, hp, dist_.survival(x) > 0.0);
            const double mp = m_prime(x);
            if (mp <= 0.0) flag(Condition::monotone_m, x, mp, dist_.survival(0.5 * x) > 0.0);
        }
        if (x > 0.0 && x < 1.0) {
            const double h2 = h_second(x);
            if (h2 >= -1e-12) flag(Condition::concave_h, x, h2, dist_.pdf(x) > 0.0);
            const double m2 = m_second(x);
            const bool dens = variant_ == Variant::symmetric
                                  ? dist_.pdf(0.5 * x) > 0.0
                                  : x > conv_lo + 1e-15;
            if (m2 >= -1e-12) flag(Condition::concave_m, x, m2, dens);
        }
    }
    return report;
}

}  // namespace hotelling
