#include "hotelling/equilibrium.hpp"

#include <cmath>

#include "hotelling/numeric.hpp"

namespace hotelling {

namespace {

constexpr double kVerdictTol = 1e-9;
constexpr double kDegenerateB = 1e-9;

}  // namespace

Profile CanonicalPair::induced_profile(int n) const {
    std::vector<double> locs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) locs[static_cast<std::size_t>(i)] = a + i * b;
    locs.back() = 1.0 - a;  // exact right edge instead of accumulated steps
    return Profile(std::move(locs));
}

std::string reason_name(EquilibriumReason r) {
    switch (r) {
        case EquilibriumReason::no_canonical_pair: return "no_canonical_pair";
        case EquilibriumReason::peripheral_deviates: return "peripheral_deviates";
        case EquilibriumReason::internal_deviates: return "internal_deviates";
        case EquilibriumReason::is_equilibrium: return "is_equilibrium";
        case EquilibriumReason::two_player_center: return "two_player_center";
    }
    throw std::logic_error("reason_name: bad enum");
}

EquilibriumReason reason_from_name(const std::string& name) {
    for (auto r : {EquilibriumReason::no_canonical_pair, EquilibriumReason::peripheral_deviates,
                   EquilibriumReason::internal_deviates, EquilibriumReason::is_equilibrium,
                   EquilibriumReason::two_player_center}) {
        if (reason_name(r) == name) return r;
    }
    throw std::invalid_argument("unknown reason: " + name);
}

std::optional<CanonicalPair> canonical_pair(const Game& game) {
    if (game.h_prime(0.5) > game.m_prime(0.0)) return std::nullopt;
    const double n1 = static_cast<double>(game.n() - 1);
    const auto g = [&](double x) { return game.h_prime(x) - game.m_prime((1.0 - 2.0 * x) / n1); };
    const double a = brent_root(g, 0.0, 0.5, 1e-12, 200);
    return CanonicalPair{a, (1.0 - 2.0 * a) / n1};
}

EquilibriumReport decide_equilibrium(const Game& game) {
    EquilibriumReport report;
    report.pair = canonical_pair(game);

    if (game.n() == 2) {
        report.exists = true;
        report.reason = report.pair ? EquilibriumReason::is_equilibrium
                                    : EquilibriumReason::two_player_center;
        return report;
    }

    if (!report.pair || report.pair->b <= kDegenerateB) {
        report.exists = false;
        report.reason = EquilibriumReason::no_canonical_pair;
        return report;
    }

    const double a = report.pair->a;
    const double b = report.pair->b;

    if (game.dist().family() == Family::pareto && b < 2.0 * game.dist().xi())
        report.warnings.push_back("internal gap narrower than twice the pareto scale; "
                                  "closed-form reductions do not apply");

    report.peripheral_margin = game.hinterland_value(a) + game.internal_value(b) -
                               2.0 * game.internal_value(0.5 * b);
    const double r = game.rho(a);
    report.rho_a = r;
    report.internal_margin = 2.0 * game.internal_value(b) - game.theta(a, r);

    if (*report.peripheral_margin < -kVerdictTol) {
        report.exists = false;
        report.reason = EquilibriumReason::peripheral_deviates;
    } else if (*report.internal_margin < -kVerdictTol) {
        report.exists = false;
        report.reason = EquilibriumReason::internal_deviates;
    } else {
        report.exists = true;
        report.reason = EquilibriumReason::is_equilibrium;
    }
    return report;
}

std::optional<CanonicalPair> closed_form_canonical(const Game& game) {
    const int n = game.n();
    const double n1 = static_cast<double>(n - 1);
    const Distribution& d = game.dist();

    switch (d.family()) {
        case Family::uniform:
            return CanonicalPair{0.5, 0.0};

        case Family::linear: {
            if (game.variant() != Variant::symmetric)
                throw NotAvailableError("closed_form_canonical: linear asymmetric unsupported");
            if (std::abs(d.r() + 2.0) < 1e-12) {
                const double s2 = std::sqrt(2.0);
                const double a = (2.0 * (s2 - 1.0) * n - 2.0 * s2 + 3.0) / (2.0 * s2 * n1 + 2.0);
                const double b = (s2 - 1.0) / (n1 + 1.0 / s2);
                return CanonicalPair{a, b};
            }
            if (std::abs(d.r() - 2.0) < 1e-12) return std::nullopt;  // survival(1/2) = 3/4 > 1/2
            throw NotAvailableError("closed_form_canonical: linear supported only for r = -2, 2");
        }

        case Family::pareto: {
            if (game.variant() != Variant::symmetric)
                throw NotAvailableError("closed_form_canonical: pareto asymmetric unsupported");
            const double k = std::pow(2.0, 1.0 / d.alpha());
            const double xi = d.xi();
            const double b = 1.0 / (n1 + k);
            // power-branch solution needs both gaps past the scale
            if (0.5 * b >= xi) return CanonicalPair{0.5 * k * b, b};
            // half-gap below the scale: survival(b/2) = 1, so a = xi 2^(1/alpha);
            // b < 2 xi here is equivalent to the power branch failing, so the
            // two branches partition the parameter space
            const double a_edge = xi * k;
            if (a_edge > 0.5) return std::nullopt;
            return CanonicalPair{a_edge, (1.0 - 2.0 * a_edge) / n1};
        }

        case Family::exponential: {
            const double l = d.lambda();
            const double ln2 = std::log(2.0);
            if (game.variant() == Variant::symmetric) {
                if (l < 2.0 * ln2) return std::nullopt;
                const double a = (0.5 + n1 * ln2 / l) / n;
                const double b = (1.0 - 2.0 * ln2 / l) / n;
                return CanonicalPair{a, b};
            }
            if (l <= 2.0 * ln2) return std::nullopt;
            // invert l = alpha (n+1) - 2 ln((1+alpha)/2), increasing in alpha
            const auto g = [&](double al) {
                return al * (n + 1.0) - 2.0 * std::log(0.5 * (1.0 + al)) - l;
            };
            const double alpha = brent_root(g, 1e-12, l, 1e-14, 200);
            const double c = std::log(0.5 * (1.0 + alpha)) / alpha;
            const double b = 1.0 / (n + 1.0 - 2.0 * c);
            return CanonicalPair{(1.0 - c) * b, b};
        }
    }
    throw std::logic_error("closed_form_canonical: bad enum");
}

double exp_asym_beta1(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("exp_asym_beta1: alpha must be positive");
    const double target = std::exp(-alpha) * (1.0 + alpha);
    const auto g = [&](double b) { return std::exp(-2.0 * b) * (1.0 + b) - target; };
    double hi = 0.5 * alpha;
    if (g(0.0) < 0.0 || g(hi) > 0.0) hi = alpha;  // widen if the half-bracket misses
    return brent_root(g, 0.0, hi, 1e-14, 200);
}

std::optional<double> exp_asym_beta2(double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("exp_asym_beta2: alpha must be positive");
    const double target = std::exp(-alpha) * (1.0 + 0.5 * alpha);
    if (target > 0.75) return std::nullopt;  // left side peaks at 3/4
    const auto g = [&](double b) { return std::exp(-b) * (0.75 + 0.5 * b) - target; };
    double hi = 1.0;
    while (g(hi) > 0.0 && hi < 1e6) hi *= 2.0;
    return brent_root(g, 0.0, hi, 1e-14, 200);
}

AlphaBeta exp_asym_alpha0() {
    static const AlphaBeta cached = [] {
        // left edge of beta2's domain: e^(-a)(1+a/2) = 3/4
        const double alpha_hat = bisect_root(
            [](double a) { return std::exp(-a) * (1.0 + 0.5 * a) - 0.75; }, 0.0, 1.0);
        const auto gap = [](double a) { return exp_asym_beta1(a) - *exp_asym_beta2(a); };
        const double alpha0 = bisect_root(gap, alpha_hat + 1e-9, 1.0);
        return AlphaBeta{alpha0, exp_asym_beta1(alpha0)};
    }();
    return cached;
}

double exp_asym_threshold(int n) {
    if (n < 3) throw std::invalid_argument("exp_asym_threshold: n must be at least 3");
    const double a0 = exp_asym_alpha0().alpha0;
    return (n + 1.0) * a0 - 2.0 * std::log(0.5 * (1.0 + a0));
}

double exp_sym_threshold(int n) {
    if (n < 3) throw std::invalid_argument("exp_sym_threshold: n must be at least 3");
    static const double tau1 =
        (std::pow(2.0, 1.0 / 6.0) + std::sqrt(64.0 + std::cbrt(2.0))) /
        (8.0 * std::pow(2.0, 5.0 / 6.0));
    return std::log(4.0) - n * std::log(4.0 * std::pow(tau1, 6.0));
}

double pareto_threshold() {
    static const double z = [] {
        const auto phi = [](double t) {
            const double k = std::pow(2.0, 1.0 / t);
            return k * std::pow(2.0 + k, t) - 8.0;
        };
        return bisect_root(phi, 0.1, 0.995);
    }();
    return z;
}

double sym_to_asym_delta_prime(const Game& sym_game, double b, double x) {
    if (sym_game.variant() != Variant::symmetric)
        throw std::invalid_argument("sym_to_asym_delta_prime: symmetric game required");
    const Distribution& d = sym_game.dist();
    const double lo = d.support_lower();
    const auto overlap = [&](double y) {
        const double hi = std::min(y, b);
        if (hi <= 0.5 * y) return 0.0;
        const auto f = [&](double t) { return d.survival(t) * d.cdf(b - t); };
        return adaptive_simpson(f, 0.5 * y, hi, {lo, b - lo});
    };
    const double h = 1e-5;
    const double lo_x = std::max(0.0, x - h);
    const double hi_x = std::min(1.0, x + h);
    return (overlap(hi_x) - overlap(lo_x)) / (hi_x - lo_x);
}

bool sym_to_asym_sufficient(const Game& sym_game, double grid_step) {
    if (sym_game.variant() != Variant::symmetric)
        throw std::invalid_argument("sym_to_asym_sufficient: symmetric game required");
    if (!(grid_step > 0.0 && grid_step <= 0.1))
        throw std::invalid_argument("sym_to_asym_sufficient: grid_step must be in (0, 0.1]");
    const EquilibriumReport report = decide_equilibrium(sym_game);
    if (!report.exists)
        throw std::invalid_argument("sym_to_asym_sufficient: game has no equilibrium");
    if (!report.pair)
        throw std::invalid_argument("sym_to_asym_sufficient: no canonical pair to transfer");
    const double b = report.pair->b;
    const std::size_t steps = static_cast<std::size_t>(std::ceil(1.0 / grid_step));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double x = std::min(static_cast<double>(k) * grid_step, 1.0);
        if (sym_to_asym_delta_prime(sym_game, b, x) < -1e-8) return false;
    }
    return true;
}

}  // namespace hotelling
