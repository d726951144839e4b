#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hotelling/game.hpp"

namespace hotelling {

// Requested closed form is not defined for the given family/variant.
class NotAvailableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Spacing pair (a, b): peripheral gap a, internal gap b, with H'(a) = M'(b)
// and 2a + (n-1)b = 1. Induced profile is (a, a+b, ..., a+(n-1)b).
struct CanonicalPair {
    double a = 0.0;
    double b = 0.0;

    Profile induced_profile(int n) const;
};

enum class EquilibriumReason {
    no_canonical_pair,
    peripheral_deviates,
    internal_deviates,
    is_equilibrium,
    two_player_center,
};

std::string reason_name(EquilibriumReason r);
EquilibriumReason reason_from_name(const std::string& name);

struct EquilibriumReport {
    bool exists = false;
    EquilibriumReason reason = EquilibriumReason::no_canonical_pair;
    std::optional<CanonicalPair> pair;
    // slack of H(a)+M(b) >= 2M(b/2) and of 2M(b) >= theta_a(rho(a));
    // evaluated for n >= 3 with a non-degenerate pair, null otherwise
    std::optional<double> peripheral_margin;
    std::optional<double> internal_margin;
    std::optional<double> rho_a;
    std::vector<std::string> warnings;
};

// Root of H'(x) = M'((1-2x)/(n-1)) on [0, 1/2]; none when H'(1/2) > M'(0).
std::optional<CanonicalPair> canonical_pair(const Game& game);

// n=2: always an equilibrium (canonical profile or both players at 1/2).
// n>=3: canonical profile checked against the peripheral and internal
// deviation inequalities with tolerance 1e-9; b <= 1e-9 counts as no pair.
EquilibriumReport decide_equilibrium(const Game& game);

// Closed-form pairs: uniform (both variants), linear r=-2 symmetric,
// pareto symmetric, exponential (both variants). Other combinations throw
// NotAvailableError; supported combinations without a pair return nullopt.
std::optional<CanonicalPair> closed_form_canonical(const Game& game);

struct AlphaBeta {
    double alpha0 = 0.0;
    double beta0 = 0.0;
};

// Unique crossing of the two indifference curves of the asymmetric
// exponential boundary system; cached after the first call.
AlphaBeta exp_asym_alpha0();

// beta solving e^(-2b)(1+b) = e^(-a)(1+a), bracketed on [0, a/2]
double exp_asym_beta1(double alpha);
// beta solving e^(-b)(3/4+b/2) = e^(-a)(1+a/2); none when the right side
// exceeds 3/4 (the left side's maximum)
std::optional<double> exp_asym_beta2(double alpha);

// Smallest rate with an equilibrium, asymmetric exponential, n >= 3.
double exp_asym_threshold(int n);

// Rate bound ln4 - n ln(4 tau1^6) with tau1 = (2^(1/6)+sqrt(64+2^(1/3)))/(8*2^(5/6)),
// symmetric exponential, n >= 3.
double exp_sym_threshold(int n);

// Shape threshold for the symmetric pareto family: interior root of
// 2^(1/z) (2+2^(1/z))^z = 8 on (0, 1). z=1 also satisfies the equation but
// is a removable boundary, not a verdict change; the solver brackets it out.
double pareto_threshold();

// One-sided test that a symmetric-variant equilibrium survives switching the
// game to independent draws: checks min over the grid of d/dx of the overlap
// term against -1e-8. A false result is inconclusive.
bool sym_to_asym_sufficient(const Game& sym_game, double grid_step = 1e-3);

// Finite-difference derivative (h = 1e-5) of the overlap integral
// int_{x/2}^{min(x,b)} survival(t) cdf(b-t) dt at x, with b fixed.
double sym_to_asym_delta_prime(const Game& sym_game, double b, double x);

}  // namespace hotelling
