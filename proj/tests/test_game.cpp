#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "hotelling/game.hpp"
#include "hotelling/numeric.hpp"

using namespace hotelling;

namespace {

std::vector<Game> representative_games() {
    std::vector<Game> games;
    for (auto v : {Variant::symmetric, Variant::asymmetric}) {
        games.emplace_back(3, Distribution::uniform(), v);
        games.emplace_back(3, Distribution::linear(-2.0), v);
        games.emplace_back(3, Distribution::linear(1.0), v);
        games.emplace_back(3, Distribution::pareto(1.5, 0.01), v);
        games.emplace_back(3, Distribution::exponential(3.0), v);
    }
    return games;
}

const std::vector<double> kGrid{0.15, 0.35, 0.6, 0.85};

}  // namespace

TEST_SUITE("game") {

TEST_CASE("region values vanish at zero and are ordered") {
    for (const auto& g : representative_games()) {
        CHECK(g.hinterland_value(0.0) == 0.0);
        CHECK(g.internal_value(0.0) == doctest::Approx(0.0).scale(1.0));
        for (double x : kGrid)
            CHECK(g.hinterland_value(x) >= g.internal_value(x) - 1e-10);
    }
}

TEST_CASE("symmetric internal value is the half-width hinterland") {
    for (const auto& g : representative_games()) {
        if (g.variant() != Variant::symmetric) continue;
        for (double x : kGrid)
            CHECK(g.internal_value(x) ==
                  doctest::Approx(g.hinterland_value(0.5 * x)).epsilon(1e-12));
    }
}

TEST_CASE("derivatives match central differences") {
    const double h = 1e-4;
    for (const auto& g : representative_games()) {
        for (double x : kGrid) {
            const double hp = (g.hinterland_value(x + h) - g.hinterland_value(x - h)) / (2 * h);
            CHECK(g.h_prime(x) == doctest::Approx(hp).epsilon(1e-6).scale(1.0));
            const double mp = (g.internal_value(x + h) - g.internal_value(x - h)) / (2 * h);
            CHECK(g.m_prime(x) == doctest::Approx(mp).epsilon(2e-5).scale(1.0));
            const double h2 = (g.h_prime(x + h) - g.h_prime(x - h)) / (2 * h);
            CHECK(g.h_second(x) == doctest::Approx(h2).epsilon(1e-4).scale(1.0));
            const double m2 = (g.m_prime(x + h) - g.m_prime(x - h)) / (2 * h);
            CHECK(g.m_second(x) == doctest::Approx(m2).epsilon(1e-4).scale(1.0));
        }
    }
}

TEST_CASE("uniform asymmetric internal value has a known cubic form") {
    const Game g(3, Distribution::uniform(), Variant::asymmetric);
    CHECK(g.internal_value(0.3) == doctest::Approx(0.14775).epsilon(1e-10));
    CHECK(g.internal_value(0.5) ==
          doctest::Approx(0.23958333333333333333).epsilon(1e-10));
    CHECK(g.internal_value(0.9) == doctest::Approx(0.38925).epsilon(1e-10));
    CHECK(g.m_prime(0.5) == doctest::Approx(0.4375).epsilon(1e-9));
}

TEST_CASE("exponential asymmetric closed forms agree with direct quadrature") {
    const Game g(3, Distribution::exponential(3.0), Variant::asymmetric);
    CHECK(g.hinterland_value(0.4) ==
          doctest::Approx(0.23293526269593263445).epsilon(1e-13));
    CHECK(g.internal_value(0.4) ==
          doctest::Approx(0.17269642031349221512).epsilon(1e-13));

    const auto d = Distribution::exponential(3.0);
    for (double x : kGrid) {
        const double quad =
            d.survival_integral(0.5 * x) +
            adaptive_simpson([&](double t) { return d.survival(t) * d.cdf(x - t); },
                             0.5 * x, x);
        CHECK(g.internal_value(x) == doctest::Approx(quad).epsilon(1e-9));
    }
}

TEST_CASE("peripheral deviation value and its domain") {
    const Game g(3, Distribution::exponential(2.0), Variant::symmetric);
    CHECK(g.theta(0.5, 0.2) == doctest::Approx(g.hinterland_value(0.2) +
                                               g.internal_value(0.3)).epsilon(1e-14));
    CHECK(g.mu(0.5, 0.2) == doctest::Approx(g.internal_value(0.2) +
                                            g.internal_value(0.3)).epsilon(1e-14));
    CHECK_THROWS_AS(g.theta(0.5, 0.6), std::domain_error);
    CHECK_THROWS_AS(g.theta(0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(g.mu(0.5, 0.50001), std::domain_error);
    CHECK_NOTHROW(g.theta(0.5, 0.5 + 1e-10));
}

TEST_CASE("hinterland optimum: boundary cases and a hand-solved point") {
    const Game g(3, Distribution::uniform(), Variant::symmetric);
    CHECK(g.rho(0.0) == 0.0);
    // survival(x) > 1/2 keeps the optimum at the neighbor
    CHECK(g.rho(0.3) == 0.3);
    CHECK(g.rho(0.49) == 0.49);
    // interior root of 1 - t = (1 - (x-t)/2)/2 at x = 0.6
    CHECK(g.rho(0.6) == doctest::Approx(0.52).epsilon(1e-10));

    const Game e(3, Distribution::exponential(3.0), Variant::asymmetric);
    CHECK(e.rho(0.8) == doctest::Approx(0.37952543544365276485).epsilon(1e-10));
}

TEST_CASE("hinterland optimum stays right of one third") {
    for (const auto& g : representative_games())
        for (int k = 1; k <= 20; ++k) {
            const double x = k / 20.0;
            CHECK(g.rho(x) > x / 3.0);
            CHECK(g.rho(x) <= x + 1e-12);
        }
}

TEST_CASE("hinterland optimum is a maximizer and monotone in the width") {
    for (const auto& g : {Game(3, Distribution::exponential(4.0), Variant::asymmetric),
                          Game(3, Distribution::linear(-2.0), Variant::symmetric)}) {
        double prev_rho = 0.0, prev_val = 0.0;
        for (int k = 1; k <= 10; ++k) {
            const double x = k / 10.0;
            const double r = g.rho(x);
            const double val = g.theta(x, r);
            for (int j = 0; j <= 20; ++j)
                CHECK(val >= g.theta(x, x * j / 20.0) - 1e-9);
            CHECK(r >= prev_rho - 1e-9);
            CHECK(val >= prev_val - 1e-9);
            prev_rho = r;
            prev_val = val;
        }
    }
}

TEST_CASE("internal deviation value peaks at the midpoint") {
    for (const auto& g : representative_games())
        for (double x : {0.3, 0.7}) {
            const double mid = g.mu(x, 0.5 * x);
            for (int j = 0; j <= 20; ++j)
                CHECK(mid >= g.mu(x, x * j / 20.0) - 1e-9);
        }
}

TEST_CASE("profile utilities: three uniform players") {
    const Game g(3, Distribution::uniform(), Variant::symmetric);
    const auto u = g.profile_utilities(Profile({0.2, 0.5, 0.6}));
    REQUIRE(u.per_player.size() == 3);
    CHECK(u.per_player[0].total == doctest::Approx(0.31875).epsilon(1e-12));
    CHECK(u.per_player[1].total == doctest::Approx(0.1875).epsilon(1e-12));
    CHECK(u.per_player[2].total == doctest::Approx(0.36875).epsilon(1e-12));
    CHECK(u.per_player[0].left == doctest::Approx(0.18).epsilon(1e-12));
    CHECK(u.sum() == doctest::Approx(0.875).epsilon(1e-12));
}

TEST_CASE("colocated players split the location value") {
    const Game g(2, Distribution::uniform(), Variant::symmetric);
    const auto solo = g.profile_utilities(Profile({0.5}));
    const auto pair = g.profile_utilities(Profile({0.5, 0.5}));
    CHECK(solo.per_player[0].total == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(pair.per_player[0].total == doctest::Approx(0.375).epsilon(1e-12));
    CHECK(pair.per_player[1].total == pair.per_player[0].total);
}

TEST_CASE("profile utilities never exceed the unit client mass") {
    std::mt19937 gen(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& g : representative_games())
        for (int rep = 0; rep < 3; ++rep) {
            std::vector<double> locs(1 + gen() % 6);
            for (auto& v : locs) v = unit(gen);
            const auto u = g.profile_utilities(Profile(locs));
            CHECK(u.sum() <= 1.0 + 1e-8);
            for (const auto& p : u.per_player) CHECK(p.total >= 0.0);
        }
}

TEST_CASE("shape assumptions hold where the density is positive") {
    for (const auto& g : representative_games()) {
        const auto report = g.check_hm_assumptions();
        CHECK(report.passes());
        if (g.dist().family() == Family::pareto) {
            // zero density below the scale is reported but not a failure
            CHECK_FALSE(report.violations.empty());
            for (const auto& v : report.violations) CHECK_FALSE(v.density_positive);
        } else {
            CHECK(report.violations.empty());
        }
    }
    CHECK_THROWS_AS(representative_games()[0].check_hm_assumptions(0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(representative_games()[0].check_hm_assumptions(0.2),
                    std::invalid_argument);
}

TEST_CASE("construction and argument guards") {
    CHECK_THROWS_AS(Game(1, Distribution::uniform(), Variant::symmetric),
                    std::invalid_argument);
    CHECK_THROWS_AS(Profile({}), std::invalid_argument);
    CHECK_THROWS_AS(Profile({-0.1, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(Profile({0.5, 1.2}), std::invalid_argument);

    const Game g(3, Distribution::uniform(), Variant::symmetric);
    CHECK(g.hinterland_value(1.0 + 5e-10) == doctest::Approx(0.5));
    CHECK(g.hinterland_value(-5e-10) == 0.0);
    CHECK_THROWS_AS(g.hinterland_value(1.1), std::domain_error);
    CHECK_THROWS_AS(g.internal_value(-0.2), std::domain_error);
}

TEST_CASE("profiles sort their locations and group duplicates") {
    const Profile p({0.6, 0.2, 0.6, 0.1});
    CHECK(p.locations() == std::vector<double>{0.1, 0.2, 0.6, 0.6});
    CHECK(p.group_locations() == std::vector<double>{0.1, 0.2, 0.6});
    CHECK(p.group_sizes() == std::vector<std::size_t>{1, 1, 2});
    CHECK(p.group_of()[3] == 2);
}

}
