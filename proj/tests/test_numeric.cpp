#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hotelling/numeric.hpp"

using namespace hotelling;

TEST_SUITE("numeric") {

TEST_CASE("simpson integrates polynomials to machine precision") {
    CHECK(adaptive_simpson([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(adaptive_simpson([](double x) { return x * x * x - x; }, -1.0, 2.0) ==
          doctest::Approx(2.25).epsilon(1e-13));
}

TEST_CASE("simpson handles transcendental integrands") {
    CHECK(adaptive_simpson([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) ==
          doctest::Approx(2.0).epsilon(1e-11));
    CHECK(adaptive_simpson([](double x) { return std::exp(-x); }, 0.0, 30.0) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("simpson flips sign for reversed bounds") {
    const double fwd = adaptive_simpson([](double x) { return std::cos(x); }, 0.0, 1.0);
    const double rev = adaptive_simpson([](double x) { return std::cos(x); }, 1.0, 0.0);
    CHECK(fwd == doctest::Approx(-rev).epsilon(1e-14));
    CHECK(adaptive_simpson([](double x) { return x; }, 0.3, 0.3) == 0.0);
}

TEST_CASE("breakpoint splitting integrates kinked functions") {
    const auto kink = [](double x) { return std::abs(x - 0.5); };
    CHECK(adaptive_simpson(kink, 0.0, 1.0, std::vector<double>{0.5}) ==
          doctest::Approx(0.25).epsilon(1e-12));
    // breakpoints outside the interval are ignored
    CHECK(adaptive_simpson(kink, 0.0, 0.25, {0.5, 2.0}) ==
          doctest::Approx(0.25 * 0.375).epsilon(1e-12));
}

TEST_CASE("brent finds bracketed roots") {
    CHECK(brent_root([](double x) { return std::cos(x); }, 1.0, 2.0) ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(brent_root([](double x) { return x * x * x - 2.0; }, 0.0, 2.0) ==
          doctest::Approx(std::cbrt(2.0)).epsilon(1e-12));
}

TEST_CASE("brent returns an endpoint that is already a root") {
    CHECK(brent_root([](double x) { return x - 1.0; }, 1.0, 5.0) == 1.0);
    CHECK(brent_root([](double x) { return x - 5.0; }, 1.0, 5.0) == 5.0);
}

TEST_CASE("brent rejects non-bracketing intervals") {
    CHECK_THROWS_AS(brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                    NumericalError);
    try {
        brent_root([](double x) { return x * x + 1.0; }, -1.0, 1.0);
    } catch (const NumericalError& e) {
        CHECK(e.bracket_low == -1.0);
        CHECK(e.bracket_high == 1.0);
    }
}

TEST_CASE("bisection matches brent on a monotone function") {
    const auto f = [](double x) { return std::exp(x) - 3.0; };
    const double b = brent_root(f, 0.0, 2.0);
    const double c = bisect_root(f, 0.0, 2.0);
    CHECK(b == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(c == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(bisect_root(f, 2.0, 3.0), NumericalError);
}

}
