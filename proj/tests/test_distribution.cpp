#include <cmath>
#include <vector>

#include <doctest.h>

#include "hotelling/distribution.hpp"

using namespace hotelling;

namespace {

const std::vector<Distribution> kAll{
    Distribution::uniform(),        Distribution::linear(-2.0),
    Distribution::linear(1.0),      Distribution::pareto(1.5, 0.01),
    Distribution::pareto(1.0, 0.1), Distribution::exponential(3.0),
};

}  // namespace

TEST_SUITE("distribution") {

TEST_CASE("uniform family") {
    const auto d = Distribution::uniform();
    CHECK(d.pdf(0.3) == 1.0);
    CHECK(d.pdf(1.5) == 0.0);
    CHECK(d.cdf(0.3) == doctest::Approx(0.3));
    CHECK(d.cdf(2.0) == 1.0);
    CHECK(d.survival(0.3) == doctest::Approx(0.7));
    CHECK(d.survival_integral(0.5) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(d.survival_integral(1.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.survival_integral(2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.support_upper() == 1.0);
}

TEST_CASE("linear family") {
    const auto flat = Distribution::linear(0.0);
    for (double x : {0.1, 0.4, 0.9}) {
        CHECK(flat.pdf(x) == Distribution::uniform().pdf(x));
        CHECK(flat.cdf(x) == doctest::Approx(Distribution::uniform().cdf(x)));
    }

    const auto d = Distribution::linear(1.0);
    CHECK(d.q() == doctest::Approx(0.5));
    CHECK(d.pdf(0.0) == doctest::Approx(0.5));
    CHECK(d.pdf(1.0) == doctest::Approx(1.5));
    CHECK(d.cdf(1.0) == doctest::Approx(1.0));

    const auto steep = Distribution::linear(-2.0);
    CHECK(steep.pdf(0.0) == doctest::Approx(2.0));
    CHECK(steep.pdf(1.0) == 0.0);
    CHECK(steep.survival(0.5) == doctest::Approx(0.25));
}

TEST_CASE("pareto family") {
    const auto d = Distribution::pareto(1.0, 0.1);
    CHECK(d.pdf(0.05) == 0.0);
    CHECK(d.cdf(0.1) == 0.0);
    CHECK(d.survival(0.05) == 1.0);
    CHECK(d.survival(0.2) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.survival_integral(0.05) == doctest::Approx(0.05).epsilon(1e-14));
    CHECK(d.survival_integral(0.5) ==
          doctest::Approx(0.26094379124341003746).epsilon(1e-14));
    CHECK(d.support_lower() == 0.1);
    CHECK(std::isinf(d.support_upper()));

    // the shape=1 antiderivative branch joins the generic one continuously
    const double lo = Distribution::pareto(1.0 - 1e-9, 0.1).survival_integral(0.5);
    const double hi = Distribution::pareto(1.0 + 1e-9, 0.1).survival_integral(0.5);
    CHECK(lo == doctest::Approx(d.survival_integral(0.5)).epsilon(1e-8));
    CHECK(hi == doctest::Approx(d.survival_integral(0.5)).epsilon(1e-8));
}

TEST_CASE("exponential family") {
    const auto d = Distribution::exponential(1.0);
    CHECK(d.pdf(0.0) == doctest::Approx(1.0));
    CHECK(d.survival(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(d.survival_integral(1.0) ==
          doctest::Approx(0.6321205588285576784).epsilon(1e-14));
    CHECK(Distribution::exponential(50.0).survival_integral(1.0) ==
          doctest::Approx(0.02).epsilon(1e-10));
}

TEST_CASE("analytic survival integral matches quadrature") {
    for (const auto& d : kAll)
        for (double x : {0.01, 0.1, 0.3, 0.5, 0.77, 1.0})
            CHECK(d.survival_integral(x) ==
                  doctest::Approx(d.survival_integral_numeric(x)).epsilon(1e-9));
}

TEST_CASE("survival is one minus cdf and pdf integrates the cdf") {
    for (const auto& d : kAll)
        for (double x : {0.05, 0.2, 0.6, 0.95}) {
            CHECK(d.survival(x) == doctest::Approx(1.0 - d.cdf(x)).epsilon(1e-14));
            const double h = 1e-6;
            const double fd = (d.cdf(x + h) - d.cdf(x - h)) / (2.0 * h);
            if (std::abs(x - d.support_lower()) > h)
                CHECK(d.pdf(x) == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
        }
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(Distribution::linear(2.5), std::invalid_argument);
    CHECK_THROWS_AS(Distribution::linear(-2.0001), std::invalid_argument);
    CHECK_NOTHROW(Distribution::linear(2.0));
    CHECK_THROWS_AS(Distribution::pareto(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(Distribution::pareto(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Distribution::pareto(1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(Distribution::exponential(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Distribution::exponential(-1.0), std::invalid_argument);
}

TEST_CASE("accessors are family-checked") {
    const auto d = Distribution::uniform();
    CHECK_THROWS_AS(d.lambda(), std::logic_error);
    CHECK_THROWS_AS(d.alpha(), std::logic_error);
    CHECK_THROWS_AS(Distribution::exponential(2.0).r(), std::logic_error);
    CHECK(Distribution::pareto(2.0, 0.05).alpha() == 2.0);
    CHECK(Distribution::pareto(2.0, 0.05).xi() == 0.05);
}

TEST_CASE("family names round-trip") {
    for (auto f : {Family::uniform, Family::linear, Family::pareto, Family::exponential})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("cauchy"), std::invalid_argument);
}

TEST_CASE("equality compares family and parameters") {
    CHECK(Distribution::exponential(2.0) == Distribution::exponential(2.0));
    CHECK_FALSE(Distribution::exponential(2.0) == Distribution::exponential(3.0));
    CHECK_FALSE(Distribution::uniform() == Distribution::linear(0.0));
}

}
