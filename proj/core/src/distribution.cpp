#include "hotelling/distribution.hpp"

#include <cmath>
#include <limits>

#include "hotelling/numeric.hpp"

namespace hotelling {

std::string family_name(Family f) {
    switch (f) {
        case Family::uniform: return "uniform";
        case Family::linear: return "linear";
        case Family::pareto: return "pareto";
        case Family::exponential: return "exponential";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(const std::string& name) {
    if (name == "uniform") return Family::uniform;
    if (name == "linear") return Family::linear;
    if (name == "pareto") return Family::pareto;
    if (name == "exponential") return Family::exponential;
    throw std::invalid_argument("unknown family: " + name);
}

Distribution Distribution::uniform() { return {Family::uniform, 0.0, 0.0}; }

Distribution Distribution::linear(double r) {
    if (!(r >= -2.0 && r <= 2.0))
        throw std::invalid_argument("linear: r must lie in [-2, 2]");
    return {Family::linear, r, 1.0 - 0.5 * r};
}

Distribution Distribution::pareto(double alpha, double xi) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("pareto: alpha must be positive");
    if (!(xi > 0.0) || !std::isfinite(xi))
        throw std::invalid_argument("pareto: xi must be positive");
    return {Family::pareto, alpha, xi};
}

Distribution Distribution::exponential(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("exponential: lambda must be positive");
    return {Family::exponential, lambda, 0.0};
}

void Distribution::require(Family f, const char* accessor) const {
    if (family_ != f)
        throw std::logic_error(std::string(accessor) + ": wrong family");
}

double Distribution::r() const { require(Family::linear, "r"); return p0_; }
double Distribution::q() const { require(Family::linear, "q"); return p1_; }
double Distribution::alpha() const { require(Family::pareto, "alpha"); return p0_; }
double Distribution::xi() const { require(Family::pareto, "xi"); return p1_; }
double Distribution::lambda() const { require(Family::exponential, "lambda"); return p0_; }

bool Distribution::operator==(const Distribution& other) const {
    return family_ == other.family_ && p0_ == other.p0_ && p1_ == other.p1_;
}

double Distribution::pdf(double t) const {
    if (t < 0.0) return 0.0;
    switch (family_) {
        case Family::uniform:
            return t <= 1.0 ? 1.0 : 0.0;
        case Family::linear:
            return t <= 1.0 ? p1_ + p0_ * t : 0.0;
        case Family::pareto:
            return t < p1_ ? 0.0 : p0_ * std::pow(p1_ / t, p0_) / t;
        case Family::exponential:
            return p0_ * std::exp(-p0_ * t);
    }
    throw std::logic_error("pdf: bad enum");
}

double Distribution::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    switch (family_) {
        case Family::uniform:
            return t >= 1.0 ? 1.0 : t;
        case Family::linear:
            return t >= 1.0 ? 1.0 : (p1_ + 0.5 * p0_ * t) * t;
        case Family::pareto:
            return t <= p1_ ? 0.0 : 1.0 - std::pow(p1_ / t, p0_);
        case Family::exponential:
            return -std::expm1(-p0_ * t);
    }
    throw std::logic_error("cdf: bad enum");
}

double Distribution::survival(double t) const {
    if (t <= 0.0) return 1.0;
    switch (family_) {
        case Family::uniform:
            return t >= 1.0 ? 0.0 : 1.0 - t;
        case Family::linear:
            return t >= 1.0 ? 0.0 : 1.0 - (p1_ + 0.5 * p0_ * t) * t;
        case Family::pareto:
            return t <= p1_ ? 1.0 : std::pow(p1_ / t, p0_);
        case Family::exponential:
            return std::exp(-p0_ * t);
    }
    throw std::logic_error("survival: bad enum");
}

double Distribution::survival_integral(double x) const {
    if (x < 0.0) throw std::domain_error("survival_integral: x must be >= 0");
    if (x == 0.0) return 0.0;
    switch (family_) {
        case Family::uniform:
            return x >= 1.0 ? 0.5 : x * (1.0 - 0.5 * x);
        case Family::linear: {
            const double r = p0_, q = p1_;
            if (x >= 1.0) return 0.5 + r / 12.0;
            return x - 0.5 * q * x * x - r * x * x * x / 6.0;
        }
        case Family::pareto: {
            const double a = p0_, xi = p1_;
            if (x <= xi) return x;
            if (a == 1.0) return xi + xi * std::log(x / xi);
            // xi - xi*((xi/x)^(a-1) - 1)/(a-1), stable near a = 1
            return xi - xi * std::expm1((a - 1.0) * std::log(xi / x)) / (a - 1.0);
        }
        case Family::exponential:
            return -std::expm1(-p0_ * x) / p0_;
    }
    throw std::logic_error("survival_integral: bad enum");
}

double Distribution::survival_integral_numeric(double x) const {
    if (x < 0.0) throw std::domain_error("survival_integral_numeric: x must be >= 0");
    if (x == 0.0) return 0.0;
    const auto f = [this](double t) { return survival(t); };
    return adaptive_simpson(f, 0.0, x, {support_lower(), support_upper()});
}

double Distribution::support_lower() const {
    return family_ == Family::pareto ? p1_ : 0.0;
}

double Distribution::support_upper() const {
    switch (family_) {
        case Family::uniform:
        case Family::linear:
            return 1.0;
        case Family::pareto:
        case Family::exponential:
            return std::numeric_limits<double>::infinity();
    }
    throw std::logic_error("support_upper: bad enum");
}

}  // namespace hotelling
