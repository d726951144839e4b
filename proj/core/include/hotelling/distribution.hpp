#pragma once

#include <stdexcept>
#include <string>

namespace hotelling {

enum class Family { uniform, linear, pareto, exponential };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Tolerance-radius distribution on [0, inf). All four families satisfy F(0)=0.
//
//   uniform        f = 1 on [0,1]
//   linear(r)      f = q + r t on [0,1], q = 1 - r/2, -2 <= r <= 2
//   pareto(a,xi)   f = a xi^a / t^(a+1) for t >= xi, 0 below
//   exponential(l) f = l e^(-l t)
class Distribution {
public:
    static Distribution uniform();
    static Distribution linear(double r);
    static Distribution pareto(double alpha, double xi);
    static Distribution exponential(double lambda);

    Family family() const { return family_; }

    double pdf(double t) const;
    double cdf(double t) const;
    double survival(double t) const;
    // integral of survival over [0, x], analytic antiderivative per family
    double survival_integral(double x) const;
    // same integral via adaptive quadrature; kept as a cross-check path
    double survival_integral_numeric(double x) const;

    double support_lower() const;
    double support_upper() const;  // +inf for pareto and exponential

    double r() const;       // linear slope
    double q() const;       // linear intercept, 1 - r/2
    double alpha() const;   // pareto shape
    double xi() const;      // pareto scale
    double lambda() const;  // exponential rate

    bool operator==(const Distribution& other) const;

private:
    Distribution(Family f, double p0, double p1) : family_(f), p0_(p0), p1_(p1) {}

    void require(Family f, const char* accessor) const;

    Family family_;
    double p0_;  // linear r, pareto alpha, exponential lambda
    double p1_;  // linear q, pareto xi
};

}  // namespace hotelling
