#include "emn/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "emn/errors.hpp"

namespace emn {

namespace {

constexpr int kMaxIterations = 300;
constexpr double kEps = 1e-16;

// Lower regularized gamma by series: P(a,x) = x^a e^-x / Gamma(a) * sum.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double ap = a;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw NumericFailure("gamma_p series did not converge");
}

// Upper regularized gamma by continued fraction (modified Lentz).
double gamma_q_cf(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() /
                            std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) <= kEps)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw NumericFailure("gamma_q continued fraction did not converge");
}

}  // namespace

double gamma_q(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_q: a must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("gamma_q: x must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("gamma_p: a must be positive");
    if (!(x >= 0.0)) throw std::invalid_argument("gamma_p: x must be non-negative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_cf(a, x);
}

double chi_squared_sf(double x, unsigned dof) {
    if (dof == 0) throw std::invalid_argument("chi_squared_sf: dof must be >= 1");
    return gamma_q(0.5 * dof, 0.5 * x);
}

}  // namespace emn
