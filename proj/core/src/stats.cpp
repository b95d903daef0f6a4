#include "oddcut/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace oddcut {

namespace {

// Series expansion of P(a,x), valid for x < a+1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Continued fraction for Q(a,x), valid for x >= a+1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("regularized_gamma_q domain error");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_cf(a, x);
}

double chi_squared_p_value(double statistic, int dof) {
    if (dof < 1) throw std::invalid_argument("chi-squared needs dof >= 1");
    if (statistic < 0) throw std::invalid_argument("chi-squared statistic must be nonnegative");
    return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

double chi_squared_uniform(const std::vector<std::size_t>& observed) {
    if (observed.empty()) throw std::invalid_argument("empty observation vector");
    std::size_t total = 0;
    for (std::size_t c : observed) total += c;
    const double expected = static_cast<double>(total) / static_cast<double>(observed.size());
    if (expected <= 0) throw std::invalid_argument("no observations");
    double stat = 0;
    for (std::size_t c : observed) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

}  // namespace oddcut
