#pragma once

#include <cstddef>
#include <vector>

namespace oddcut {

// Upper regularized incomplete gamma Q(a, x).
double regularized_gamma_q(double a, double x);

// Upper-tail p-value of the chi-squared distribution.
double chi_squared_p_value(double statistic, int dof);

// Pearson statistic of observed counts against a uniform expectation.
double chi_squared_uniform(const std::vector<std::size_t>& observed);

}  // namespace oddcut
