#pragma once

#include <functional>
#include <span>
#include <vector>

#include "knlq/errors.hpp"

namespace knlq {

// Standard normal CDF and its inverse (Acklam's rational approximation
// polished with one Halley step; accurate to ~1e-15).
double normal_cdf(double x);
double inverse_normal_cdf(double p);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
// Throws IntegrationFailure when the recursion depth limit is hit before the
// tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol, int max_depth = 40);

// Fixed-order pairwise summation; the result depends only on the element
// order, never on thread scheduling.
double pairwise_sum(std::span<const double> v);

struct MeanAndStdError {
    double mean = 0.0;
    double std_error = 0.0;  // sd / sqrt(n); 0 when n < 2
};
MeanAndStdError mean_and_std_error(std::span<const double> v);

// Empirical quantile with linear interpolation between order statistics
// (type 7). `sorted` must be ascending, level in [0, 1].
double quantile_type7(std::span<const double> sorted, double level);

// Two-sample Kolmogorov-Smirnov statistic and asymptotic p-value.
struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b);

}  // namespace knlq
