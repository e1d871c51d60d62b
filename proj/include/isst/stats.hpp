#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace isst {

/// Result of a two-sample t-test. `degenerate` marks the zero-variance
/// special cases where the statistic is not well defined.
struct TTestResult {
    double t = 0.0;
    double df = 0.0;
    double p = 1.0;       // two-sided
    double alpha = 0.05;
    bool reject = false;  // p < alpha
    bool degenerate = false;
};

double sample_mean(std::span<const double> xs);

/// Unbiased sample variance (n-1 denominator); requires n >= 2.
double sample_variance(std::span<const double> xs);

/// CDF of Student's t distribution with `df` degrees of freedom, computed via
/// the regularized incomplete beta function (continued-fraction evaluation).
double student_t_cdf(double x, double df);

/// Upper critical value q with P(|T| <= q) = coverage, for the given df.
double student_t_two_sided_quantile(double coverage, double df);

/// Two-sample t-test; Welch (unequal variance) by default, pooled-variance
/// classic test when `pooled` is set. Both samples need at least 2 points.
TTestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                         double alpha = 0.05, bool pooled = false);

}  // namespace isst
