#pragma once

#include <span>

namespace slr {

enum class Family { gaussian, binomial };

/// Intercept-and-slope fit of y on a single predictor.
struct SimpleFit {
    double intercept = 0.0;
    double slope = 0.0;
    bool converged = true;  // always true for least squares
    int iterations = 0;
};

/// Ordinary least squares of y on (1, x). The caller must ensure x is not
/// constant; a zero predictor variance yields slope 0 with converged=false.
SimpleFit simple_ols(std::span<const double> x, std::span<const double> y);

/// Logistic regression of y in {0,1} on (1, x) by iteratively reweighted
/// least squares. At most `max_iter` Newton steps; convergence when the max
/// coefficient change drops below `tol`. On quasi-separation the last
/// iterate is returned with converged=false.
SimpleFit simple_logistic(std::span<const double> x, std::span<const double> y,
                          int max_iter = 25, double tol = 1e-8);

/// Residual sum of squares of the fitted line.
double ols_rss(const SimpleFit& fit, std::span<const double> x,
               std::span<const double> y);

/// Binomial deviance -2 log L of the fitted logistic curve.
double logistic_deviance(const SimpleFit& fit, std::span<const double> x,
                         std::span<const double> y);

double logistic(double eta);

}  // namespace slr
