#pragma once

#include <span>
#include <vector>

namespace slr {

/// Support-recovery counts and rates for a coefficient estimate against
/// the truth. Undefined ratios (empty denominators) are reported as 0 with
/// the degenerate flag set so replication loops never abort.
struct SelectionReport {
    double fpr = 0.0;
    double tpr = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    bool degenerate = false;
};

/// Mean squared error, divisor n.
double mse(std::span<const double> y, std::span<const double> yhat);

/// Area under the ROC curve as the Mann-Whitney statistic
/// P(score+ > score-) + P(tie)/2, computed exactly via midranks.
double auc(std::span<const double> scores, std::span<const double> labels);

/// Compares nonzero supports. `tolerance` widens the zero test for
/// externally produced coefficient vectors; the default 0 matches the
/// exact zeros this library's balance expansion produces.
SelectionReport selection_metrics(std::span<const double> beta_hat,
                                  std::span<const double> beta_true,
                                  double tolerance = 0.0);

/// Euclidean norm of beta_hat - beta_true.
double l2_error(std::span<const double> beta_hat,
                std::span<const double> beta_true);

}  // namespace slr
