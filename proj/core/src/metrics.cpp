#include "slr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slr/errors.hpp"

namespace slr {

double mse(std::span<const double> y, std::span<const double> yhat) {
    if (y.size() != yhat.size()) throw LengthMismatch("mse lengths differ");
    if (y.empty()) throw BadArgument("mse needs at least one value");
    double ss = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - yhat[i];
        ss += d * d;
    }
    return ss / static_cast<double>(y.size());
}

double auc(std::span<const double> scores, std::span<const double> labels) {
    if (scores.size() != labels.size()) {
        throw LengthMismatch("auc lengths differ");
    }
    const std::size_t n = scores.size();
    std::size_t n_pos = 0, n_neg = 0;
    for (double l : labels) {
        if (l == 1.0) ++n_pos;
        else if (l == 0.0) ++n_neg;
        else throw BadArgument("auc labels must be 0 or 1");
    }
    if (n_pos == 0 || n_neg == 0) {
        throw OneClassOnly("auc needs both classes present");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] < scores[b];
    });

    // Midranks over tied score runs; AUC from the positive-class rank sum.
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double midrank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            if (labels[order[k]] == 1.0) rank_sum_pos += midrank;
        }
        i = j + 1;
    }
    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    return (rank_sum_pos - np * (np + 1.0) / 2.0) / (np * nn);
}

SelectionReport selection_metrics(std::span<const double> beta_hat,
                                  std::span<const double> beta_true,
                                  double tolerance) {
    if (beta_hat.size() != beta_true.size()) {
        throw LengthMismatch("selection metric lengths differ");
    }
    SelectionReport r;
    for (std::size_t j = 0; j < beta_hat.size(); ++j) {
        const bool sel = std::abs(beta_hat[j]) > tolerance;
        const bool truth = std::abs(beta_true[j]) > tolerance;
        if (sel && truth) ++r.tp;
        else if (sel && !truth) ++r.fp;
        else if (!sel && truth) ++r.fn;
        else ++r.tn;
    }

    if (r.fp + r.tn > 0) {
        r.fpr = static_cast<double>(r.fp) / static_cast<double>(r.fp + r.tn);
    } else {
        r.degenerate = true;
    }
    if (r.tp + r.fn > 0) {
        r.tpr = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
    } else {
        r.degenerate = true;
    }
    if (r.tp + r.fp > 0) {
        r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
    } else {
        r.degenerate = true;
    }
    if (r.precision + r.tpr > 0.0) {
        r.f1 = 2.0 * r.precision * r.tpr / (r.precision + r.tpr);
    }
    return r;
}

double l2_error(std::span<const double> beta_hat,
                std::span<const double> beta_true) {
    if (beta_hat.size() != beta_true.size()) {
        throw LengthMismatch("l2 error lengths differ");
    }
    double ss = 0.0;
    for (std::size_t j = 0; j < beta_hat.size(); ++j) {
        const double d = beta_hat[j] - beta_true[j];
        ss += d * d;
    }
    return std::sqrt(ss);
}

}  // namespace slr
