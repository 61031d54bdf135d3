#include "slr/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "slr/errors.hpp"
#include "slr/screening.hpp"

namespace slr {

namespace {

bool is_constant(std::span<const double> v) {
    for (double x : v) {
        if (x != v.front()) return false;
    }
    return true;
}

double intercept_only(std::span<const double> y, Family family) {
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(y.size());
    if (family == Family::gaussian) return ybar;
    const double clamped = std::clamp(ybar, 1e-12, 1.0 - 1e-12);
    return std::log(clamped / (1.0 - clamped));
}

}  // namespace

SimpleFit fit_balance_glm(std::span<const double> balance_values,
                          std::span<const double> y, Family family) {
    if (balance_values.size() != y.size()) {
        throw LengthMismatch("balance and response lengths differ");
    }
    if (y.size() < 3) throw BadArgument("balance fit needs n >= 3");
    if (is_constant(balance_values)) {
        throw ConstantBalance("balance is constant across samples");
    }
    return family == Family::gaussian ? simple_ols(balance_values, y)
                                      : simple_logistic(balance_values, y);
}

SlrModel fit_slr(const CompositionMatrix& X, std::span<const double> y,
                 std::size_t m, Family family, ClusterMethod method) {
    const UnivariateEffects effects = univariate_effects(X, y, family);
    const std::vector<std::size_t> screened = top_m_indices(effects, m);

    const VariationMatrix A = variation_matrix(X, screened);
    const TwoClusterResult clusters = cluster_two(A, method);

    auto to_original = [&](const std::vector<std::size_t>& local) {
        std::vector<std::size_t> out;
        out.reserve(local.size());
        for (std::size_t i : local) out.push_back(A.index_map()[i]);
        return out;
    };

    SlrModel model;
    model.family = family;
    model.method = method;
    model.m = m;
    model.p = X.p();
    model.feature_names = X.feature_names();
    model.degenerate_split = clusters.degenerate;
    model.screening_flagged = effects.any_flagged();

    BalancePartition part(to_original(clusters.group_a),
                          to_original(clusters.group_b));
    const std::vector<double> b = balances(X, part);

    if (is_constant(std::span<const double>(b))) {
        model.constant_balance = true;
        model.partition = std::move(part);
        model.theta0 = intercept_only(y, family);
        model.theta1 = 0.0;
        return model;
    }

    const SimpleFit fit = fit_balance_glm(b, y, family);
    model.irls_nonconverged = !fit.converged && family == Family::binomial;
    if (fit.slope < 0.0) {
        model.partition = BalancePartition(part.minus, part.plus);
        model.theta1 = -fit.slope;
        // Negating the balance negates its coefficient; the intercept
        // is unchanged.
        model.theta0 = fit.intercept;
    } else {
        model.partition = std::move(part);
        model.theta1 = fit.slope;
        model.theta0 = fit.intercept;
    }
    return model;
}

std::vector<double> predict(const SlrModel& model,
                            const CompositionMatrix& Xnew) {
    if (Xnew.p() != model.p) {
        throw DimensionMismatch("prediction data has p = " +
                                std::to_string(Xnew.p()) + ", model expects " +
                                std::to_string(model.p));
    }
    if (!model.feature_names.empty() &&
        Xnew.feature_names() != model.feature_names) {
        throw DimensionMismatch("prediction feature names or order differ "
                                "from the fitted model");
    }
    std::vector<double> out = balances(Xnew, model.partition);
    for (double& v : out) {
        const double eta = model.theta0 + model.theta1 * v;
        v = model.family == Family::gaussian ? eta : logistic(eta);
    }
    return out;
}

std::vector<double> to_beta(const SlrModel& model, std::size_t p) {
    model.partition.check_against(p);
    std::vector<double> beta(p, 0.0);
    const double plus_weight =
        model.theta1 / static_cast<double>(model.partition.plus.size());
    const double minus_weight =
        model.theta1 / static_cast<double>(model.partition.minus.size());
    for (std::size_t j : model.partition.plus) beta[j] = plus_weight;
    for (std::size_t j : model.partition.minus) beta[j] = -minus_weight;
    return beta;
}

}  // namespace slr
