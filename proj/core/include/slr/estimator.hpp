#pragma once

#include <span>
#include <string>
#include <vector>

#include "slr/clustering.hpp"
#include "slr/composition.hpp"
#include "slr/glm.hpp"

namespace slr {

/// A fitted one-balance generalized linear model. The orientation is
/// normalized so theta1 >= 0: the numerator group I+ carries the variables
/// positively associated with the response.
struct SlrModel {
    BalancePartition partition;
    double theta0 = 0.0;
    double theta1 = 0.0;
    Family family = Family::gaussian;
    ClusterMethod method = ClusterMethod::spectral;
    std::size_t m = 0;  // screened-set size used for the fit
    std::size_t p = 0;
    std::vector<std::string> feature_names;

    // Diagnostics.
    bool constant_balance = false;   // balance constant; intercept-only fit
    bool irls_nonconverged = false;  // binomial fit stopped at max iterations
    bool degenerate_split = false;   // clustering needed the fallback split
    bool screening_flagged = false;  // constant columns or IRLS flags in step 1
};

/// Fits the response on (1, balance). Gaussian uses ordinary least squares,
/// binomial uses IRLS. Throws ConstantBalance when the balance does not vary.
/// The returned slope is signed; orientation is the caller's business.
SimpleFit fit_balance_glm(std::span<const double> balance_values,
                          std::span<const double> y, Family family);

/// The full two-step fit: screen to the top-m clr effects, cluster the
/// screened variables on their variation matrix, fit the resulting balance,
/// and orient the groups so the fitted slope is nonnegative. A constant
/// balance degenerates to an intercept-only model (theta1 = 0, flagged)
/// rather than failing, so selection loops stay total.
SlrModel fit_slr(const CompositionMatrix& X, std::span<const double> y,
                 std::size_t m, Family family, ClusterMethod method);

/// Gaussian: theta0 + theta1 * B(x). Binomial: logistic of the same.
std::vector<double> predict(const SlrModel& model, const CompositionMatrix& Xnew);

/// Expands the balance model into log-contrast coefficients:
/// theta1/|I+| on I+, -theta1/|I-| on I-, zero elsewhere. Sums to zero.
std::vector<double> to_beta(const SlrModel& model, std::size_t p);

}  // namespace slr
