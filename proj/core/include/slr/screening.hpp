#pragma once

#include <span>
#include <vector>

#include "slr/composition.hpp"
#include "slr/glm.hpp"

namespace slr {

/// Per-variable univariate effects of the clr-transformed data on the
/// response. Constant clr columns get psi = 0 and a flag instead of an
/// error so degenerate features screen themselves out.
struct UnivariateEffects {
    std::vector<double> psi;
    Family family = Family::gaussian;
    std::vector<bool> constant_column;
    std::vector<bool> nonconverged;  // binomial IRLS only

    bool any_flagged() const;
};

/// Gaussian: psi_j = (y - ybar)' (z_j - zbar_j) / ||z_j - zbar_j||^2 on the
/// clr columns z_j (the common scale estimate cancels). Binomial: psi_j is
/// the slope of an intercept+slope logistic fit to each clr column.
UnivariateEffects univariate_effects(const CompositionMatrix& X,
                                     std::span<const double> y, Family family);

/// Indices of the m largest |psi| values, ties broken toward the smaller
/// index; returned sorted ascending. Throws MTooSmall for m < 2.
std::vector<std::size_t> top_m_indices(const UnivariateEffects& effects,
                                       std::size_t m);

}  // namespace slr
