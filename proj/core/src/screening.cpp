#include "slr/screening.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slr/errors.hpp"

namespace slr {

bool UnivariateEffects::any_flagged() const {
    return std::find(constant_column.begin(), constant_column.end(), true) !=
               constant_column.end() ||
           std::find(nonconverged.begin(), nonconverged.end(), true) !=
               nonconverged.end();
}

UnivariateEffects univariate_effects(const CompositionMatrix& X,
                                     std::span<const double> y, Family family) {
    const std::size_t n = X.n(), p = X.p();
    if (y.size() != n) {
        throw LengthMismatch("response length " + std::to_string(y.size()) +
                             " does not match n = " + std::to_string(n));
    }
    if (n < 3) throw BadArgument("univariate effects need n >= 3");
    if (family == Family::binomial) {
        bool seen0 = false, seen1 = false;
        for (double v : y) {
            if (v == 0.0) seen0 = true;
            else if (v == 1.0) seen1 = true;
            else throw BadArgument("binomial response must be 0 or 1");
        }
        if (!seen0 || !seen1) {
            throw OneClassOnly("binomial screening needs both classes");
        }
    }

    const std::vector<double> z = clr_matrix(X);

    UnivariateEffects out;
    out.family = family;
    out.psi.assign(p, 0.0);
    out.constant_column.assign(p, false);
    out.nonconverged.assign(p, false);

    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(n);

    std::vector<double> column(n);
    for (std::size_t j = 0; j < p; ++j) {
        double zbar = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            column[i] = z[i * p + j];
            zbar += column[i];
        }
        zbar /= static_cast<double>(n);

        double szz = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double d = column[i] - zbar;
            szz += d * d;
        }
        if (szz == 0.0) {
            out.constant_column[j] = true;
            continue;
        }

        if (family == Family::gaussian) {
            double szy = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                szy += (y[i] - ybar) * (column[i] - zbar);
            }
            out.psi[j] = szy / szz;
        } else {
            const SimpleFit fit = simple_logistic(column, y);
            out.psi[j] = fit.slope;
            out.nonconverged[j] = !fit.converged;
        }
    }
    return out;
}

std::vector<std::size_t> top_m_indices(const UnivariateEffects& effects,
                                       std::size_t m) {
    const std::size_t p = effects.psi.size();
    if (m < 2) throw MTooSmall("screening size m must be at least 2");
    if (m > p) {
        throw BadArgument("screening size m = " + std::to_string(m) +
                          " exceeds p = " + std::to_string(p));
    }
    std::vector<std::size_t> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(effects.psi[a]) > std::abs(effects.psi[b]);
    });
    order.resize(m);
    std::sort(order.begin(), order.end());
    return order;
}

}  // namespace slr
