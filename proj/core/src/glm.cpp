#include "slr/glm.hpp"

#include <algorithm>
#include <cmath>

#include "slr/errors.hpp"

namespace slr {

namespace {

constexpr double kEtaClamp = 30.0;   // logistic(30) is 1 to double precision
constexpr double kProbFloor = 1e-12;

}  // namespace

double logistic(double eta) {
    if (eta >= 0.0) {
        return 1.0 / (1.0 + std::exp(-eta));
    }
    const double e = std::exp(eta);
    return e / (1.0 + e);
}

SimpleFit simple_ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw LengthMismatch("ols input lengths differ");
    const std::size_t n = x.size();
    if (n < 2) throw BadArgument("ols needs at least 2 observations");

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        sxx += dx * dx;
        sxy += dx * (y[i] - my);
    }

    SimpleFit fit;
    if (sxx == 0.0) {
        fit.intercept = my;
        fit.slope = 0.0;
        fit.converged = false;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

SimpleFit simple_logistic(std::span<const double> x, std::span<const double> y,
                          int max_iter, double tol) {
    if (x.size() != y.size()) {
        throw LengthMismatch("logistic input lengths differ");
    }
    const std::size_t n = x.size();
    if (n < 2) throw BadArgument("logistic fit needs at least 2 observations");

    bool seen0 = false, seen1 = false;
    for (double v : y) {
        if (v == 0.0) seen0 = true;
        else if (v == 1.0) seen1 = true;
        else throw BadArgument("binomial response must be 0 or 1");
    }
    if (!seen0 || !seen1) {
        throw OneClassOnly("logistic fit needs both classes present");
    }

    SimpleFit fit;
    fit.converged = false;
    double b0 = 0.0, b1 = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        double s00 = 0.0, s01 = 0.0, s11 = 0.0, g0 = 0.0, g1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double eta = std::clamp(b0 + b1 * x[i], -kEtaClamp, kEtaClamp);
            const double p = logistic(eta);
            const double w = p * (1.0 - p);
            s00 += w;
            s01 += w * x[i];
            s11 += w * x[i] * x[i];
            const double r = y[i] - p;
            g0 += r;
            g1 += r * x[i];
        }
        const double det = s00 * s11 - s01 * s01;
        const double scale = std::max(1.0, std::max(s00, s11));
        if (!(std::abs(det) > 1e-14 * scale * scale)) break;  // flat likelihood
        const double d0 = (s11 * g0 - s01 * g1) / det;
        const double d1 = (s00 * g1 - s01 * g0) / det;
        b0 += d0;
        b1 += d1;
        fit.iterations = it + 1;
        if (std::max(std::abs(d0), std::abs(d1)) < tol) {
            fit.converged = true;
            break;
        }
    }
    fit.intercept = b0;
    fit.slope = b1;
    return fit;
}

double ols_rss(const SimpleFit& fit, std::span<const double> x,
               std::span<const double> y) {
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        rss += r * r;
    }
    return rss;
}

double logistic_deviance(const SimpleFit& fit, std::span<const double> x,
                         std::span<const double> y) {
    double ll = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double p = logistic(fit.intercept + fit.slope * x[i]);
        p = std::clamp(p, kProbFloor, 1.0 - kProbFloor);
        ll += y[i] == 1.0 ? std::log(p) : std::log(1.0 - p);
    }
    return -2.0 * ll;
}

}  // namespace slr
