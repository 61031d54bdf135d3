#include "slr/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "slr/errors.hpp"

namespace slr {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            s += 2.0 * a[i * m + j] * a[i * m + j];
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const std::vector<double>& matrix,
                                std::size_t m) {
    if (matrix.size() != m * m) {
        throw DimensionMismatch("jacobi_eigen expects an m x m matrix");
    }
    if (m == 0) throw BadArgument("jacobi_eigen needs m >= 1");

    std::vector<double> a = matrix;
    std::vector<double> v(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) v[i * m + i] = 1.0;

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double target = 1e-12 * std::max(1.0, frob);

    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a, m) <= target) break;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = a[p * m + q];
                if (apq == 0.0) continue;
                const double app = a[p * m + p];
                const double aqq = a[q * m + q];
                const double theta = (aqq - app) / (2.0 * apq);
                // Smaller-angle rotation root, standard Jacobi choice.
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a[k * m + p];
                    const double akq = a[k * m + q];
                    a[k * m + p] = c * akp - s * akq;
                    a[k * m + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a[p * m + k];
                    const double aqk = a[q * m + k];
                    a[p * m + k] = c * apk - s * aqk;
                    a[q * m + k] = s * apk + c * aqk;
                }
                a[p * m + q] = 0.0;
                a[q * m + p] = 0.0;

                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = v[k * m + p];
                    const double vkq = v[k * m + q];
                    v[k * m + p] = c * vkp - s * vkq;
                    v[k * m + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    // Sort ascending by eigenvalue; stable in the diagonal position so
    // degenerate spectra stay deterministic.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i * m + i] < a[j * m + j];
    });

    EigenDecomposition out;
    out.dim = m;
    out.values.resize(m);
    out.vectors.assign(m * m, 0.0);
    for (std::size_t col = 0; col < m; ++col) {
        const std::size_t src = order[col];
        out.values[col] = a[src * m + src];
        double sign = 0.0;
        for (std::size_t row = 0; row < m; ++row) {
            const double x = v[row * m + src];
            if (sign == 0.0 && x != 0.0) sign = x > 0.0 ? 1.0 : -1.0;
        }
        if (sign == 0.0) sign = 1.0;
        for (std::size_t row = 0; row < m; ++row) {
            out.vectors[row * m + col] = sign * v[row * m + src];
        }
    }
    return out;
}

}  // namespace slr
