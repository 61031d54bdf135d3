#include "slr/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slr/errors.hpp"
#include "slr/symmetric_eigen.hpp"

namespace slr {

namespace {

TwoClusterResult hierarchical_two(const VariationMatrix& A) {
    const std::size_t m = A.dim();
    // Active clusters are identified by their smallest member; merge the
    // closest pair under complete linkage until two clusters remain.
    std::vector<std::vector<std::size_t>> clusters(m);
    for (std::size_t i = 0; i < m; ++i) clusters[i] = {i};

    auto linkage = [&](const std::vector<std::size_t>& a,
                       const std::vector<std::size_t>& b) {
        double worst = 0.0;
        for (std::size_t i : a) {
            for (std::size_t j : b) worst = std::max(worst, A.at(i, j));
        }
        return worst;
    };

    while (clusters.size() > 2) {
        std::size_t best_a = 0, best_b = 1;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < clusters.size(); ++a) {
            for (std::size_t b = a + 1; b < clusters.size(); ++b) {
                const double d = linkage(clusters[a], clusters[b]);
                if (d < best_d) {
                    best_d = d;
                    best_a = a;
                    best_b = b;
                }
                // Ties fall through: scanning order already prefers the
                // pair with the smallest leading members.
            }
        }
        auto& dst = clusters[best_a];
        dst.insert(dst.end(), clusters[best_b].begin(), clusters[best_b].end());
        std::sort(dst.begin(), dst.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(best_b));
    }

    TwoClusterResult out;
    out.method = ClusterMethod::hierarchical;
    out.group_a = std::move(clusters[0]);
    out.group_b = std::move(clusters[1]);
    if (out.group_a.front() > out.group_b.front()) {
        std::swap(out.group_a, out.group_b);
    }
    return out;
}

TwoClusterResult spectral_two(const VariationMatrix& A) {
    const std::size_t m = A.dim();
    const double a_max = A.max_entry();

    // Similarity is the parameter-free linear flip of the dissimilarity.
    std::vector<double> laplacian(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double degree = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const double s = a_max - A.at(i, j);
            laplacian[i * m + j] = -s;
            degree += s;
        }
        laplacian[i * m + i] = degree;
    }

    const EigenDecomposition eig = jacobi_eigen(laplacian, m);

    TwoClusterResult out;
    out.method = ClusterMethod::spectral;
    out.lambda2 = eig.values[1];
    out.fiedler.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.fiedler[i] = eig.vector_at(i, 1);

    for (std::size_t i = 0; i < m; ++i) {
        if (out.fiedler[i] > 0.0) out.group_a.push_back(i);
        else out.group_b.push_back(i);
    }

    if (out.group_a.empty() || out.group_b.empty()) {
        // One-sign Fiedler vector: peel the largest-magnitude component
        // into its own group.
        out.degenerate = true;
        auto& full = out.group_a.empty() ? out.group_b : out.group_a;
        auto& empty = out.group_a.empty() ? out.group_a : out.group_b;
        std::size_t peak = 0;
        for (std::size_t i = 1; i < m; ++i) {
            if (std::abs(out.fiedler[i]) > std::abs(out.fiedler[peak])) peak = i;
        }
        full.erase(std::find(full.begin(), full.end(), peak));
        empty.push_back(peak);
    }
    return out;
}

}  // namespace

TwoClusterResult cluster_two(const VariationMatrix& A, ClusterMethod method) {
    const std::size_t m = A.dim();
    if (m < 2) throw BadArgument("clustering needs at least 2 variables");
    if (m == 2) {
        TwoClusterResult out;
        out.method = method;
        out.group_a = {0};
        out.group_b = {1};
        return out;
    }
    return method == ClusterMethod::hierarchical ? hierarchical_two(A)
                                                 : spectral_two(A);
}

}  // namespace slr
