#pragma once

#include <vector>

#include "slr/composition.hpp"

namespace slr {

enum class ClusterMethod { hierarchical, spectral };

/// A 2-partition of the screened variables. Groups hold local indices
/// 0..m-1 into the variation matrix (use its index_map for the original
/// variable identities). Both groups are nonempty and sorted.
struct TwoClusterResult {
    std::vector<std::size_t> group_a;
    std::vector<std::size_t> group_b;
    ClusterMethod method = ClusterMethod::spectral;
    bool degenerate = false;  // one-sign Fiedler vector, resolved by fallback

    // Spectral diagnostics (empty for hierarchical or the m == 2 shortcut).
    std::vector<double> fiedler;
    double lambda2 = 0.0;
};

/// Splits the variables behind a variation matrix into two groups.
///
/// Hierarchical: agglomerative complete linkage, dendrogram cut at two
/// clusters, distance ties broken toward the smallest member indices.
/// Spectral: similarity S = max(A) - A off the diagonal, unnormalized
/// Laplacian L = D - S, groups split by the sign of the Fiedler vector
/// (second-smallest eigenvector, first nonzero component made positive).
/// Both methods are deterministic; m == 2 returns the only possible split.
TwoClusterResult cluster_two(const VariationMatrix& A, ClusterMethod method);

}  // namespace slr
