#pragma once

#include <cstddef>
#include <vector>

namespace slr {

/// Full eigendecomposition of a dense symmetric matrix.
/// Eigenvalues are ascending; ties keep the order in which the Jacobi
/// iteration left them (stable by diagonal position), which makes repeated
/// runs bit-identical. Column j of `vectors` (stored row-major, m x m)
/// is the unit eigenvector for eigenvalue j, sign-fixed so its first
/// nonzero component is positive.
struct EigenDecomposition {
    std::vector<double> values;
    std::vector<double> vectors;  // row-major m x m, eigenvectors in columns
    std::size_t dim = 0;

    double vector_at(std::size_t row, std::size_t col) const noexcept {
        return vectors[row * dim + col];
    }
};

/// Cyclic Jacobi rotations on a symmetric matrix (row-major m x m).
/// Sweeps until the off-diagonal Frobenius norm falls below
/// 1e-12 * max(1, ||A||_F); deterministic for a given input.
EigenDecomposition jacobi_eigen(const std::vector<double>& matrix,
                                std::size_t m);

}  // namespace slr
