#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "slr/estimator.hpp"

namespace slr {

/// Cross-validation error curve over the candidate screened sizes.
/// Gaussian error is held-out MSE; binomial is 1 - AUC.
struct CvPath {
    std::vector<std::size_t> grid;  // ascending candidate m values
    std::vector<double> mean_error;
    std::vector<double> se;  // sd of fold errors / sqrt(folds used)
    int folds = 0;

    /// Per-(m, fold) record, row-major by grid index then fold.
    struct Cell {
        double error = 0.0;
        bool failed = false;   // fit failure; worst-case error recorded
        bool skipped = false;  // single-class held-out fold, no AUC
    };
    std::vector<Cell> cells;

    const Cell& cell(std::size_t grid_index, int fold) const {
        return cells[grid_index * static_cast<std::size_t>(folds) +
                     static_cast<std::size_t>(fold)];
    }
};

/// Fold labels in 0..K-1 for every sample. For the binomial family the
/// split is stratified by class; fold sizes differ by at most one overall
/// and within each stratum. Deterministic for a given seed.
std::vector<int> stratified_kfold(std::span<const double> y, int folds,
                                  Family family, std::uint64_t seed);

/// Runs the full screen/cluster/fit pipeline on the training folds for
/// every (m, fold) cell and scores the held-out fold. Cells are
/// independent; results are identical for any thread count.
CvPath cv_path(const CompositionMatrix& X, std::span<const double> y,
               const std::vector<std::size_t>& grid, int folds, Family family,
               ClusterMethod method, std::uint64_t seed, unsigned threads = 0);

/// One-standard-error rule: the smallest m whose mean error is within one
/// standard error of the minimum (ties at the minimum go to the smaller m).
std::size_t select_one_se(const CvPath& path);

/// Even sizes 2..min(p, 30), plus p itself when p <= 30.
std::vector<std::size_t> default_grid(std::size_t p);

/// Convenience bundle: CV over the grid, 1SE selection, final fit on the
/// full data at the selected size.
struct SlrCvFit {
    SlrModel model;
    CvPath path;
    std::size_t m_selected = 0;
};

SlrCvFit fit_slr_cv(const CompositionMatrix& X, std::span<const double> y,
                    const std::vector<std::size_t>& grid, int folds,
                    Family family, ClusterMethod method, std::uint64_t seed,
                    unsigned threads = 0);

}  // namespace slr
