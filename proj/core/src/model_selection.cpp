#include "slr/model_selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "slr/errors.hpp"
#include "slr/metrics.hpp"
#include "slr/parallel.hpp"
#include "slr/rng.hpp"

namespace slr {

std::vector<int> stratified_kfold(std::span<const double> y, int folds,
                                  Family family, std::uint64_t seed) {
    const std::size_t n = y.size();
    if (folds < 2) throw BadArgument("cross-validation needs K >= 2");
    if (static_cast<std::size_t>(folds) > n) {
        throw KTooLarge("K = " + std::to_string(folds) + " exceeds n = " +
                        std::to_string(n));
    }

    std::vector<std::vector<std::size_t>> strata;
    if (family == Family::binomial) {
        std::vector<std::size_t> zeros, ones;
        for (std::size_t i = 0; i < n; ++i) {
            if (y[i] == 0.0) zeros.push_back(i);
            else if (y[i] == 1.0) ones.push_back(i);
            else throw BadArgument("binomial response must be 0 or 1");
        }
        if (zeros.empty() || ones.empty()) {
            throw OneClassOnly("stratified folds need both classes");
        }
        strata = {std::move(zeros), std::move(ones)};
    } else {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        strata = {std::move(all)};
    }

    // Deal shuffled strata round-robin, carrying the fold cursor across
    // strata so overall fold sizes also differ by at most one.
    Rng rng(seed, /*stream=*/0x666f6c64);  // "fold"
    std::vector<int> assignment(n, 0);
    int cursor = 0;
    for (auto& stratum : strata) {
        rng.shuffle(stratum);
        for (std::size_t i : stratum) {
            assignment[i] = cursor;
            cursor = (cursor + 1) % folds;
        }
    }
    return assignment;
}

CvPath cv_path(const CompositionMatrix& X, std::span<const double> y,
               const std::vector<std::size_t>& grid, int folds, Family family,
               ClusterMethod method, std::uint64_t seed, unsigned threads) {
    const std::size_t n = X.n();
    if (y.size() != n) throw LengthMismatch("response length mismatch");
    if (grid.empty()) throw BadArgument("cv grid must be nonempty");
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
        throw BadArgument("cv grid must be strictly ascending");
    }
    if (grid.front() < 2 || grid.back() > X.p()) {
        throw BadArgument("cv grid values must satisfy 2 <= m <= p");
    }

    const std::vector<int> fold_of = stratified_kfold(y, folds, family, seed);
    const std::size_t cells = grid.size() * static_cast<std::size_t>(folds);

    CvPath path;
    path.grid = grid;
    path.folds = folds;
    path.cells.assign(cells, {});

    parallel_for(cells, threads, [&](std::size_t cell) {
        const std::size_t gi = cell / static_cast<std::size_t>(folds);
        const int fold = static_cast<int>(cell % static_cast<std::size_t>(folds));
        CvPath::Cell& out = path.cells[cell];

        std::vector<Composition> train_rows;
        std::vector<double> train_y;
        std::vector<std::size_t> test_idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (fold_of[i] == fold) {
                test_idx.push_back(i);
            } else {
                train_rows.emplace_back(
                    std::vector<double>(X.row(i).begin(), X.row(i).end()));
                train_y.push_back(y[i]);
            }
        }

        try {
            const CompositionMatrix train(std::move(train_rows),
                                          X.feature_names());
            const SlrModel model =
                fit_slr(train, train_y, grid[gi], family, method);

            std::vector<double> yhat(test_idx.size());
            std::vector<double> ytest(test_idx.size());
            for (std::size_t k = 0; k < test_idx.size(); ++k) {
                const Composition row(std::vector<double>(
                    X.row(test_idx[k]).begin(), X.row(test_idx[k]).end()));
                const double b = balance(row, model.partition);
                const double eta = model.theta0 + model.theta1 * b;
                yhat[k] = family == Family::gaussian ? eta : logistic(eta);
                ytest[k] = y[test_idx[k]];
            }

            if (family == Family::gaussian) {
                out.error = mse(ytest, yhat);
            } else {
                const bool has0 = std::find(ytest.begin(), ytest.end(), 0.0) !=
                                  ytest.end();
                const bool has1 = std::find(ytest.begin(), ytest.end(), 1.0) !=
                                  ytest.end();
                if (!has0 || !has1) {
                    out.skipped = true;  // AUC undefined on one class
                } else {
                    out.error = 1.0 - auc(yhat, ytest);
                }
            }
        } catch (const Error&) {
            out.failed = true;
            out.error = family == Family::gaussian
                            ? std::numeric_limits<double>::infinity()
                            : 1.0;
        }
    });

    path.mean_error.assign(grid.size(), 0.0);
    path.se.assign(grid.size(), 0.0);
    for (std::size_t gi = 0; gi < grid.size(); ++gi) {
        std::vector<double> errors;
        for (int f = 0; f < folds; ++f) {
            const CvPath::Cell& c = path.cell(gi, f);
            if (!c.skipped) errors.push_back(c.error);
        }
        if (errors.empty()) {
            path.mean_error[gi] = std::numeric_limits<double>::quiet_NaN();
            path.se[gi] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        double mean = 0.0;
        for (double e : errors) mean += e;
        mean /= static_cast<double>(errors.size());
        double ss = 0.0;
        for (double e : errors) ss += (e - mean) * (e - mean);
        const double sd = errors.size() > 1
                              ? std::sqrt(ss / static_cast<double>(errors.size() - 1))
                              : 0.0;
        path.mean_error[gi] = mean;
        path.se[gi] = sd / std::sqrt(static_cast<double>(errors.size()));
    }
    return path;
}

std::size_t select_one_se(const CvPath& path) {
    if (path.grid.empty()) throw BadArgument("empty cv path");

    std::size_t best = path.grid.size();
    for (std::size_t gi = 0; gi < path.grid.size(); ++gi) {
        const double e = path.mean_error[gi];
        if (std::isnan(e)) continue;
        if (best == path.grid.size() || e < path.mean_error[best]) best = gi;
    }
    if (best == path.grid.size()) {
        throw BadArgument("cv path has no usable error values");
    }

    const double band = path.mean_error[best] + path.se[best];
    for (std::size_t gi = 0; gi <= best; ++gi) {
        if (!std::isnan(path.mean_error[gi]) && path.mean_error[gi] <= band) {
            return path.grid[gi];
        }
    }
    return path.grid[best];
}

std::vector<std::size_t> default_grid(std::size_t p) {
    if (p < 2) throw BadArgument("default grid needs p >= 2");
    std::vector<std::size_t> grid;
    for (std::size_t m = 2; m <= std::min<std::size_t>(p, 30); m += 2) {
        grid.push_back(m);
    }
    if (p <= 30 && (grid.empty() || grid.back() != p)) grid.push_back(p);
    return grid;
}

SlrCvFit fit_slr_cv(const CompositionMatrix& X, std::span<const double> y,
                    const std::vector<std::size_t>& grid, int folds,
                    Family family, ClusterMethod method, std::uint64_t seed,
                    unsigned threads) {
    SlrCvFit out;
    out.path = cv_path(X, y, grid, folds, family, method, seed, threads);
    out.m_selected = select_one_se(out.path);
    out.model = fit_slr(X, y, out.m_selected, family, method);
    return out;
}

}  // namespace slr
