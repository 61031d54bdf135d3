#pragma once

#include <span>

#include "slr/composition.hpp"
#include "slr/glm.hpp"

namespace slr {

/// Result of the exhaustive best-balance search.
struct OracleResult {
    BalancePartition partition;
    double criterion = 0.0;    // in-sample RSS (gaussian) or deviance (binomial)
    std::size_t ties = 0;      // candidates attaining the optimal criterion
    std::size_t candidates = 0;
};

/// Enumerates every assignment of the p variables to {numerator,
/// denominator, unused} with both groups nonempty, modulo the swap
/// symmetry: (3^p - 2^(p+1) + 1) / 2 candidates. Each candidate balance is
/// fit in-sample; the criterion minimizer wins, ties resolved toward the
/// lexicographically smallest partition. Throws PTooLarge above max_p.
OracleResult exhaustive_best_balance(const CompositionMatrix& X,
                                     std::span<const double> y, Family family,
                                     std::size_t max_p = 10,
                                     unsigned threads = 0);

}  // namespace slr
