#include "slr/composition.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <unordered_set>

namespace slr {

namespace {

constexpr double kSumTolerance = 1e-9;
// Keeps e^{w - max} above the denormal range after division by the
// denominator, so simplex entries stay strictly positive.
constexpr double kSafeExponentSpread = 700.0;

void check_simplex_row(std::span<const double> row) {
    if (row.size() < 2) {
        throw TooShort("composition needs at least 2 parts, got " +
                       std::to_string(row.size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (!(row[j] > 0.0)) {
            throw ZeroEntry("part " + std::to_string(j) +
                            " is not strictly positive");
        }
        sum += row[j];
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw BadArgument("composition parts sum to " + std::to_string(sum) +
                          ", expected 1");
    }
}

}  // namespace

Composition::Composition(std::vector<double> values)
    : values_(std::move(values)) {
    check_simplex_row(values_);
}

CompositionMatrix::CompositionMatrix(std::vector<Composition> rows,
                                     std::vector<std::string> feature_names)
    : names_(std::move(feature_names)) {
    if (rows.empty()) throw BadArgument("composition matrix needs rows");
    n_ = rows.size();
    p_ = rows.front().size();
    data_.reserve(n_ * p_);
    for (const auto& r : rows) {
        if (r.size() != p_) {
            throw DimensionMismatch("rows have differing part counts");
        }
        data_.insert(data_.end(), r.values().begin(), r.values().end());
    }
    validate();
}

CompositionMatrix::CompositionMatrix(std::size_t n, std::size_t p,
                                     std::vector<double> data,
                                     std::vector<std::string> feature_names)
    : n_(n), p_(p), data_(std::move(data)), names_(std::move(feature_names)) {
    if (n_ == 0) throw BadArgument("composition matrix needs rows");
    if (data_.size() != n_ * p_) {
        throw DimensionMismatch("data size does not match n x p");
    }
    for (std::size_t i = 0; i < n_; ++i) check_simplex_row(row(i));
    validate();
}

void CompositionMatrix::validate() const {
    if (names_.size() != p_) {
        throw DimensionMismatch("expected " + std::to_string(p_) +
                                " feature names, got " +
                                std::to_string(names_.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : names_) {
        if (!seen.insert(name).second) {
            throw BadArgument("duplicate feature name: " + name);
        }
    }
}

BalancePartition::BalancePartition(std::vector<std::size_t> plus_set,
                                   std::vector<std::size_t> minus_set)
    : plus(std::move(plus_set)), minus(std::move(minus_set)) {
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    if (plus.empty() || minus.empty()) {
        throw BadArgument("balance groups must both be nonempty");
    }
    if (std::adjacent_find(plus.begin(), plus.end()) != plus.end() ||
        std::adjacent_find(minus.begin(), minus.end()) != minus.end()) {
        throw BadArgument("balance group contains a duplicate index");
    }
    std::vector<std::size_t> overlap;
    std::set_intersection(plus.begin(), plus.end(), minus.begin(), minus.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) {
        throw BadArgument("balance groups overlap at index " +
                          std::to_string(overlap.front()));
    }
}

void BalancePartition::check_against(std::size_t p) const {
    for (std::size_t j : plus) {
        if (j >= p) throw IndexOutOfRange("numerator index " + std::to_string(j));
    }
    for (std::size_t j : minus) {
        if (j >= p) throw IndexOutOfRange("denominator index " + std::to_string(j));
    }
}

VariationMatrix::VariationMatrix(std::size_t m, std::vector<double> values,
                                 std::vector<std::size_t> index_map)
    : m_(m), values_(std::move(values)), index_map_(std::move(index_map)) {
    if (values_.size() != m_ * m_ || index_map_.size() != m_) {
        throw DimensionMismatch("variation matrix shape mismatch");
    }
    for (std::size_t j = 0; j < m_; ++j) {
        if (at(j, j) != 0.0) throw BadArgument("variation diagonal must be 0");
        for (std::size_t k = j + 1; k < m_; ++k) {
            if (at(j, k) < 0.0) throw BadArgument("variation entries must be >= 0");
            if (std::abs(at(j, k) - at(k, j)) > 1e-12) {
                throw BadArgument("variation matrix must be symmetric");
            }
        }
    }
}

double VariationMatrix::max_entry() const noexcept {
    double best = 0.0;
    for (double v : values_) best = std::max(best, v);
    return best;
}

Composition closure(std::span<const double> raw) {
    if (raw.size() < 2) {
        throw TooShort("closure needs at least 2 parts, got " +
                       std::to_string(raw.size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (!(raw[j] > 0.0)) {
            throw ZeroEntry("part " + std::to_string(j) +
                            " must be strictly positive before closure");
        }
        sum += raw[j];
    }
    std::vector<double> out(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j) out[j] = raw[j] / sum;
    return Composition(std::move(out));
}

std::vector<double> clr(const Composition& x) {
    const std::size_t p = x.size();
    std::vector<double> out(p);
    double mean_log = 0.0;
    for (std::size_t j = 0; j < p; ++j) {
        out[j] = std::log(x[j]);
        mean_log += out[j];
    }
    mean_log /= static_cast<double>(p);
    for (std::size_t j = 0; j < p; ++j) out[j] -= mean_log;
    return out;
}

std::vector<double> clr_matrix(const CompositionMatrix& X) {
    const std::size_t n = X.n(), p = X.p();
    std::vector<double> out(n * p);
    for (std::size_t i = 0; i < n; ++i) {
        double mean_log = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            out[i * p + j] = std::log(X.at(i, j));
            mean_log += out[i * p + j];
        }
        mean_log /= static_cast<double>(p);
        for (std::size_t j = 0; j < p; ++j) out[i * p + j] -= mean_log;
    }
    return out;
}

Composition inv_alr(std::span<const double> w) {
    if (w.empty()) throw TooShort("inv_alr needs at least 1 coordinate");
    double hi = 0.0, lo = 0.0;  // implicit reference coordinate is 0
    for (double v : w) {
        if (!std::isfinite(v)) throw BadArgument("inv_alr coordinate not finite");
        hi = std::max(hi, v);
        lo = std::min(lo, v);
    }
    if (hi - lo > kSafeExponentSpread) {
        throw Overflow("alr coordinate spread " + std::to_string(hi - lo) +
                       " exceeds safe exponent range");
    }
    std::vector<double> out(w.size() + 1);
    double denom = std::exp(-hi);  // reference part, shifted
    for (std::size_t j = 0; j < w.size(); ++j) {
        out[j] = std::exp(w[j] - hi);
        denom += out[j];
    }
    out[w.size()] = std::exp(-hi);
    for (double& v : out) v /= denom;
    return Composition(std::move(out));
}

std::vector<double> alr(const Composition& x) {
    const std::size_t p = x.size();
    std::vector<double> out(p - 1);
    const double ref = std::log(x[p - 1]);
    for (std::size_t j = 0; j + 1 < p; ++j) out[j] = std::log(x[j]) - ref;
    return out;
}

namespace {

double balance_from_row(std::span<const double> row,
                        const BalancePartition& part) {
    double plus_sum = 0.0, minus_sum = 0.0;
    for (std::size_t j : part.plus) plus_sum += std::log(row[j]);
    for (std::size_t j : part.minus) minus_sum += std::log(row[j]);
    return plus_sum / static_cast<double>(part.plus.size()) -
           minus_sum / static_cast<double>(part.minus.size());
}

}  // namespace

double balance(const Composition& x, const BalancePartition& part) {
    part.check_against(x.size());
    return balance_from_row(x.values(), part);
}

std::vector<double> balances(const CompositionMatrix& X,
                             const BalancePartition& part) {
    part.check_against(X.p());
    std::vector<double> out(X.n());
    for (std::size_t i = 0; i < X.n(); ++i) {
        out[i] = balance_from_row(X.row(i), part);
    }
    return out;
}

VariationMatrix variation_matrix(const CompositionMatrix& X,
                                 std::span<const std::size_t> subset) {
    if (subset.size() < 2) {
        throw SubsetTooSmall("variation matrix needs at least 2 variables");
    }
    if (X.n() < 2) throw BadArgument("variation matrix needs n >= 2 samples");
    std::vector<std::size_t> idx(subset.begin(), subset.end());
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
        throw BadArgument("variation subset contains duplicates");
    }
    if (idx.back() >= X.p()) {
        throw IndexOutOfRange("variation subset index " +
                              std::to_string(idx.back()));
    }

    const std::size_t m = idx.size(), n = X.n();
    std::vector<double> logs(m * n);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t i = 0; i < n; ++i) {
            logs[a * n + i] = std::log(X.at(i, idx[a]));
        }
    }

    std::vector<double> values(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const double* la = logs.data() + a * n;
            const double* lb = logs.data() + b * n;
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) mean += la[i] - lb[i];
            mean /= static_cast<double>(n);
            double ss = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = la[i] - lb[i] - mean;
                ss += d * d;
            }
            const double v = ss / static_cast<double>(n);
            values[a * m + b] = v;
            values[b * m + a] = v;
        }
    }
    return VariationMatrix(m, std::move(values), std::move(idx));
}

}  // namespace slr
