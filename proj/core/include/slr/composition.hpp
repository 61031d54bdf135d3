#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "slr/errors.hpp"

namespace slr {

/// A point on the simplex: strictly positive parts summing to one.
class Composition {
public:
    /// Validates positivity, p >= 2 and unit sum (absolute tolerance 1e-9).
    explicit Composition(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t j) const noexcept { return values_[j]; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    std::vector<double> values_;
};

/// n samples on a common p-part simplex with unique feature names.
class CompositionMatrix {
public:
    CompositionMatrix(std::vector<Composition> rows,
                      std::vector<std::string> feature_names);

    /// Takes row-major data already on the simplex; each row is validated.
    CompositionMatrix(std::size_t n, std::size_t p, std::vector<double> data,
                      std::vector<std::string> feature_names);

    std::size_t n() const noexcept { return n_; }
    std::size_t p() const noexcept { return p_; }
    double at(std::size_t i, std::size_t j) const noexcept {
        return data_[i * p_ + j];
    }
    std::span<const double> row(std::size_t i) const noexcept {
        return {data_.data() + i * p_, p_};
    }
    const std::vector<std::string>& feature_names() const noexcept {
        return names_;
    }

private:
    void validate() const;

    std::size_t n_ = 0;
    std::size_t p_ = 0;
    std::vector<double> data_;  // row-major n x p
    std::vector<std::string> names_;
};

/// Two disjoint nonempty index groups defining a balance: I+ (numerator)
/// and I- (denominator). Indices are 0-based and kept sorted.
struct BalancePartition {
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;

    BalancePartition() = default;
    BalancePartition(std::vector<std::size_t> plus_set,
                     std::vector<std::size_t> minus_set);

    /// Throws IndexOutOfRange unless all indices are < p.
    void check_against(std::size_t p) const;
};

/// Pairwise Aitchison variation over a variable subset. Symmetric, zero
/// diagonal, nonnegative entries; index_map records the original variable
/// index behind each local row/column.
class VariationMatrix {
public:
    VariationMatrix(std::size_t m, std::vector<double> values,
                    std::vector<std::size_t> index_map);

    std::size_t dim() const noexcept { return m_; }
    double at(std::size_t j, std::size_t k) const noexcept {
        return values_[j * m_ + k];
    }
    const std::vector<std::size_t>& index_map() const noexcept {
        return index_map_;
    }
    double max_entry() const noexcept;

private:
    std::size_t m_;
    std::vector<double> values_;  // row-major m x m
    std::vector<std::size_t> index_map_;
};

/// Normalizes a strictly positive vector onto the simplex.
/// Throws ZeroEntry if any entry is <= 0 and TooShort if fewer than 2 parts.
Composition closure(std::span<const double> raw);

/// Centered log ratio transform: log(x_j) - mean_k log(x_k). Sums to zero.
std::vector<double> clr(const Composition& x);

/// clr applied row-wise; returns a row-major n x p matrix.
std::vector<double> clr_matrix(const CompositionMatrix& X);

/// Inverse additive log ratio transform of a (p-1)-vector, reference part
/// last. Exponents are shifted by max(w, 0) before exponentiation; spreads
/// beyond a safe exponent range raise Overflow.
Composition inv_alr(std::span<const double> w);

/// Additive log ratio transform with the last part as reference.
std::vector<double> alr(const Composition& x);

/// Balance value log g(x_{I+}) - log g(x_{I-}) without the classical
/// normalizing constant (absorbed by the regression coefficient).
double balance(const Composition& x, const BalancePartition& part);

/// Per-sample balance values over a whole matrix.
std::vector<double> balances(const CompositionMatrix& X,
                             const BalancePartition& part);

/// Empirical variation matrix over `subset`:
/// entry (j,k) = (1/n) sum_i (log(x_ij/x_ik) - mean_i' log(x_i'j/x_i'k))^2.
/// Divisor is n, matching the estimator this library standardizes on.
VariationMatrix variation_matrix(const CompositionMatrix& X,
                                 std::span<const std::size_t> subset);

}  // namespace slr
