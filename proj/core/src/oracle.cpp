#include "slr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "slr/errors.hpp"
#include "slr/parallel.hpp"

namespace slr {

namespace {

struct Candidate {
    double criterion = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> plus, minus;
    std::size_t ties = 0;
    std::size_t seen = 0;

    bool beats(const Candidate& other) const {
        if (criterion != other.criterion) return criterion < other.criterion;
        if (plus != other.plus) return plus < other.plus;
        return minus < other.minus;
    }
};

double intercept_only_criterion(std::span<const double> y, Family family) {
    double ybar = 0.0;
    for (double v : y) ybar += v;
    ybar /= static_cast<double>(y.size());
    if (family == Family::gaussian) {
        double tss = 0.0;
        for (double v : y) tss += (v - ybar) * (v - ybar);
        return tss;
    }
    const double p = std::clamp(ybar, 1e-12, 1.0 - 1e-12);
    double ll = 0.0;
    for (double v : y) ll += v == 1.0 ? std::log(p) : std::log(1.0 - p);
    return -2.0 * ll;
}

}  // namespace

OracleResult exhaustive_best_balance(const CompositionMatrix& X,
                                     std::span<const double> y, Family family,
                                     std::size_t max_p, unsigned threads) {
    const std::size_t p = X.p(), n = X.n();
    if (p > max_p) {
        throw PTooLarge("exhaustive search limited to p <= " +
                        std::to_string(max_p) + ", got p = " + std::to_string(p));
    }
    if (y.size() != n) throw LengthMismatch("response length mismatch");

    std::vector<double> logs(n * p);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < p; ++j) logs[i * p + j] = std::log(X.at(i, j));
    }
    const double null_criterion = intercept_only_criterion(y, family);

    std::size_t total_codes = 1;
    for (std::size_t j = 0; j < p; ++j) total_codes *= 3;

    // Fixed chunk layout keeps the reduction identical for any thread count.
    const std::size_t chunk_count = std::min<std::size_t>(64, total_codes);
    const std::size_t chunk_size = (total_codes + chunk_count - 1) / chunk_count;
    std::vector<Candidate> chunk_best(chunk_count);

    parallel_for(chunk_count, threads, [&](std::size_t chunk) {
        Candidate best;
        std::vector<std::size_t> plus, minus;
        std::vector<double> b(n);

        const std::size_t lo = chunk * chunk_size;
        const std::size_t hi = std::min(total_codes, lo + chunk_size);
        for (std::size_t code = lo; code < hi; ++code) {
            plus.clear();
            minus.clear();
            std::size_t rest = code;
            bool canonical = true;
            for (std::size_t j = 0; j < p; ++j) {
                const std::size_t digit = rest % 3;
                rest /= 3;
                if (digit == 1) {
                    plus.push_back(j);
                } else if (digit == 2) {
                    // Canonical orientation: the first signed variable is
                    // in the numerator; the mirror image is skipped.
                    if (plus.empty() && minus.empty()) {
                        canonical = false;
                        break;
                    }
                    minus.push_back(j);
                }
            }
            if (!canonical || plus.empty() || minus.empty()) continue;

            const double wp = 1.0 / static_cast<double>(plus.size());
            const double wm = 1.0 / static_cast<double>(minus.size());
            bool constant = true;
            for (std::size_t i = 0; i < n; ++i) {
                double sp = 0.0, sm = 0.0;
                for (std::size_t j : plus) sp += logs[i * p + j];
                for (std::size_t j : minus) sm += logs[i * p + j];
                b[i] = sp * wp - sm * wm;
                if (i > 0 && b[i] != b[0]) constant = false;
            }

            double criterion;
            if (constant) {
                criterion = null_criterion;
            } else if (family == Family::gaussian) {
                criterion = ols_rss(simple_ols(b, y), b, y);
            } else {
                criterion = logistic_deviance(simple_logistic(b, y), b, y);
            }

            Candidate cand;
            cand.criterion = criterion;
            cand.plus = plus;
            cand.minus = minus;
            cand.ties = 1;
            cand.seen = 1;
            if (cand.beats(best)) {
                cand.ties = criterion == best.criterion ? best.ties + 1 : 1;
                cand.seen = best.seen + 1;
                best = std::move(cand);
            } else {
                if (criterion == best.criterion) ++best.ties;
                ++best.seen;
            }
        }
        chunk_best[chunk] = std::move(best);
    });

    Candidate best;
    std::size_t seen = 0;
    for (const auto& c : chunk_best) {
        seen += c.seen;
        if (c.plus.empty()) continue;  // chunk held no valid candidates
        if (c.beats(best)) {
            const std::size_t carried =
                c.criterion == best.criterion ? best.ties : 0;
            best = c;
            best.ties += carried;
        } else if (c.criterion == best.criterion) {
            best.ties += c.ties;
        }
    }
    if (best.plus.empty()) {
        throw BadArgument("no valid balance partitions for p = " +
                          std::to_string(p));
    }

    OracleResult out;
    out.partition = BalancePartition(best.plus, best.minus);
    out.criterion = best.criterion;
    out.ties = best.ties;
    out.candidates = seen;
    return out;
}

}  // namespace slr
