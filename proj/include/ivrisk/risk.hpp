#pragma once

#include "ivrisk/interval.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ivrisk {

struct EmptySample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct AlphaOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegenerateSample : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Empirical distribution of interval-valued returns: the observations plus
/// the permutation that sorts them ascending under the mean-first order.
/// Sorting is stable, so runs of equivalent intervals keep input order and
/// repeated construction is deterministic.
class EmpiricalIntervalSample {
public:
    explicit EmpiricalIntervalSample(std::vector<Interval> observations);

    const std::vector<Interval>& observations() const { return observations_; }
    const std::vector<std::size_t>& sorted_index() const { return sorted_index_; }
    std::size_t size() const { return observations_.size(); }

    /// rank-th smallest observation under the order, rank in [1, size()].
    const Interval& order_statistic(std::size_t rank) const {
        return observations_[sorted_index_.at(rank - 1)];
    }

private:
    std::vector<Interval> observations_;
    std::vector<std::size_t> sorted_index_;
};

/// Per-sample risk summary at confidence 1 - alpha.
struct RiskEstimate {
    double alpha = 0.05;
    Interval ivar;
    Interval icvar;
    std::size_t tail_size = 0;
};

/// Componentwise sample mean: [mean of lower endpoints, mean of uppers].
Interval expected_interval(const std::vector<Interval>& sample);

/// Number of tail scenarios, ceil(alpha * n), always at least 1.
std::size_t tail_count(std::size_t n, double alpha);

/// Historical-simulation interval VaR: the negated ceil(alpha*N)-th smallest
/// observation under the mean-first order.
Interval ivar(const EmpiricalIntervalSample& sample, double alpha);

/// Historical-simulation interval CVaR: the negated mean of the
/// ceil(alpha*N) smallest observations (the tail), together with the
/// matching IVaR and tail size.
RiskEstimate icvar(const EmpiricalIntervalSample& sample, double alpha);

struct JarqueBeraResult {
    double statistic = 0.0;
    double skewness = 0.0;
    double kurtosis = 0.0; ///< non-excess; the statistic uses (kurtosis - 3)^2
};

/// Jarque-Bera normality statistic N/6 * (S^2 + (K-3)^2/4) with biased
/// (divide-by-N) central moments. Needs at least 4 values and nonzero
/// variance.
JarqueBeraResult jarque_bera(const std::vector<double>& series);

} // namespace ivrisk
