#include "ivrisk/risk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ivrisk {

EmpiricalIntervalSample::EmpiricalIntervalSample(std::vector<Interval> observations)
    : observations_(std::move(observations)) {
    if (observations_.empty())
        throw EmptySample("EmpiricalIntervalSample: sample must be non-empty");
    sorted_index_.resize(observations_.size());
    std::iota(sorted_index_.begin(), sorted_index_.end(), std::size_t{0});
    std::stable_sort(sorted_index_.begin(), sorted_index_.end(),
                     [this](std::size_t a, std::size_t b) {
                         return std::is_lt(compare(observations_[a], observations_[b]));
                     });
}

Interval expected_interval(const std::vector<Interval>& sample) {
    if (sample.empty()) throw EmptySample("expected_interval: sample must be non-empty");
    double sum_lo = 0.0;
    double sum_hi = 0.0;
    for (const Interval& v : sample) {
        sum_lo += v.lo();
        sum_hi += v.hi();
    }
    const double n = static_cast<double>(sample.size());
    return Interval(sum_lo / n, sum_hi / n);
}

std::size_t tail_count(std::size_t n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw AlphaOutOfRange("alpha must be in (0,1), got " + std::to_string(alpha));
    if (n == 0) throw EmptySample("tail_count: empty sample");
    auto q = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n)));
    return std::clamp<std::size_t>(q, 1, n);
}

Interval ivar(const EmpiricalIntervalSample& sample, double alpha) {
    const std::size_t q = tail_count(sample.size(), alpha);
    return -sample.order_statistic(q);
}

RiskEstimate icvar(const EmpiricalIntervalSample& sample, double alpha) {
    const std::size_t q = tail_count(sample.size(), alpha);
    std::vector<Interval> tail;
    tail.reserve(q);
    for (std::size_t t = 0; t < q; ++t)
        tail.push_back(sample.observations()[sample.sorted_index()[t]]);

    RiskEstimate est;
    est.alpha = alpha;
    est.tail_size = q;
    est.ivar = -sample.order_statistic(q);
    est.icvar = -expected_interval(tail);
    return est;
}

JarqueBeraResult jarque_bera(const std::vector<double>& series) {
    const std::size_t n = series.size();
    if (n < 4)
        throw std::invalid_argument("jarque_bera: need at least 4 values, got " +
                                    std::to_string(n));
    const double nn = static_cast<double>(n);
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= nn;

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double v : series) {
        const double d = v - mean;
        const double d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= nn;
    m3 /= nn;
    m4 /= nn;
    if (m2 <= 0.0) throw DegenerateSample("jarque_bera: zero variance");

    JarqueBeraResult r;
    r.skewness = m3 / std::pow(m2, 1.5);
    r.kurtosis = m4 / (m2 * m2);
    const double excess = r.kurtosis - 3.0;
    r.statistic = nn / 6.0 * (r.skewness * r.skewness + 0.25 * excess * excess);
    return r;
}

} // namespace ivrisk
