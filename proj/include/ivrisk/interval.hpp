#pragma once

#include <cmath>
#include <compare>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ivrisk {

/// Closed real interval [lo, hi]. A degenerate interval (lo == hi) stands in
/// for a plain real number. Values are immutable after construction, so they
/// can be shared freely across threads.
///
/// Endpoints are the canonical storage; mean and half-width are derived on
/// demand rather than stored, so the two representations cannot drift apart.
class Interval {
public:
    Interval() = default;

    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("Interval: endpoints must be finite");
        if (lo > hi)
            throw std::invalid_argument("Interval: lo (" + std::to_string(lo) +
                                        ") > hi (" + std::to_string(hi) + ")");
    }

    /// Degenerate interval [v, v] representing the real number v.
    static Interval point(double v) { return Interval(v, v); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    /// Midpoint (lo + hi) / 2.
    double mean() const { return 0.5 * (lo_ + hi_); }

    /// Half-width (hi - lo) / 2, so that [mean - width, mean + width]
    /// reconstructs the interval.
    double width() const { return 0.5 * (hi_ - lo_); }

    bool degenerate() const { return lo_ == hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

/// Scalar multiple; the endpoints swap when lambda is negative.
inline Interval operator*(double lambda, const Interval& a) {
    if (lambda >= 0.0)
        return Interval(lambda * a.lo(), lambda * a.hi());
    return Interval(lambda * a.hi(), lambda * a.lo());
}

inline Interval operator*(const Interval& a, double lambda) { return lambda * a; }

inline Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

/// Total order "mean-first, left-second": midpoints decide, lower endpoints
/// break ties. Equivalent intervals have equal midpoint and equal lo (and
/// hence equal hi, up to rounding of the midpoint).
///
/// Comparison is by exact double equality, not a tolerance: the order must
/// stay total and antisymmetric for sorting. Callers that want a tolerant
/// comparison do it above this layer.
inline std::weak_ordering compare(const Interval& a, const Interval& b) {
    const double ma = a.mean();
    const double mb = b.mean();
    if (ma < mb) return std::weak_ordering::less;
    if (ma > mb) return std::weak_ordering::greater;
    if (a.lo() < b.lo()) return std::weak_ordering::less;
    if (a.lo() > b.lo()) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

/// Comparator adapter for std::sort and friends.
struct MeanFirstLess {
    bool operator()(const Interval& a, const Interval& b) const {
        return std::is_lt(compare(a, b));
    }
};

namespace detail {

/// Fixed-point rendering with the sign dropped from negative zero, so that
/// values rounding to zero always print the same bytes.
inline std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    std::string s = buf;
    if (s.size() > 1 && s[0] == '-' &&
        s.find_first_not_of("0.", 1) == std::string::npos)
        s.erase(0, 1);
    return s;
}

} // namespace detail

/// Renders "[lo,hi]" with a configurable number of decimal places.
inline std::string to_string(const Interval& a, int decimals = 4) {
    return "[" + detail::format_fixed(a.lo(), decimals) + "," +
           detail::format_fixed(a.hi(), decimals) + "]";
}

} // namespace ivrisk
