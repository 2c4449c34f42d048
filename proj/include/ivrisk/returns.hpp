#pragma once

#include "ivrisk/errors.hpp"
#include "ivrisk/interval.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ivrisk {

/// Calendar date, ISO-8601 text form "YYYY-MM-DD". Ordering is lexicographic
/// on (year, month, day).
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool ok() const;
    std::string iso() const;

    static std::optional<Date> try_parse(std::string_view text);
    static Date parse(std::string_view text); // throws DataError
};

/// One trading day's prices. The open is never used downstream, so it is not
/// stored even when present in the input file.
struct PriceBar {
    Date date;
    double close = 0.0;
    double high = 0.0;
    double low = 0.0;
};

/// Daily log-return: the point value from close-to-close and the interval
/// spanned by the day's low/high against the previous close.
struct ReturnObservation {
    Date date;
    double point = 0.0;
    Interval interval;
};

/// Maps the required fields onto CSV header names.
struct CsvSchema {
    std::string date = "date";
    std::string close = "close";
    std::string high = "high";
    std::string low = "low";
};

struct MalformedRow : DataError {
    using DataError::DataError;
};
struct NonPositivePrice : DataError {
    using DataError::DataError;
};
struct OrderViolation : DataError {
    using DataError::DataError;
};
struct DuplicateDate : DataError {
    using DataError::DataError;
};
struct InsufficientData : DataError {
    using DataError::DataError;
};

/// Reads one asset's OHLC history from CSV. The header row locates the
/// columns named by the schema; extra columns are ignored. Bars come back
/// sorted by date ascending; duplicate dates are rejected. An empty input
/// yields an empty list.
std::vector<PriceBar> parse_prices(std::istream& in, const CsvSchema& schema = {});

/// parse_prices over a file path; errors carry the path as context.
std::vector<PriceBar> load_prices(const std::string& path, const CsvSchema& schema = {});

/// Log-returns from consecutive bars. For each bar after the first,
///   point  = ln(close_j) - ln(close_{j-1})
///   range  = [ln(low_j) - ln(close_{j-1}), ln(high_j) - ln(close_{j-1})]
/// The first bar has no prior close and produces no observation, so the
/// output is one shorter than the input.
std::vector<ReturnObservation> log_returns(const std::vector<PriceBar>& bars);

enum class PeriodStrategy {
    EqualCount,       ///< k contiguous blocks with sizes differing by at most 1
    ByDateBoundaries, ///< user-supplied cut dates; a cut date ends its period
};

struct PeriodSpec {
    std::size_t k = 5;
    PeriodStrategy strategy = PeriodStrategy::EqualCount;
    std::vector<Date> boundaries; ///< k-1 cut dates when strategy is ByDateBoundaries
};

/// Half-open index range [begin, end) into the aligned observation sequence.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Date-aligned panel of return observations for n assets, optionally
/// partitioned into k contiguous evaluation periods.
struct AssetPanel {
    std::vector<std::string> tickers;
    std::vector<Date> dates; ///< common dates, ascending
    std::vector<std::vector<ReturnObservation>> observations; ///< [asset][t]
    std::vector<IndexRange> periods; ///< empty until partition_periods

    std::size_t num_assets() const { return tickers.size(); }
    std::size_t num_dates() const { return dates.size(); }
};

struct EmptyPeriod : DataError {
    using DataError::DataError;
};
struct BoundariesOutOfRange : DataError {
    using DataError::DataError;
};

/// Inner-joins per-asset observation series on their dates: only dates
/// present for every asset are kept, so all assets share one date vector.
AssetPanel build_panel(std::vector<std::string> tickers,
                       std::vector<std::vector<ReturnObservation>> per_asset);

/// Splits the panel's aligned dates into k contiguous periods. EqualCount
/// gives blocks whose sizes differ by at most one, earlier blocks taking the
/// remainder. ByDateBoundaries cuts after each boundary date; every period
/// must end up non-empty.
AssetPanel partition_periods(AssetPanel panel, const PeriodSpec& spec);

} // namespace ivrisk
