#include "ivrisk/returns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace ivrisk {

namespace {

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> days = {31, 28, 31, 30, 31, 30,
                                                 31, 31, 30, 31, 30, 31};
    if (m == 2 && leap(y)) return 29;
    return days[m - 1];
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits one CSV record. Handles double-quoted fields with "" escapes;
// embedded newlines are not supported (records are read line by line).
std::vector<std::string> split_csv(std::string_view line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (quoted)
        throw MalformedRow("line " + std::to_string(line_no) + ": unterminated quote");
    fields.push_back(std::move(cur));
    return fields;
}

double parse_price(std::string_view raw, std::string_view column, std::size_t line_no) {
    const std::string_view text = trim(raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value))
        throw MalformedRow("line " + std::to_string(line_no) + ": bad number '" +
                           std::string(raw) + "' in column '" + std::string(column) + "'");
    return value;
}

} // namespace

bool Date::ok() const {
    return month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> Date::try_parse(std::string_view text) {
    text = trim(text);
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto digits = [&](std::size_t pos, std::size_t len, int& out) {
        out = 0;
        for (std::size_t i = pos; i < pos + len; ++i) {
            if (text[i] < '0' || text[i] > '9') return false;
            out = out * 10 + (text[i] - '0');
        }
        return true;
    };
    Date d;
    if (!digits(0, 4, d.year) || !digits(5, 2, d.month) || !digits(8, 2, d.day))
        return std::nullopt;
    if (!d.ok()) return std::nullopt;
    return d;
}

Date Date::parse(std::string_view text) {
    if (auto d = try_parse(text)) return *d;
    throw DataError("invalid date '" + std::string(text) + "', expected YYYY-MM-DD");
}

std::vector<PriceBar> parse_prices(std::istream& in, const CsvSchema& schema) {
    std::string line;
    if (!std::getline(in, line)) return {}; // empty input: no data, not an error

    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    const auto header = split_csv(line, 1);
    auto column_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (trim(header[i]) == name) return i;
        throw DataError("column '" + name + "' not found in header");
    };
    const std::size_t c_date = column_index(schema.date);
    const std::size_t c_close = column_index(schema.close);
    const std::size_t c_high = column_index(schema.high);
    const std::size_t c_low = column_index(schema.low);

    std::vector<PriceBar> bars;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;

        const auto fields = split_csv(line, line_no);
        if (fields.size() != header.size())
            throw MalformedRow("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields, got " +
                               std::to_string(fields.size()));

        PriceBar bar;
        const auto date = Date::try_parse(fields[c_date]);
        if (!date)
            throw MalformedRow("line " + std::to_string(line_no) + ": bad date '" +
                               fields[c_date] + "'");
        bar.date = *date;
        bar.close = parse_price(fields[c_close], schema.close, line_no);
        bar.high = parse_price(fields[c_high], schema.high, line_no);
        bar.low = parse_price(fields[c_low], schema.low, line_no);

        if (bar.close <= 0.0 || bar.high <= 0.0 || bar.low <= 0.0)
            throw NonPositivePrice("line " + std::to_string(line_no) + " (" +
                                   bar.date.iso() + "): prices must be strictly positive");
        if (bar.low > bar.high || bar.close < bar.low || bar.close > bar.high)
            throw OrderViolation("line " + std::to_string(line_no) + " (" + bar.date.iso() +
                                 "): close must lie within [low, high]");
        bars.push_back(bar);
    }

    std::stable_sort(bars.begin(), bars.end(),
                     [](const PriceBar& a, const PriceBar& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < bars.size(); ++i)
        if (bars[i].date == bars[i - 1].date)
            throw DuplicateDate("duplicate date " + bars[i].date.iso());
    return bars;
}

std::vector<PriceBar> load_prices(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError(path + ": cannot open file");
    try {
        return parse_prices(in, schema);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

std::vector<ReturnObservation> log_returns(const std::vector<PriceBar>& bars) {
    if (bars.size() < 2)
        throw InsufficientData("log_returns: need at least 2 bars, got " +
                               std::to_string(bars.size()));
    std::vector<ReturnObservation> out;
    out.reserve(bars.size() - 1);
    for (std::size_t j = 1; j < bars.size(); ++j) {
        const double prev = std::log(bars[j - 1].close);
        ReturnObservation obs;
        obs.date = bars[j].date;
        obs.point = std::log(bars[j].close) - prev;
        obs.interval = Interval(std::log(bars[j].low) - prev, std::log(bars[j].high) - prev);
        out.push_back(obs);
    }
    return out;
}

AssetPanel build_panel(std::vector<std::string> tickers,
                       std::vector<std::vector<ReturnObservation>> per_asset) {
    if (tickers.empty() || tickers.size() != per_asset.size())
        throw std::invalid_argument("build_panel: one observation series per ticker required");

    // Intersect the date sets, preserving ascending order of the first asset.
    std::vector<Date> common;
    for (const auto& obs : per_asset[0]) common.push_back(obs.date);
    for (std::size_t a = 1; a < per_asset.size(); ++a) {
        std::vector<Date> dates;
        for (const auto& obs : per_asset[a]) dates.push_back(obs.date);
        std::vector<Date> kept;
        std::set_intersection(common.begin(), common.end(), dates.begin(), dates.end(),
                              std::back_inserter(kept));
        common.swap(kept);
    }
    if (common.empty()) throw DataError("build_panel: assets share no common dates");

    AssetPanel panel;
    panel.tickers = std::move(tickers);
    panel.dates = common;
    panel.observations.resize(per_asset.size());
    for (std::size_t a = 0; a < per_asset.size(); ++a) {
        std::map<Date, const ReturnObservation*> by_date;
        for (const auto& obs : per_asset[a]) by_date[obs.date] = &obs;
        auto& row = panel.observations[a];
        row.reserve(common.size());
        for (const auto& d : common) row.push_back(*by_date.at(d));
    }
    return panel;
}

AssetPanel partition_periods(AssetPanel panel, const PeriodSpec& spec) {
    const std::size_t n = panel.dates.size();
    if (spec.k < 1) throw std::invalid_argument("partition_periods: k must be >= 1");

    std::vector<IndexRange> periods;
    if (spec.strategy == PeriodStrategy::EqualCount) {
        if (n < spec.k)
            throw EmptyPeriod("partition_periods: " + std::to_string(n) +
                              " observations cannot fill " + std::to_string(spec.k) +
                              " periods");
        const std::size_t base = n / spec.k;
        const std::size_t rem = n % spec.k; // earlier blocks take the remainder
        std::size_t begin = 0;
        for (std::size_t j = 0; j < spec.k; ++j) {
            const std::size_t len = base + (j < rem ? 1 : 0);
            periods.push_back({begin, begin + len});
            begin += len;
        }
    } else {
        if (spec.boundaries.size() + 1 != spec.k)
            throw std::invalid_argument("partition_periods: need k-1 boundary dates, got " +
                                        std::to_string(spec.boundaries.size()));
        if (n == 0) throw EmptyPeriod("partition_periods: no observations");
        for (std::size_t i = 0; i < spec.boundaries.size(); ++i) {
            const Date& b = spec.boundaries[i];
            if (i > 0 && !(spec.boundaries[i - 1] < b))
                throw BoundariesOutOfRange("boundaries must be strictly increasing");
            if (b < panel.dates.front() || !(b < panel.dates.back()))
                throw BoundariesOutOfRange("boundary " + b.iso() +
                                           " outside the observation range " +
                                           panel.dates.front().iso() + ".." +
                                           panel.dates.back().iso());
        }
        std::size_t begin = 0;
        for (const Date& b : spec.boundaries) {
            std::size_t end = begin;
            while (end < n && !(b < panel.dates[end])) ++end; // dates <= b
            if (end == begin)
                throw EmptyPeriod("no observations on or before boundary " + b.iso());
            periods.push_back({begin, end});
            begin = end;
        }
        if (begin == n) throw EmptyPeriod("no observations after the last boundary");
        periods.push_back({begin, n});
    }

    panel.periods = std::move(periods);
    return panel;
}

} // namespace ivrisk
