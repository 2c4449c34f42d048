#include "ivrisk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

namespace ivrisk {

namespace {

std::string trim(std::string_view s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string_view::npos) return {};
    const auto b = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

double parse_real(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v))
        throw ConfigError(what + ": not a number: '" + text + "'");
    return v;
}

long parse_int(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw ConfigError(what + ": not an integer: '" + text + "'");
    return v;
}

Interval parse_interval(const std::string& text, const std::string& what) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw ConfigError(what + ": expected 'lo,hi', got '" + text + "'");
    const double lo = parse_real(parts[0], what);
    const double hi = parse_real(parts[1], what);
    if (lo > hi) throw ConfigError(what + ": lower endpoint exceeds upper in '" + text + "'");
    return Interval(lo, hi);
}

std::vector<Interval> parse_bounds(const std::string& text, const std::string& what) {
    std::vector<Interval> out;
    for (const auto& item : split(text, ';'))
        if (!item.empty()) out.push_back(parse_interval(item, what));
    if (out.empty()) throw ConfigError(what + ": empty interval list");
    return out;
}

// --- deterministic number formatting (no locale, LF-only output) ---

std::string fmt(const char* spec, double v) {
    if (v == 0.0) v = 0.0; // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_g(double v) { return fmt("%g", v); }
std::string fmt_g6(double v) { return fmt("%.6g", v); }
std::string fmt_g12(double v) { return fmt("%.12g", v); }

std::string bound_text(const Interval& v) {
    return "[" + fmt_g6(v.lo()) + ", " + fmt_g6(v.hi()) + "]";
}

const char* status_text(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "INFEASIBLE";
    case SolveStatus::Unbounded: return "UNBOUNDED";
    }
    return "?";
}

std::vector<Interval> broadcast_bounds(const std::vector<Interval>& bounds, std::size_t k) {
    if (bounds.size() == k) return bounds;
    if (bounds.size() == 1) return std::vector<Interval>(k, bounds[0]);
    throw ConfigError("expected 1 or " + std::to_string(k) + " bound intervals, got " +
                      std::to_string(bounds.size()));
}

/// Renders rows as space-padded columns; col 0 is left-aligned, the rest
/// right-aligned. Every line ends with LF.
std::string render_columns(const std::vector<std::vector<std::string>>& rows) {
    std::size_t ncols = 0;
    for (const auto& r : rows) ncols = std::max(ncols, r.size());
    std::vector<std::size_t> width(ncols, 0);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::string out;
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c > 0) out += "  ";
            const std::size_t pad = width[c] - r[c].size();
            if (c == 0) {
                out += r[c];
                if (c + 1 < r.size()) out.append(pad, ' ');
            } else {
                out.append(pad, ' ');
                out += r[c];
            }
        }
        out += '\n';
    }
    return out;
}

} // namespace

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    const auto base = std::filesystem::path(path).parent_path();

    RunConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));

        if (key == "assets") {
            for (const auto& item : split(value, ',')) {
                if (item.empty()) continue;
                const auto sep = item.find('=');
                if (sep == std::string::npos)
                    throw ConfigError(path + ":" + std::to_string(lineno) +
                                      ": assets entries must look like TICKER=path");
                const std::string ticker = trim(item.substr(0, sep));
                const std::string file = trim(item.substr(sep + 1));
                cfg.assets.emplace_back(ticker, (base / file).string());
            }
        } else if (key == "col_date") {
            cfg.schema.date = value;
        } else if (key == "col_close") {
            cfg.schema.close = value;
        } else if (key == "col_high") {
            cfg.schema.high = value;
        } else if (key == "col_low") {
            cfg.schema.low = value;
        } else if (key == "k_periods") {
            const long k = parse_int(value, "k_periods");
            if (k < 1) throw ConfigError("k_periods must be positive");
            cfg.periods.k = static_cast<std::size_t>(k);
        } else if (key == "period_strategy") {
            if (value == "equal_count") cfg.periods.strategy = PeriodStrategy::EqualCount;
            else if (value == "boundaries") cfg.periods.strategy = PeriodStrategy::ByDateBoundaries;
            else throw ConfigError("period_strategy must be equal_count or boundaries, got '" + value + "'");
        } else if (key == "period_boundaries") {
            cfg.periods.boundaries.clear();
            for (const auto& d : split(value, ','))
                if (!d.empty()) cfg.periods.boundaries.push_back(Date::parse(d));
        } else if (key == "alpha") {
            cfg.alpha = parse_real(value, "alpha");
        } else if (key == "model") {
            const long m = parse_int(value, "model");
            if (m == 1) cfg.model = ModelKind::One;
            else if (m == 2) cfg.model = ModelKind::Two;
            else throw ConfigError("model must be 1 or 2");
        } else if (key == "gamma") {
            cfg.gammas.clear();
            for (const auto& g : split(value, ','))
                if (!g.empty()) cfg.gammas.push_back(parse_real(g, "gamma"));
        } else if (key == "cap" || key == "floor") {
            cfg.bounds = parse_bounds(value, key);
        } else if (key == "format") {
            if (value == "csv") cfg.format = OutputFormat::Csv;
            else if (value == "pretty") cfg.format = OutputFormat::Pretty;
            else throw ConfigError("format must be csv or pretty, got '" + value + "'");
        } else if (key == "out") {
            cfg.out_path = (base / value).string();
        } else {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return cfg;
}

void validate_config(const RunConfig& config, bool need_bounds) {
    if (!(config.alpha > 0.0 && config.alpha < 1.0))
        throw AlphaOutOfRange("alpha must be in (0,1), got " + fmt_g(config.alpha));
    if (config.assets.empty()) throw ConfigError("no assets configured");
    if (config.periods.k < 1) throw ConfigError("k_periods must be positive");
    for (double g : config.gammas)
        if (!(g >= 0.0 && g <= 1.0))
            throw ConfigError("gamma values must lie in [0,1], got " + fmt_g(g));
    if (need_bounds) {
        if (config.gammas.empty()) throw ConfigError("no gamma values configured");
        if (config.bounds.empty())
            throw ConfigError(config.model == ModelKind::One ? "model one needs cap = lo,hi"
                                                             : "model two needs floor = lo,hi");
        if (config.bounds.size() != 1 && config.bounds.size() != config.periods.k)
            throw ConfigError("expected 1 or " + std::to_string(config.periods.k) +
                              " bound intervals, got " + std::to_string(config.bounds.size()));
    }
}

AssetPanel load_panel(const RunConfig& config, bool with_periods) {
    std::vector<std::string> tickers;
    std::vector<std::vector<ReturnObservation>> series;
    for (const auto& [ticker, path] : config.assets) {
        tickers.push_back(ticker);
        try {
            series.push_back(log_returns(load_prices(path, config.schema)));
        } catch (const DataError& e) {
            throw DataError(ticker + ": " + e.what());
        }
    }
    AssetPanel panel = build_panel(std::move(tickers), std::move(series));
    return with_periods ? partition_periods(std::move(panel), config.periods) : panel;
}

PanelRisk estimate_panel_risk(const AssetPanel& panel, double alpha) {
    PanelRisk risk;
    risk.tickers = panel.tickers;
    for (std::size_t a = 0; a < panel.num_assets(); ++a) {
        const auto& obs = panel.observations[a];
        std::vector<Interval> period_icvar, period_mean;
        std::vector<Interval> pooled;
        pooled.reserve(obs.size());
        for (const auto& o : obs) pooled.push_back(o.interval);
        for (const auto& range : panel.periods) {
            std::vector<Interval> block(pooled.begin() + static_cast<std::ptrdiff_t>(range.begin),
                                        pooled.begin() + static_cast<std::ptrdiff_t>(range.end));
            period_icvar.push_back(icvar(EmpiricalIntervalSample(block), alpha).icvar);
            period_mean.push_back(expected_interval(block));
        }
        risk.period_icvar.push_back(std::move(period_icvar));
        risk.period_mean.push_back(std::move(period_mean));
        risk.total_icvar.push_back(icvar(EmpiricalIntervalSample(pooled), alpha).icvar);
        risk.total_mean.push_back(expected_interval(pooled));
    }
    return risk;
}

ModelOneSpec model_one_inputs(const PanelRisk& risk, double gamma, const std::vector<Interval>& caps) {
    const std::size_t k = risk.period_icvar.empty() ? caps.size() : risk.period_icvar[0].size();
    return ModelOneSpec{GammaThreshold(gamma), broadcast_bounds(caps, k), risk.period_icvar,
                        risk.total_mean};
}

ModelTwoSpec model_two_inputs(const PanelRisk& risk, double gamma, const std::vector<Interval>& floors) {
    const std::size_t k = risk.period_mean.empty() ? floors.size() : risk.period_mean[0].size();
    return ModelTwoSpec{GammaThreshold(gamma), broadcast_bounds(floors, k), risk.period_mean,
                        risk.total_icvar};
}

std::vector<EstimateRow> estimate_report(const AssetPanel& panel, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw AlphaOutOfRange("alpha must be in (0,1), got " + fmt_g(alpha));
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<EstimateRow> rows;
    for (std::size_t a = 0; a < panel.num_assets(); ++a) {
        const auto& obs = panel.observations[a];
        auto make_row = [&](const std::string& label, std::size_t begin, std::size_t end) {
            std::vector<Interval> block;
            std::vector<double> points;
            for (std::size_t t = begin; t < end; ++t) {
                block.push_back(obs[t].interval);
                points.push_back(obs[t].point);
            }
            EstimateRow row;
            row.asset = panel.tickers[a];
            row.period = label;
            row.alpha = alpha;
            try {
                row.estimate = icvar(EmpiricalIntervalSample(std::move(block)), alpha);
            } catch (const std::invalid_argument& e) {
                throw DataError(panel.tickers[a] + " period " + label + ": " + e.what());
            }
            try {
                row.jb = jarque_bera(points).statistic;
            } catch (const std::invalid_argument&) {
                row.jb = nan; // too short or zero variance; the risk numbers still stand
            }
            rows.push_back(std::move(row));
        };
        for (std::size_t p = 0; p < panel.periods.size(); ++p)
            make_row(std::to_string(p + 1), panel.periods[p].begin, panel.periods[p].end);
        make_row("pooled", 0, obs.size());
    }
    return rows;
}

std::string format_estimate_csv(const std::vector<EstimateRow>& rows) {
    std::string out = "asset,period,alpha,ivar_lo,ivar_hi,icvar_lo,icvar_hi,tail_size,jb_statistic\n";
    for (const auto& r : rows) {
        out += r.asset + ',' + r.period + ',' + fmt_g(r.alpha) + ',';
        out += fmt_g12(r.estimate.ivar.lo()) + ',' + fmt_g12(r.estimate.ivar.hi()) + ',';
        out += fmt_g12(r.estimate.icvar.lo()) + ',' + fmt_g12(r.estimate.icvar.hi()) + ',';
        out += std::to_string(r.estimate.tail_size) + ',';
        out += std::isnan(r.jb) ? "nan" : fmt_g6(r.jb);
        out += '\n';
    }
    return out;
}

AllocationTable run_sweep(const AssetPanel& panel, const RunConfig& config) {
    const PanelRisk risk = estimate_panel_risk(panel, config.alpha);
    const std::size_t k = panel.periods.size();

    AllocationTable table;
    table.model = config.model;
    table.tickers = panel.tickers;
    table.bounds = broadcast_bounds(config.bounds, k);

    // One independent solve per gamma; construction and solve both run in
    // the worker since they are pure functions of (risk, gamma).
    std::vector<std::future<std::pair<LpSolution, std::vector<double>>>> jobs;
    for (double gamma : config.gammas) {
        jobs.push_back(std::async(std::launch::async, [&, gamma] {
            const LpProblem problem = config.model == ModelKind::One
                ? build_model1(model_one_inputs(risk, gamma, table.bounds))
                : build_model2(model_two_inputs(risk, gamma, table.bounds));
            return std::make_pair(solve(problem), problem.objective);
        }));
    }

    const auto& objective_intervals =
        config.model == ModelKind::One ? risk.total_mean : risk.total_icvar;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto [sol, objective] = jobs[i].get();
        AllocationRow row;
        row.gamma = config.gammas[i];
        row.status = sol.status;
        if (sol.status == SolveStatus::Optimal) {
            // Re-normalize before any rounding so displayed weights sum to 1.
            double total = 0.0;
            for (double& w : sol.weights) {
                w = std::max(w, 0.0);
                total += w;
            }
            if (total > 0.0)
                for (double& w : sol.weights) w /= total;
            row.weights = sol.weights;
            row.objective = 0.0;
            Interval combined;
            for (std::size_t j = 0; j < row.weights.size(); ++j) {
                row.objective += objective[j] * row.weights[j];
                combined = combined + row.weights[j] * objective_intervals[j];
            }
            row.objective_interval = combined;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string format_allocation_csv(const AllocationTable& table) {
    std::string out = "gamma,status";
    for (const auto& t : table.tickers) out += ',' + t;
    out += ",st_op,st_width\n";
    for (const auto& r : table.rows) {
        out += fmt_g(r.gamma);
        out += ',';
        out += status_text(r.status);
        if (r.status == SolveStatus::Optimal) {
            for (double w : r.weights) out += ',' + detail::format_fixed(w, 4);
            out += ',' + fmt("%.6f", r.objective);
            out += ',' + fmt("%.6f", r.objective_interval.width());
        } else {
            out.append(table.tickers.size() + 2, ',');
        }
        out += '\n';
    }
    return out;
}

std::string format_allocation_pretty(const AllocationTable& table) {
    const bool uniform = std::all_of(table.bounds.begin(), table.bounds.end(),
                                     [&](const Interval& b) { return b == table.bounds[0]; });
    const char* label = table.model == ModelKind::One ? "risk cap" : "return floor";
    std::string out;
    if (uniform) {
        out += std::string(label) + ' ' + bound_text(table.bounds[0]) + " for all " +
               std::to_string(table.bounds.size()) + " periods\n";
    } else {
        for (std::size_t p = 0; p < table.bounds.size(); ++p)
            out += std::string(label) + " period " + std::to_string(p + 1) + ": " +
                   bound_text(table.bounds[p]) + '\n';
    }
    out += '\n';

    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{""};
    header.insert(header.end(), table.tickers.begin(), table.tickers.end());
    header.push_back("ST_OP");
    header.push_back("ST_W");
    header.push_back("gamma");
    header.push_back("status");
    grid.push_back(std::move(header));
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& r = table.rows[i];
        std::vector<std::string> cells{"[" + std::to_string(i + 1) + "]"};
        if (r.status == SolveStatus::Optimal) {
            for (double w : r.weights) cells.push_back(detail::format_fixed(w, 4));
            cells.push_back(detail::format_fixed(r.objective, 4));
            cells.push_back(detail::format_fixed(r.objective_interval.width(), 4));
        } else {
            cells.insert(cells.end(), table.tickers.size() + 2, "-");
        }
        cells.push_back(fmt_g(r.gamma));
        cells.push_back(status_text(r.status));
        grid.push_back(std::move(cells));
    }
    out += render_columns(grid);
    return out;
}

std::vector<JbRow> jb_report(const AssetPanel& panel) {
    std::vector<JbRow> rows;
    for (std::size_t a = 0; a < panel.num_assets(); ++a) {
        std::vector<double> points;
        for (const auto& o : panel.observations[a]) points.push_back(o.point);
        JbRow row;
        row.asset = panel.tickers[a];
        row.n = points.size();
        try {
            row.result = jarque_bera(points);
        } catch (const std::invalid_argument& e) {
            throw DataError(panel.tickers[a] + ": " + e.what());
        }
        row.p_value = std::exp(-row.result.statistic / 2.0); // chi-squared, 2 dof
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_jb_csv(const std::vector<JbRow>& rows) {
    std::string out = "asset,n,jb_statistic,skewness,kurtosis,p_value\n";
    for (const auto& r : rows) {
        out += r.asset + ',' + std::to_string(r.n) + ',';
        out += fmt_g6(r.result.statistic) + ',' + fmt_g6(r.result.skewness) + ',';
        out += fmt_g6(r.result.kurtosis) + ',' + fmt_g6(r.p_value) + '\n';
    }
    return out;
}

std::string run_estimate(const RunConfig& config) {
    validate_config(config, /*need_bounds=*/false);
    const AssetPanel panel = load_panel(config);
    return format_estimate_csv(estimate_report(panel, config.alpha));
}

std::string run_optimize(const RunConfig& config) {
    validate_config(config, /*need_bounds=*/true);
    const AssetPanel panel = load_panel(config);
    const AllocationTable table = run_sweep(panel, config);
    return config.format == OutputFormat::Pretty ? format_allocation_pretty(table)
                                                 : format_allocation_csv(table);
}

std::string run_jb_test(const RunConfig& config) {
    validate_config(config, /*need_bounds=*/false);
    const AssetPanel panel = load_panel(config, /*with_periods=*/false);
    return format_jb_csv(jb_report(panel));
}

} // namespace ivrisk
