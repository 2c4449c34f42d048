#pragma once

#include "ivrisk/crisp.hpp"
#include "ivrisk/errors.hpp"
#include "ivrisk/returns.hpp"
#include "ivrisk/risk.hpp"
#include "ivrisk/simplex.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ivrisk {

enum class ModelKind { One, Two };
enum class OutputFormat { Csv, Pretty };

/// Everything a run needs, merged from the config file and CLI flags.
struct RunConfig {
    std::vector<std::pair<std::string, std::string>> assets; ///< ticker -> csv path, insertion order
    CsvSchema schema;
    PeriodSpec periods;
    double alpha = 0.05;
    ModelKind model = ModelKind::One;
    std::vector<double> gammas;
    std::vector<Interval> bounds; ///< risk caps (model one) or return floors (model two); size 1 broadcasts
    OutputFormat format = OutputFormat::Csv;
    std::string out_path; ///< empty -> stdout
};

/// Flat `key = value` file; '#' comments and blank lines ignored. Unknown
/// keys are rejected. Asset paths are resolved relative to the config file.
RunConfig load_config(const std::string& path);

/// Cheap checks that need no file IO (alpha range, gamma range, bound
/// count vs k, non-empty asset list when `need_assets`).
void validate_config(const RunConfig& config, bool need_bounds);

/// Loads every asset file, converts to log returns and aligns on common
/// dates. Periods are attached unless `with_periods` is false (the normality
/// report works on the pooled series and must not fail on short histories).
AssetPanel load_panel(const RunConfig& config, bool with_periods = true);

/// Risk inputs shared by both models, estimated once per panel.
struct PanelRisk {
    std::vector<std::string> tickers;
    std::vector<std::vector<Interval>> period_icvar; ///< [asset][period]
    std::vector<std::vector<Interval>> period_mean;  ///< [asset][period] expected interval return
    std::vector<Interval> total_icvar;               ///< pooled over all periods
    std::vector<Interval> total_mean;
};
PanelRisk estimate_panel_risk(const AssetPanel& panel, double alpha);

ModelOneSpec model_one_inputs(const PanelRisk& risk, double gamma, const std::vector<Interval>& caps);
ModelTwoSpec model_two_inputs(const PanelRisk& risk, double gamma, const std::vector<Interval>& floors);

/// One per-asset, per-period risk report line. `jb` is NaN when the period
/// is too short (< 4 points) or has zero variance.
struct EstimateRow {
    std::string asset;
    std::string period; ///< "1".."k" or "pooled"
    double alpha = 0.05;
    RiskEstimate estimate;
    double jb = 0.0;
};
std::vector<EstimateRow> estimate_report(const AssetPanel& panel, double alpha);
std::string format_estimate_csv(const std::vector<EstimateRow>& rows);

struct AllocationRow {
    double gamma = 0.0;
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> weights; ///< renormalized; empty unless Optimal
    double objective = 0.0;      ///< midpoint the LP optimized
    Interval objective_interval; ///< full interval combination; its width is a
                                 ///< secondary attribute left to the user
};
struct AllocationTable {
    ModelKind model = ModelKind::One;
    std::vector<std::string> tickers;
    std::vector<Interval> bounds; ///< after broadcast, one per period
    std::vector<AllocationRow> rows;
};

/// Solves the model once per gamma (solves run concurrently; row order
/// follows config.gammas). Infeasible gammas become flagged rows.
AllocationTable run_sweep(const AssetPanel& panel, const RunConfig& config);

std::string format_allocation_csv(const AllocationTable& table);
std::string format_allocation_pretty(const AllocationTable& table);

struct JbRow {
    std::string asset;
    std::size_t n = 0;
    JarqueBeraResult result;
    double p_value = 0.0; ///< chi-squared(2) tail: exp(-JB/2)
};
std::vector<JbRow> jb_report(const AssetPanel& panel);
std::string format_jb_csv(const std::vector<JbRow>& rows);

/// Subcommand drivers: produce the full output text for estimate / optimize /
/// jb-test. Writing to config.out_path (or stdout) is the caller's job.
std::string run_estimate(const RunConfig& config);
std::string run_optimize(const RunConfig& config);
std::string run_jb_test(const RunConfig& config);

} // namespace ivrisk
