// ivrisk command-line front end: estimate interval risk measures from OHLC
// histories, solve the portfolio models over a gamma sweep, or run the
// normality diagnostic. See README.md for config and flag reference.

#include "ivrisk/report.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 success (infeasible sweep rows included), 2 configuration
// error, 3 data error, 4 solver numerical breakdown.
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitSolver = 4;

struct Cli {
    std::string config_path;
    std::vector<std::string> assets; // TICKER=path
    int model = 0;                   // 0 = not set
    double alpha = -1.0;             // <0 = not set
    std::string gamma_csv;
    std::vector<std::string> caps;
    std::vector<std::string> floors;
    long k = 0; // 0 = not set
    std::string out_path;
    std::string format;
};

// Folds the CLI flags over the config-file values; flags win.
ivrisk::RunConfig merge(const Cli& cli) {
    ivrisk::RunConfig cfg;
    if (!cli.config_path.empty()) cfg = ivrisk::load_config(cli.config_path);
    if (!cli.assets.empty()) {
        cfg.assets.clear();
        for (const auto& item : cli.assets) {
            const auto sep = item.find('=');
            if (sep == std::string::npos)
                throw ivrisk::ConfigError("--asset expects TICKER=path, got '" + item + "'");
            cfg.assets.emplace_back(item.substr(0, sep), item.substr(sep + 1));
        }
    }
    if (cli.model != 0)
        cfg.model = cli.model == 1 ? ivrisk::ModelKind::One : ivrisk::ModelKind::Two;
    if (cli.alpha >= 0.0) cfg.alpha = cli.alpha;
    if (!cli.gamma_csv.empty()) {
        cfg.gammas.clear();
        std::string item;
        std::istringstream src(cli.gamma_csv);
        while (std::getline(src, item, ',')) {
            try {
                cfg.gammas.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ivrisk::ConfigError("--gamma expects a comma-separated list of numbers");
            }
        }
    }
    const auto& bound_flags = cli.caps.empty() ? cli.floors : cli.caps;
    if (!cli.caps.empty() && !cli.floors.empty())
        throw ivrisk::ConfigError("give either --cap or --floor, not both");
    if (!bound_flags.empty()) {
        cfg.bounds.clear();
        for (const auto& item : bound_flags) {
            const auto sep = item.find(',');
            if (sep == std::string::npos)
                throw ivrisk::ConfigError("bounds expect lo,hi, got '" + item + "'");
            double lo = 0.0, hi = 0.0;
            try {
                lo = std::stod(item.substr(0, sep));
                hi = std::stod(item.substr(sep + 1));
            } catch (const std::exception&) {
                throw ivrisk::ConfigError("bounds expect lo,hi numbers, got '" + item + "'");
            }
            cfg.bounds.emplace_back(lo, hi); // Interval validates lo <= hi
        }
    }
    if (cli.k > 0) cfg.periods.k = static_cast<std::size_t>(cli.k);
    if (!cli.out_path.empty()) cfg.out_path = cli.out_path;
    if (!cli.format.empty())
        cfg.format = cli.format == "pretty" ? ivrisk::OutputFormat::Pretty
                                            : ivrisk::OutputFormat::Csv;
    return cfg;
}

void emit(const ivrisk::RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw ivrisk::DataError("cannot open output file: " + cfg.out_path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw ivrisk::DataError("write failed: " + cfg.out_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval-valued VaR/CVaR estimation and portfolio selection"};
    app.require_subcommand(1);

    Cli cli;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", cli.config_path, "config file (flat key = value)");
        cmd->add_option("--asset", cli.assets, "asset as TICKER=path (repeatable)");
        cmd->add_option("--alpha", cli.alpha, "tail probability in (0,1)");
        cmd->add_option("--k", cli.k, "number of evaluation periods");
        cmd->add_option("--out", cli.out_path, "output path (default stdout)");
        cmd->add_option("--format", cli.format, "csv or pretty")
            ->check(CLI::IsMember({"csv", "pretty"}));
    };

    CLI::App* estimate = app.add_subcommand("estimate", "per-asset, per-period IVaR/ICVaR report");
    add_common(estimate);

    CLI::App* optimize = app.add_subcommand("optimize", "solve a portfolio model over a gamma sweep");
    add_common(optimize);
    optimize->add_option("--model", cli.model, "1 = max return, 2 = min risk")
        ->check(CLI::IsMember({1, 2}));
    optimize->add_option("--gamma", cli.gamma_csv, "comma-separated gamma sweep");
    optimize->add_option("--cap", cli.caps, "per-period risk cap lo,hi (repeatable)");
    optimize->add_option("--floor", cli.floors, "per-period return floor lo,hi (repeatable)");

    CLI::App* jb = app.add_subcommand("jb-test", "Jarque-Bera normality report on point returns");
    add_common(jb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the usage message
        return kExitConfig;
    }

    try {
        const ivrisk::RunConfig cfg = merge(cli);
        std::string text;
        if (estimate->parsed()) text = ivrisk::run_estimate(cfg);
        else if (optimize->parsed()) text = ivrisk::run_optimize(cfg);
        else text = ivrisk::run_jb_test(cfg);
        emit(cfg, text);
        return 0;
    } catch (const ivrisk::NumericalBreakdown& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const ivrisk::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ivrisk::DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitData;
    } catch (const ivrisk::SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
