#include "ivrisk/crisp.hpp"

#include <cstdio>
#include <sstream>

namespace ivrisk {

double gamma_index(const Interval& a, const Interval& b) {
    const double den = b.width() + a.width();
    if (den <= 0.0)
        throw ZeroWidthPair("gamma_index: both intervals degenerate, "
                            "fall back to real comparison");
    return (b.mean() - a.mean()) / den;
}

std::array<LinearRow, 2> crisp_leq_rows(const std::vector<Interval>& coeffs,
                                        const Interval& cap, GammaThreshold gamma) {
    const double g = gamma.value;
    LinearRow endpoint, threshold;
    endpoint.coeffs.reserve(coeffs.size());
    threshold.coeffs.reserve(coeffs.size());
    for (const Interval& c : coeffs) {
        endpoint.coeffs.push_back(c.hi());
        threshold.coeffs.push_back(c.mean() - g * c.width());
    }
    endpoint.rhs = cap.hi();
    threshold.rhs = cap.mean() + g * cap.width();
    return {endpoint, threshold};
}

std::array<LinearRow, 2> crisp_geq_rows(const std::vector<Interval>& coeffs,
                                        const Interval& floor, GammaThreshold gamma) {
    const double g = gamma.value;
    LinearRow endpoint, threshold;
    endpoint.coeffs.reserve(coeffs.size());
    threshold.coeffs.reserve(coeffs.size());
    for (const Interval& c : coeffs) {
        endpoint.coeffs.push_back(c.lo());
        threshold.coeffs.push_back(c.mean() + g * c.width());
    }
    endpoint.rhs = floor.lo();
    threshold.rhs = floor.mean() - g * floor.width();
    return {endpoint, threshold};
}

namespace {

// Column j of the n x k estimate matrix, one interval per asset.
std::vector<Interval> period_column(const std::vector<std::vector<Interval>>& matrix,
                                    std::size_t j) {
    std::vector<Interval> col;
    col.reserve(matrix.size());
    for (const auto& row : matrix) col.push_back(row[j]);
    return col;
}

void check_matrix(const std::vector<std::vector<Interval>>& matrix, std::size_t n,
                  std::size_t k, const char* what) {
    if (n == 0 || k == 0)
        throw DimensionMismatch(std::string(what) + ": need at least one asset and one period");
    if (matrix.size() != n)
        throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(n) +
                                " asset rows, got " + std::to_string(matrix.size()));
    for (const auto& row : matrix)
        if (row.size() != k)
            throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(k) +
                                    " periods per asset, got " + std::to_string(row.size()));
}

void append_budget_and_bounds(LpProblem& p, std::size_t n) {
    p.eq_lhs.push_back(std::vector<double>(n, 1.0));
    p.eq_rhs.push_back(1.0);
    p.lower_bounds.assign(n, 0.0);
}

} // namespace

LpProblem build_model1(const ModelOneSpec& spec) {
    const std::size_t n = spec.expected_returns.size();
    const std::size_t k = spec.risk_caps.size();
    check_matrix(spec.estimates, n, k, "build_model1");

    LpProblem p;
    p.sense = Sense::Maximize;
    p.objective.reserve(n);
    for (const Interval& r : spec.expected_returns) p.objective.push_back(r.mean());

    for (std::size_t j = 0; j < k; ++j) {
        const auto rows = crisp_leq_rows(period_column(spec.estimates, j),
                                         spec.risk_caps[j], spec.gamma);
        for (const auto& row : rows) {
            p.ineq_lhs.push_back(row.coeffs);
            p.ineq_rhs.push_back(row.rhs);
        }
    }
    append_budget_and_bounds(p, n);
    return p;
}

LpProblem build_model2(const ModelTwoSpec& spec) {
    const std::size_t n = spec.total_icvar.size();
    const std::size_t k = spec.return_floors.size();
    check_matrix(spec.expected_period_returns, n, k, "build_model2");

    LpProblem p;
    p.sense = Sense::Minimize;
    p.objective.reserve(n);
    for (const Interval& r : spec.total_icvar) p.objective.push_back(r.mean());

    for (std::size_t j = 0; j < k; ++j) {
        const auto rows = crisp_geq_rows(period_column(spec.expected_period_returns, j),
                                         spec.return_floors[j], spec.gamma);
        // Normalize >= rows into the problem's <= convention.
        for (const auto& row : rows) {
            std::vector<double> neg(row.coeffs.size());
            for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -row.coeffs[i];
            p.ineq_lhs.push_back(std::move(neg));
            p.ineq_rhs.push_back(-row.rhs);
        }
    }
    append_budget_and_bounds(p, n);
    return p;
}

std::string LpProblem::dump() const {
    std::ostringstream os;
    auto row_text = [](const std::vector<double>& coeffs) {
        std::string s;
        char buf[48];
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%s%.12g x%zu", i ? " + " : "", coeffs[i], i);
            s += buf;
        }
        return s;
    };
    os << (sense == Sense::Maximize ? "maximize" : "minimize") << "\n  "
       << row_text(objective) << "\nsubject to\n";
    char buf[48];
    for (std::size_t r = 0; r < ineq_lhs.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.12g", ineq_rhs[r]);
        os << "  [" << r << "] " << row_text(ineq_lhs[r]) << " <= " << buf << "\n";
    }
    for (std::size_t r = 0; r < eq_lhs.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.12g", eq_rhs[r]);
        os << "  [eq " << r << "] " << row_text(eq_lhs[r]) << " = " << buf << "\n";
    }
    os << "  x >= 0\n";
    return os.str();
}

} // namespace ivrisk
