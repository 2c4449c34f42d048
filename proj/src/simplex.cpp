#include "ivrisk/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

namespace ivrisk {

namespace {

constexpr double kFeasTol = 1e-9;  // constraint / phase-1 feasibility
constexpr double kOptTol = 1e-9;   // reduced-cost threshold
constexpr double kPivotTol = 1e-11;

void check_problem(const LpProblem& p) {
    const std::size_t n = p.objective.size();
    if (n == 0) throw std::invalid_argument("lp: empty objective");
    if (p.ineq_lhs.size() != p.ineq_rhs.size())
        throw DimensionMismatch("lp: inequality lhs/rhs count mismatch");
    if (p.eq_lhs.size() != p.eq_rhs.size())
        throw DimensionMismatch("lp: equality lhs/rhs count mismatch");
    for (const auto& row : p.ineq_lhs)
        if (row.size() != n) throw DimensionMismatch("lp: inequality row width mismatch");
    for (const auto& row : p.eq_lhs)
        if (row.size() != n) throw DimensionMismatch("lp: equality row width mismatch");
    if (!p.lower_bounds.empty() && p.lower_bounds.size() != n)
        throw DimensionMismatch("lp: bound count mismatch");
    for (double b : p.lower_bounds)
        if (b != 0.0) throw std::invalid_argument("lp: only zero lower bounds are supported");
    auto finite = [](double v) { return std::isfinite(v); };
    for (double v : p.objective)
        if (!finite(v)) throw std::invalid_argument("lp: non-finite objective coefficient");
    for (const auto& row : p.ineq_lhs)
        for (double v : row)
            if (!finite(v)) throw std::invalid_argument("lp: non-finite constraint coefficient");
    for (const auto& row : p.eq_lhs)
        for (double v : row)
            if (!finite(v)) throw std::invalid_argument("lp: non-finite constraint coefficient");
    for (double v : p.ineq_rhs)
        if (!finite(v)) throw std::invalid_argument("lp: non-finite rhs");
    for (double v : p.eq_rhs)
        if (!finite(v)) throw std::invalid_argument("lp: non-finite rhs");
}

void fill_residuals(const LpProblem& p, LpSolution& sol) {
    sol.ineq_residuals.clear();
    sol.eq_residuals.clear();
    for (std::size_t r = 0; r < p.ineq_lhs.size(); ++r) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < p.objective.size(); ++j)
            lhs += p.ineq_lhs[r][j] * sol.weights[j];
        sol.ineq_residuals.push_back(p.ineq_rhs[r] - lhs);
    }
    for (std::size_t r = 0; r < p.eq_lhs.size(); ++r) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < p.objective.size(); ++j)
            lhs += p.eq_lhs[r][j] * sol.weights[j];
        sol.eq_residuals.push_back(lhs - p.eq_rhs[r]);
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Dense tableau. Rows 0..m-1 are constraints; `obj` and `art` are the
/// phase-2 and phase-1 reduced-cost rows kept in sync by pivoting. The last
/// column of each row is the rhs.
class Tableau {
public:
    Tableau(const LpProblem& p, std::size_t n) : n_struct_(n) {
        // rows: inequalities get a slack; negative-rhs rows and all
        // equalities get an artificial.
        const std::size_t m = p.ineq_lhs.size() + p.eq_lhs.size();
        std::vector<std::vector<double>> body;
        std::vector<double> rhs;
        std::vector<int> needs_art(m, 0);
        n_slack_ = p.ineq_lhs.size();

        for (std::size_t r = 0; r < p.ineq_lhs.size(); ++r) {
            std::vector<double> row(n_struct_ + n_slack_, 0.0);
            double b = p.ineq_rhs[r];
            double sign = (b < 0.0) ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_struct_; ++j) row[j] = sign * p.ineq_lhs[r][j];
            row[n_struct_ + r] = sign; // slack (surplus when the row was flipped)
            body.push_back(std::move(row));
            rhs.push_back(sign * b);
            needs_art[r] = (b < 0.0) ? 1 : 0;
        }
        for (std::size_t r = 0; r < p.eq_lhs.size(); ++r) {
            std::vector<double> row(n_struct_ + n_slack_, 0.0);
            double b = p.eq_rhs[r];
            double sign = (b < 0.0) ? -1.0 : 1.0;
            for (std::size_t j = 0; j < n_struct_; ++j) row[j] = sign * p.eq_lhs[r][j];
            body.push_back(std::move(row));
            rhs.push_back(sign * b);
            needs_art[p.ineq_lhs.size() + r] = 1;
        }

        art_start_ = n_struct_ + n_slack_;
        std::size_t n_art = 0;
        for (int f : needs_art) n_art += static_cast<std::size_t>(f);
        n_cols_ = art_start_ + n_art;

        rows_.assign(m, std::vector<double>(n_cols_ + 1, 0.0));
        basis_.assign(m, 0);
        std::size_t art = art_start_;
        for (std::size_t r = 0; r < m; ++r) {
            std::copy(body[r].begin(), body[r].end(), rows_[r].begin());
            rows_[r][n_cols_] = rhs[r];
            if (needs_art[r]) {
                rows_[r][art] = 1.0;
                basis_[r] = art++;
            } else {
                basis_[r] = n_struct_ + r; // the slack
            }
        }

        // Phase-2 reduced costs: minimization coefficients; every initially
        // basic variable has zero phase-2 cost, so no pricing-out is needed.
        obj_.assign(n_cols_ + 1, 0.0);
        for (std::size_t j = 0; j < n_struct_; ++j) obj_[j] = p.sense == Sense::Maximize ? -p.objective[j] : p.objective[j];

        // Phase-1 reduced costs: cost 1 on each artificial, priced out
        // against the artificial-basic rows.
        art_.assign(n_cols_ + 1, 0.0);
        for (std::size_t j = art_start_; j < n_cols_; ++j) art_[j] = 1.0;
        for (std::size_t r = 0; r < m; ++r)
            if (basis_[r] >= art_start_)
                for (std::size_t j = 0; j <= n_cols_; ++j) art_[j] -= rows_[r][j];
        // keep artificial columns exactly zero in their own cost row
        for (std::size_t j = art_start_; j < n_cols_; ++j) art_[j] = 0.0;
    }

    std::size_t num_rows() const { return rows_.size(); }
    std::size_t art_start() const { return art_start_; }
    std::size_t basis(std::size_t r) const { return basis_[r]; }
    double phase1_value() const { return -art_[n_cols_]; }

    void pivot(std::size_t r, std::size_t s) {
        auto& prow = rows_[r];
        const double piv = prow[s];
        for (double& v : prow) v /= piv;
        prow[s] = 1.0;
        auto eliminate = [&](std::vector<double>& row) {
            const double f = row[s];
            if (f == 0.0) return;
            for (std::size_t j = 0; j <= n_cols_; ++j) row[j] -= f * prow[j];
            row[s] = 0.0;
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(obj_);
        eliminate(art_);
        basis_[r] = s;
    }

    /// Runs Bland's rule on the given cost row until no column prices out
    /// negative. Artificial columns are never allowed to enter. Returns
    /// false when an improving column admits no positive pivot at all
    /// (unbounded ray); throws NumericalBreakdown when the only positive
    /// pivots are below tolerance or the iteration cap is reached.
    bool iterate(std::vector<double>& cost) {
        const std::size_t iter_cap = 400 * (rows_.size() + n_cols_ + 1);
        for (std::size_t iter = 0; iter <= iter_cap; ++iter) {
            std::size_t enter = n_cols_;
            for (std::size_t j = 0; j < art_start_; ++j)
                if (cost[j] < -kOptTol) { enter = j; break; }
            if (enter == n_cols_) return true;

            std::size_t leave = rows_.size();
            double best_ratio = std::numeric_limits<double>::infinity();
            bool saw_tiny_positive = false;
            for (std::size_t r = 0; r < rows_.size(); ++r) {
                const double a = rows_[r][enter];
                if (a <= kPivotTol) {
                    if (a > 0.0) saw_tiny_positive = true;
                    continue;
                }
                const double ratio = rows_[r][n_cols_] / a;
                if (ratio < best_ratio - kFeasTol ||
                    (ratio < best_ratio + kFeasTol &&
                     (leave == rows_.size() || basis_[r] < basis_[leave]))) {
                    best_ratio = std::min(best_ratio, ratio);
                    leave = r;
                }
            }
            if (leave == rows_.size()) {
                if (saw_tiny_positive)
                    throw NumericalBreakdown("simplex: pivot candidates below tolerance");
                return false;
            }
            pivot(leave, enter);
        }
        throw NumericalBreakdown("simplex: iteration limit exceeded");
    }

    bool run_phase1() {
        iterate(art_); // bounded below by zero, so an unbounded ray cannot occur
        if (phase1_value() > kFeasTol) return false;

        // Drive leftover artificials out of the basis; rows that admit no
        // pivot are redundant and stay inert at rhs ~ 0.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < art_start_) continue;
            for (std::size_t j = 0; j < art_start_; ++j) {
                if (std::abs(rows_[r][j]) > kPivotTol) {
                    pivot(r, j);
                    break;
                }
            }
        }
        return true;
    }

    bool run_phase2() { return iterate(obj_); }

    std::vector<double> extract(std::size_t n) const {
        std::vector<double> x(n, 0.0);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (basis_[r] < n) x[basis_[r]] = rows_[r][n_cols_];
        return x;
    }

private:
    std::size_t n_struct_ = 0;
    std::size_t n_slack_ = 0;
    std::size_t art_start_ = 0;
    std::size_t n_cols_ = 0;
    std::vector<std::vector<double>> rows_;
    std::vector<double> obj_;
    std::vector<double> art_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpSolution solve(const LpProblem& problem) {
    check_problem(problem);
    const std::size_t n = problem.objective.size();

    Tableau tab(problem, n);
    LpSolution sol;
    if (!tab.run_phase1()) {
        sol.status = SolveStatus::Infeasible;
        return sol;
    }
    if (!tab.run_phase2()) {
        sol.status = SolveStatus::Unbounded;
        return sol;
    }
    sol.status = SolveStatus::Optimal;
    sol.weights = tab.extract(n);
    for (double& w : sol.weights)
        if (w < 0.0 && w > -kFeasTol) w = 0.0; // scrub pivot dust off the bounds
    sol.objective = dot(problem.objective, sol.weights);
    fill_residuals(problem, sol);
    return sol;
}

LpSolution grid_oracle(const LpProblem& problem, double step) {
    check_problem(problem);
    const std::size_t n = problem.objective.size();
    if (n > 4) throw TooManyAssets("grid_oracle: supports at most 4 variables");
    if (!(step > 0.0) || step > 1.0)
        throw std::invalid_argument("grid_oracle: step must lie in (0, 1]");
    const long long m = std::llround(1.0 / step);
    if (m < 1 || std::abs(static_cast<double>(m) * step - 1.0) > 1e-9)
        throw std::invalid_argument("grid_oracle: step must divide 1 evenly");

    // The enumeration lives on the unit simplex, so the problem must pin the
    // weights there via the budget equality.
    bool has_budget = false;
    for (std::size_t r = 0; r < problem.eq_lhs.size(); ++r) {
        bool all_one = true;
        for (double v : problem.eq_lhs[r]) all_one = all_one && std::abs(v - 1.0) <= 1e-12;
        if (all_one && std::abs(problem.eq_rhs[r] - 1.0) <= 1e-12) has_budget = true;
    }
    if (!has_budget)
        throw std::invalid_argument("grid_oracle: problem lacks the budget equality sum(x) = 1");

    const double denom = static_cast<double>(m);
    std::vector<double> x(n, 0.0);
    LpSolution best;
    best.status = SolveStatus::Infeasible;

    auto feasible = [&]() {
        for (std::size_t r = 0; r < problem.ineq_lhs.size(); ++r)
            if (dot(problem.ineq_lhs[r], x) > problem.ineq_rhs[r] + kFeasTol) return false;
        for (std::size_t r = 0; r < problem.eq_lhs.size(); ++r)
            if (std::abs(dot(problem.eq_lhs[r], x) - problem.eq_rhs[r]) > kFeasTol) return false;
        return true;
    };

    auto consider = [&]() {
        if (!feasible()) return;
        const double obj = dot(problem.objective, x);
        const bool better = best.status != SolveStatus::Optimal ||
                            (problem.sense == Sense::Maximize ? obj > best.objective
                                                              : obj < best.objective);
        if (better) {
            best.status = SolveStatus::Optimal;
            best.weights = x;
            best.objective = obj;
        }
    };

    // Lexicographic walk over all compositions of m into n parts.
    auto recurse = [&](auto&& self, std::size_t idx, long long remaining) -> void {
        if (idx + 1 == n) {
            x[idx] = static_cast<double>(remaining) / denom;
            consider();
            return;
        }
        for (long long c = 0; c <= remaining; ++c) {
            x[idx] = static_cast<double>(c) / denom;
            self(self, idx + 1, remaining - c);
        }
    };
    recurse(recurse, 0, m);

    if (best.status == SolveStatus::Optimal) fill_residuals(problem, best);
    return best;
}

} // namespace ivrisk
