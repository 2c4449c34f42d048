#pragma once

#include "ivrisk/interval.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivrisk {

struct ZeroWidthPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Optimistic threshold in [0,1] chosen by the decision maker; larger values
/// mean lower risk aversion and a larger feasible region.
struct GammaThreshold {
    explicit GammaThreshold(double v) : value(v) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("gamma must be in [0,1], got " + std::to_string(v));
    }
    double value;
};

/// Acceptability grade of "interval a is less than interval b":
///   (m(b) - m(a)) / (w(b) + w(a)).
/// Grades <= 0 reject the premise, grades in (0,1) accept it partially, and
/// grades >= 1 accept it absolutely. Both intervals degenerate means the
/// grade is undefined; callers fall back to real comparison.
double gamma_index(const Interval& a, const Interval& b);

/// One real constraint row; the comparison sense is decided by context.
struct LinearRow {
    std::vector<double> coeffs;
    double rhs = 0.0;
};

/// Crisp equivalent of the interval constraint sum(coeffs[i] * x_i) <= cap
/// for x >= 0, as two real rows (both meaning coeffs . x <= rhs):
///   row 0:  sum hi_i x_i <= cap.hi
///   row 1:  sum (m_i - gamma w_i) x_i <= m(cap) + gamma w(cap)
std::array<LinearRow, 2> crisp_leq_rows(const std::vector<Interval>& coeffs,
                                        const Interval& cap, GammaThreshold gamma);

/// Crisp equivalent of sum(coeffs[i] * x_i) >= floor for x >= 0, as two real
/// rows (both meaning coeffs . x >= rhs):
///   row 0:  sum lo_i x_i >= floor.lo
///   row 1:  sum (m_i + gamma w_i) x_i >= m(floor) - gamma w(floor)
std::array<LinearRow, 2> crisp_geq_rows(const std::vector<Interval>& coeffs,
                                        const Interval& floor, GammaThreshold gamma);

enum class Sense { Maximize, Minimize };

/// Real LP in the fixed form used by the solver: inequality rows all mean
/// lhs . x <= rhs, plus equality rows and per-variable lower bounds (always
/// zero for the portfolio models).
struct LpProblem {
    Sense sense = Sense::Maximize;
    std::vector<double> objective;
    std::vector<std::vector<double>> ineq_lhs;
    std::vector<double> ineq_rhs;
    std::vector<std::vector<double>> eq_lhs;
    std::vector<double> eq_rhs;
    std::vector<double> lower_bounds;

    std::size_t num_vars() const { return objective.size(); }

    /// Plain-text dump (objective, then rows with senses) for inspection
    /// independent of any solver.
    std::string dump() const;
};

/// Inputs for the return-maximization model: per-period risk caps ICVaR_0j,
/// the n x k matrix of per-asset per-period ICVaR estimates, and pooled
/// expected returns E(R_i).
struct ModelOneSpec {
    GammaThreshold gamma;
    std::vector<Interval> risk_caps;              ///< k
    std::vector<std::vector<Interval>> estimates; ///< [asset][period], n x k
    std::vector<Interval> expected_returns;       ///< n
};

/// Inputs for the risk-minimization model: per-period return floors R_0j,
/// the n x k matrix of per-period expected returns E(R_ij), and pooled
/// per-asset ICVaR_i.
struct ModelTwoSpec {
    GammaThreshold gamma;
    std::vector<Interval> return_floors;                     ///< k
    std::vector<std::vector<Interval>> expected_period_returns; ///< n x k
    std::vector<Interval> total_icvar;                       ///< n
};

/// Maximize sum x_i m(E(R_i)) subject to the two crisp rows per period for
/// sum x_i ICVaR_ij <= ICVaR_0j, the budget sum x_i = 1, and x >= 0.
LpProblem build_model1(const ModelOneSpec& spec);

/// Minimize sum x_i m(ICVaR_i) subject to the two crisp rows per period for
/// sum x_i E(R_ij) >= R_0j, the budget sum x_i = 1, and x >= 0.
LpProblem build_model2(const ModelTwoSpec& spec);

} // namespace ivrisk
