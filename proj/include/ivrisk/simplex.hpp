#pragma once

#include "ivrisk/crisp.hpp"
#include "ivrisk/errors.hpp"

#include <stdexcept>
#include <vector>

namespace ivrisk {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

/// Solver output. For Optimal solutions the weights satisfy every inequality
/// row to within 1e-9 (residual = rhs - lhs.x >= -1e-9), every equality row
/// to within +/-1e-9, and the bounds to within -1e-12.
struct LpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<double> weights;
    double objective = 0.0;
    std::vector<double> ineq_residuals; ///< rhs - lhs.x per inequality row
    std::vector<double> eq_residuals;   ///< lhs.x - rhs per equality row
};

/// Pivot entries fell below 1e-11 with no admissible alternative under
/// Bland's rule; distinct from Infeasible.
struct NumericalBreakdown : SolverError {
    using SolverError::SolverError;
};

struct TooManyAssets : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dense two-phase simplex with Bland's anti-cycling rule. Infeasibility is
/// certified by a positive phase-1 optimum, unboundedness by an improving
/// ray. Identical problems yield bit-identical solutions.
LpSolution solve(const LpProblem& problem);

/// Brute-force verification oracle: enumerates every weight vector on the
/// simplex lattice with the given spacing and returns the best feasible one.
/// Requires the budget equality sum(x) = 1 in the problem and at most 4
/// variables. Exhaustive, so only suitable for tests.
LpSolution grid_oracle(const LpProblem& problem, double step);

} // namespace ivrisk
