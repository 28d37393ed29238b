// Small dense LP solver: two-phase primal simplex with Bland's rule.
//
// Sized for this library's needs (tens of variables, ~a hundred rows), so
// clarity and determinism win over sparsity tricks.  Bland's rule guarantees
// termination on degenerate instances and makes every answer reproducible.
// Variables carry explicit [lower, upper] bounds; lower bounds must be 0
// (that is all the callers here ever need).
#ifndef PROBARG_LINEAR_PROGRAM_HPP
#define PROBARG_LINEAR_PROGRAM_HPP

#include <vector>

namespace probarg {

enum class Cmp { LessEq, GreaterEq, Eq };

struct LpRow {
    std::vector<double> coeffs;   // dense, size num_vars
    Cmp cmp = Cmp::LessEq;
    double rhs = 0;
};

struct LpProblem {
    int num_vars = 0;
    std::vector<double> objective;   // size num_vars; empty = all zeros
    bool maximize = false;
    std::vector<LpRow> rows;
    std::vector<double> lower;       // size num_vars; must be all 0
    std::vector<double> upper;       // size num_vars; may be +inf
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    // Optimal: an optimal point.  Infeasible: the phase-1 point (where the
    // total constraint violation is minimal).
    std::vector<double> x;
    double objective = 0;
    double infeasibility = 0;        // phase-1 optimum
};

LpResult solve_lp(const LpProblem& problem);

} // namespace probarg

#endif
