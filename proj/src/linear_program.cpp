#include "probarg/linear_program.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "probarg/errors.hpp"

namespace probarg {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kPhase1Eps = 1e-8;

// Dense tableau.  Column layout: [structural | slack/surplus | artificial],
// final entry of each row is the rhs.  Bland's rule everywhere: entering =
// lowest-index column with negative reduced cost, leaving = lowest basic
// variable index among minimum-ratio ties.  That forbids cycling and makes
// the solve deterministic.
struct Tableau {
    int ncols = 0;                           // excluding rhs
    std::vector<std::vector<double>> rows;   // m x (ncols + 1)
    std::vector<int> basis;                  // basic variable per row
    int artificial_begin = 0;                // first artificial column

    double rhs(int i) const { return rows[i][ncols]; }

    void pivot(int r, int c) {
        double p = rows[r][c];
        for (double& v : rows[r]) v /= p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r) continue;
            double f = rows[i][c];
            if (f == 0.0) continue;
            for (int j = 0; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
            rows[i][c] = 0.0;                 // exact after elimination
        }
        basis[r] = c;
    }

    // Minimize `cost` (size ncols) starting from the current basis.
    // skip_artificials excludes artificial columns from entering.
    // Returns false on unboundedness.
    bool iterate(const std::vector<double>& cost, bool skip_artificials) {
        const int m = static_cast<int>(rows.size());
        while (true) {
            // Simplex multipliers y_i = cost of the basic variable of row i.
            int entering = -1;
            for (int j = 0; j < ncols && entering == -1; ++j) {
                if (skip_artificials && j >= artificial_begin) break;
                bool basic = false;
                for (int i = 0; i < m; ++i)
                    if (basis[i] == j) { basic = true; break; }
                if (basic) continue;
                double rc = cost[j];
                for (int i = 0; i < m; ++i)
                    if (cost[basis[i]] != 0.0) rc -= cost[basis[i]] * rows[i][j];
                if (rc < -kCostEps) entering = j;
            }
            if (entering == -1) return true;   // optimal

            int leaving = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (rows[i][entering] > kPivotEps) {
                    double ratio = rhs(i) / rows[i][entering];
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (leaving == -1 || basis[i] < basis[leaving])))
                    {
                        best_ratio = ratio;
                        leaving = i;
                    }
                }
            }
            if (leaving == -1) return false;   // unbounded
            pivot(leaving, entering);
        }
    }
};

} // namespace

LpResult solve_lp(const LpProblem& problem) {
    const int n = problem.num_vars;
    for (int i = 0; i < n; ++i)
        if (!problem.lower.empty() && problem.lower[i] != 0.0)
            throw Error("solve_lp requires zero lower bounds");

    // Materialize upper bounds as rows, then bring everything to
    // "<= / >= / = with rhs >= 0" form.
    struct NormRow {
        std::vector<double> coeffs;
        Cmp cmp;
        double rhs;
    };
    std::vector<NormRow> norm;
    for (const auto& row : problem.rows)
        norm.push_back({row.coeffs, row.cmp, row.rhs});
    for (int i = 0; i < n; ++i) {
        double u = problem.upper.empty() ? std::numeric_limits<double>::infinity()
                                         : problem.upper[i];
        if (std::isfinite(u)) {
            std::vector<double> c(n, 0.0);
            c[i] = 1.0;
            norm.push_back({std::move(c), Cmp::LessEq, u});
        }
    }
    for (auto& row : norm) {
        if (row.rhs < 0.0) {
            for (double& v : row.coeffs) v = -v;
            row.rhs = -row.rhs;
            row.cmp = row.cmp == Cmp::LessEq ? Cmp::GreaterEq
                    : row.cmp == Cmp::GreaterEq ? Cmp::LessEq : Cmp::Eq;
        }
    }

    const int m = static_cast<int>(norm.size());
    int num_slack = 0;
    for (const auto& row : norm)
        if (row.cmp != Cmp::Eq) ++num_slack;

    // Every row gets an artificial so the initial basis is trivially the
    // identity; <= rows could start from their slack instead, but uniformity
    // keeps the construction simple.
    Tableau t;
    t.artificial_begin = n + num_slack;
    t.ncols = n + num_slack + m;
    t.rows.assign(m, std::vector<double>(t.ncols + 1, 0.0));
    t.basis.assign(m, -1);

    std::vector<double> phase1_cost(t.ncols, 0.0);
    int slack_at = n;
    for (int i = 0; i < m; ++i) {
        auto& r = t.rows[i];
        for (int j = 0; j < n; ++j) r[j] = norm[i].coeffs[j];
        if (norm[i].cmp == Cmp::LessEq) r[slack_at++] = 1.0;
        else if (norm[i].cmp == Cmp::GreaterEq) r[slack_at++] = -1.0;
        r[t.artificial_begin + i] = 1.0;
        r[t.ncols] = norm[i].rhs;
        t.basis[i] = t.artificial_begin + i;
        phase1_cost[t.artificial_begin + i] = 1.0;
    }

    LpResult result;
    auto extract_x = [&] {
        std::vector<double> x(n, 0.0);
        for (size_t i = 0; i < t.basis.size(); ++i)
            if (t.basis[i] < n) x[t.basis[i]] = t.rhs(static_cast<int>(i));
        return x;
    };

    // Phase 1: minimize the artificial sum.
    t.iterate(phase1_cost, /*skip_artificials=*/false);
    double violation = 0;
    for (int i = 0; i < m; ++i)
        if (t.basis[i] >= t.artificial_begin) violation += t.rhs(i);
    result.infeasibility = std::max(0.0, violation);
    if (result.infeasibility > kPhase1Eps) {
        result.status = LpStatus::Infeasible;
        result.x = extract_x();
        return result;
    }

    // Purge artificials from the basis (degenerate pivots; rows that cannot
    // pivot are linearly dependent and dropped) so phase 2 cannot push one
    // positive again.
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
        if (t.basis[i] < t.artificial_begin) continue;
        int col = -1;
        for (int j = 0; j < t.artificial_begin && col == -1; ++j)
            if (std::abs(t.rows[i][j]) > kPivotEps) col = j;
        if (col != -1) {
            t.pivot(i, col);
        } else {
            t.rows.erase(t.rows.begin() + i);
            t.basis.erase(t.basis.begin() + i);
        }
    }

    // Phase 2.
    std::vector<double> cost(t.ncols, 0.0);
    for (int j = 0; j < n; ++j) {
        double c = problem.objective.empty() ? 0.0 : problem.objective[j];
        cost[j] = problem.maximize ? -c : c;
    }
    if (!t.iterate(cost, /*skip_artificials=*/true)) {
        result.status = LpStatus::Unbounded;
        result.x = extract_x();
        return result;
    }

    result.status = LpStatus::Optimal;
    result.x = extract_x();
    result.objective = 0;
    for (int j = 0; j < n; ++j)
        result.objective += (problem.objective.empty() ? 0.0 : problem.objective[j]) * result.x[j];
    return result;
}

} // namespace probarg
