#include "probarg/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "probarg/constraints.hpp"
#include "probarg/errors.hpp"
#include "probarg/linear_program.hpp"
#include "probarg/sampling.hpp"

namespace probarg {

namespace {

constexpr double kMuFinal = 1e-13;      // sqrt(mu) boundary error ~ 2e-7
constexpr double kMuShrink = 0.15;
constexpr double kPinEps = 1e-9;

double safe_h(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// ── Small dense linear algebra ──────────────────────────────────────────────

// Lower-triangular Cholesky with escalating ridge; solves SPD systems from
// the Newton iterations (which can be very ill-conditioned at small mu).
struct CholeskyFactor {
    std::vector<std::vector<double>> l;

    bool factor_once(std::vector<std::vector<double>> a) {
        const int n = static_cast<int>(a.size());
        for (int j = 0; j < n; ++j) {
            double d = a[j][j];
            for (int k = 0; k < j; ++k) d -= a[j][k] * a[j][k];
            if (!(d > 0) || !std::isfinite(d)) return false;
            a[j][j] = std::sqrt(d);
            for (int i = j + 1; i < n; ++i) {
                double s = a[i][j];
                for (int k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
                a[i][j] = s / a[j][j];
            }
        }
        l = std::move(a);
        return true;
    }

    void factor(const std::vector<std::vector<double>>& a) {
        double max_diag = 0;
        for (size_t i = 0; i < a.size(); ++i)
            max_diag = std::max(max_diag, std::abs(a[i][i]));
        double ridge = 0;
        for (int attempt = 0; attempt < 8; ++attempt) {
            auto work = a;
            for (size_t i = 0; i < work.size(); ++i) work[i][i] += ridge;
            if (factor_once(std::move(work))) return;
            ridge = ridge == 0 ? std::max(max_diag, 1.0) * 1e-14 : ridge * 100.0;
        }
        throw Error("internal: Newton system not positive definite");
    }

    std::vector<double> solve(std::vector<double> b) const {
        const int n = static_cast<int>(l.size());
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < i; ++k) b[i] -= l[i][k] * b[k];
            b[i] /= l[i][i];
        }
        for (int i = n - 1; i >= 0; --i) {
            for (int k = i + 1; k < n; ++k) b[i] -= l[k][i] * b[k];
            b[i] /= l[i][i];
        }
        return b;
    }
};

// Reduced row echelon form of [rows | rhs], rows being width n + 1.
// Returns pivot columns; rows below the rank end up (numerically) zero.
struct RrefResult {
    std::vector<int> pivot_cols;
    bool consistent = true;
};

RrefResult rref(std::vector<std::vector<double>>& rows, int n) {
    constexpr double kPivotEps = 1e-10;
    RrefResult out;
    int rank = 0;
    const int m = static_cast<int>(rows.size());
    for (int col = 0; col < n && rank < m; ++col) {
        int best = -1;
        double best_abs = kPivotEps;
        for (int r = rank; r < m; ++r)
            if (std::abs(rows[r][col]) > best_abs) {
                best_abs = std::abs(rows[r][col]);
                best = r;
            }
        if (best == -1) continue;
        std::swap(rows[rank], rows[best]);
        double p = rows[rank][col];
        for (double& v : rows[rank]) v /= p;
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            double f = rows[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) rows[r][j] -= f * rows[rank][j];
            rows[r][col] = 0.0;
        }
        out.pivot_cols.push_back(col);
        ++rank;
    }
    for (int r = rank; r < m; ++r)
        if (std::abs(rows[r][n]) > 1e-8) out.consistent = false;
    return out;
}

// Min-norm particular solution and orthonormal null basis of  E p = f.
struct AffineSet {
    bool consistent = true;
    std::vector<double> p0;
    std::vector<std::vector<double>> basis;   // orthonormal columns, n each
};

AffineSet solve_affine(const std::vector<LinearConstraint>& eqs, int n) {
    AffineSet out;
    std::vector<std::vector<double>> rows;
    for (const auto& c : eqs) {
        std::vector<double> row(n + 1, 0.0);
        for (const auto& [idx, coeff] : c.terms) row[idx] += coeff;
        row[n] = c.rhs;
        rows.push_back(std::move(row));
    }
    RrefResult rr = rref(rows, n);
    if (!rr.consistent) {
        out.consistent = false;
        return out;
    }

    out.p0.assign(n, 0.0);
    std::vector<bool> is_pivot(n, false);
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        is_pivot[rr.pivot_cols[r]] = true;
        out.p0[rr.pivot_cols[r]] = rows[r][n];
    }

    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<double> v(n, 0.0);
        v[fc] = 1.0;
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
            v[rr.pivot_cols[r]] = -rows[r][fc];
        // Modified Gram-Schmidt, two passes for numerical hygiene.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& u : out.basis) {
                double c = dot(u, v);
                for (int i = 0; i < n; ++i) v[i] -= c * u[i];
            }
        double norm = std::sqrt(dot(v, v));
        if (norm <= 1e-12) continue;
        for (double& x : v) x /= norm;
        out.basis.push_back(std::move(v));
    }

    // Min-norm representative: strip the null-space component.
    for (const auto& u : out.basis) {
        double c = dot(u, out.p0);
        for (int i = 0; i < n; ++i) out.p0[i] -= c * u[i];
    }
    return out;
}

// ── Presolve ────────────────────────────────────────────────────────────────
//
// Variable-range LPs pin collapsed variables; per-row slack LPs turn
// always-tight inequalities into equalities.  Both are required before the
// barrier stage: property sets like JUS routinely carry implied equalities
// (COH and OPT tight simultaneously), and the barrier needs every surviving
// inequality to admit strictly positive slack.

struct PresolvedSystem {
    bool feasible = true;
    std::vector<std::string> certificate;
    std::vector<std::optional<double>> pin;
    std::vector<LinearConstraint> equalities;     // declared + implied + pins
    std::vector<LinearConstraint> inequalities;   // surviving strict rows
};

LpProblem base_lp(const LinearConstraintSystem& sys) {
    LpProblem lp;
    lp.num_vars = sys.num_vars;
    lp.objective.assign(sys.num_vars, 0.0);
    lp.lower.assign(sys.num_vars, 0.0);
    lp.upper.assign(sys.num_vars, 1.0);
    for (const auto& c : sys.constraints) {
        LpRow row;
        row.coeffs.assign(sys.num_vars, 0.0);
        for (const auto& [idx, coeff] : c.terms) row.coeffs[idx] += coeff;
        row.cmp = c.cmp;
        row.rhs = c.rhs;
        lp.rows.push_back(std::move(row));
    }
    return lp;
}

PresolvedSystem presolve(const LinearConstraintSystem& sys) {
    PresolvedSystem out;
    FeasibilityCheck feas = check_feasibility(sys);
    if (!feas.feasible) {
        out.feasible = false;
        out.certificate = feas.violated;
        return out;
    }

    const int n = sys.num_vars;
    out.pin.assign(n, std::nullopt);
    LpProblem lp = base_lp(sys);
    auto extremum = [&](bool maximize) {
        lp.maximize = maximize;
        LpResult r = solve_lp(lp);
        if (r.status != LpStatus::Optimal)
            throw Error("internal: presolve LP failed on a feasible system");
        return r.objective;
    };

    for (int i = 0; i < n; ++i) {
        lp.objective.assign(n, 0.0);
        lp.objective[i] = 1.0;
        double lo = extremum(false), hi = extremum(true);
        if (hi - lo <= kPinEps)
            out.pin[i] = std::clamp((lo + hi) / 2.0, 0.0, 1.0);
    }

    for (const auto& c : sys.constraints) {
        if (c.cmp == Cmp::Eq) {
            out.equalities.push_back(c);
            continue;
        }
        lp.objective.assign(n, 0.0);
        for (const auto& [idx, coeff] : c.terms) lp.objective[idx] += coeff;
        double max_slack = c.cmp == Cmp::LessEq ? c.rhs - extremum(false)
                                                : extremum(true) - c.rhs;
        if (max_slack <= kPinEps) {
            LinearConstraint eq = c;
            eq.cmp = Cmp::Eq;
            out.equalities.push_back(std::move(eq));
        } else {
            out.inequalities.push_back(c);
        }
    }

    for (int i = 0; i < n; ++i)
        if (out.pin[i]) {
            LinearConstraint eq;
            eq.terms = {{i, 1.0}};
            eq.cmp = Cmp::Eq;
            eq.rhs = *out.pin[i];
            eq.provenance = "presolve pin";
            out.equalities.push_back(std::move(eq));
        }
    return out;
}

// Oriented inequality  c' x <= d  over whichever space the caller works in.
struct OrientedRow {
    std::vector<double> c;
    double d = 0;
};

OrientedRow orient(const LinearConstraint& c, int n) {
    OrientedRow row;
    row.c.assign(n, 0.0);
    double sign = c.cmp == Cmp::GreaterEq ? -1.0 : 1.0;
    for (const auto& [idx, coeff] : c.terms) row.c[idx] += sign * coeff;
    row.d = sign * c.rhs;
    return row;
}

// Strictly interior point of the presolved system in marginal space:
// Chebyshev-center LP with the equalities hard, margins on the surviving
// inequalities and on the boxes of unpinned variables.
std::vector<double> interior_point(const PresolvedSystem& pre, int n) {
    LpProblem lp;
    lp.num_vars = n + 1;                       // p, then t
    lp.objective.assign(n + 1, 0.0);
    lp.objective[n] = 1.0;
    lp.maximize = true;
    lp.lower.assign(n + 1, 0.0);
    lp.upper.assign(n + 1, 1.0);

    auto push = [&](std::vector<double> coeffs, Cmp cmp, double rhs) {
        LpRow row;
        row.coeffs = std::move(coeffs);
        row.cmp = cmp;
        row.rhs = rhs;
        lp.rows.push_back(std::move(row));
    };
    for (const auto& c : pre.equalities) {
        std::vector<double> coeffs(n + 1, 0.0);
        for (const auto& [idx, coeff] : c.terms) coeffs[idx] += coeff;
        push(std::move(coeffs), Cmp::Eq, c.rhs);
    }
    for (const auto& c : pre.inequalities) {
        OrientedRow r = orient(c, n);
        r.c.push_back(std::sqrt(dot(r.c, r.c)));
        push(std::move(r.c), Cmp::LessEq, r.d);
    }
    for (int i = 0; i < n; ++i) {
        if (pre.pin[i]) continue;
        std::vector<double> lo(n + 1, 0.0), hi(n + 1, 0.0);
        lo[i] = -1.0; lo[n] = 1.0;             // t - p_i <= 0
        hi[i] = 1.0;  hi[n] = 1.0;             // p_i + t <= 1
        push(std::move(lo), Cmp::LessEq, 0.0);
        push(std::move(hi), Cmp::LessEq, 1.0);
    }

    LpResult r = solve_lp(lp);
    if (r.status != LpStatus::Optimal)
        throw Error("internal: interior-point LP failed on a feasible system");
    r.x.resize(n);
    return r.x;
}

} // namespace

// ── Maximum-entropy completion ──────────────────────────────────────────────

CompletionResult max_entropy_completion(const ArgumentationFramework& af,
                                        const std::set<PropertyId>& properties,
                                        const PartialAssignment& pi,
                                        double tol) {
    LinearConstraintSystem sys = build_constraints(af, properties, pi);
    const int n = af.size();

    CompletionResult res;
    if (n == 0) {
        res.status = CompletionResult::Status::Optimal;
        res.assignment = MarginalAssignment(std::vector<double>{});
        return res;
    }

    PresolvedSystem pre = presolve(sys);
    if (!pre.feasible) {
        res.status = CompletionResult::Status::Infeasible;
        res.certificate = pre.certificate;
        return res;
    }

    AffineSet aff = solve_affine(pre.equalities, n);
    if (!aff.consistent) {
        res.status = CompletionResult::Status::Infeasible;
        res.certificate = {"equality rows are mutually inconsistent"};
        return res;
    }
    const auto& basis = aff.basis;
    const int k = static_cast<int>(basis.size());

    // Variables constant on the affine set contribute fixed entropy and are
    // excluded from derivatives (h' diverges at their 0/1 values).
    std::vector<bool> is_const(n, false);
    for (int i = 0; i < n; ++i) {
        double row_norm2 = 0;
        for (const auto& col : basis) row_norm2 += col[i] * col[i];
        is_const[i] = row_norm2 <= 1e-18;
    }

    // Inequalities reduced to z-space:  c' z <= d  with  p = p0 + B z.
    struct RRow {
        std::vector<double> c;
        double d;
    };
    std::vector<RRow> rows;
    auto reduce = [&](const std::vector<double>& a, double rhs) {
        RRow r;
        r.c.resize(k);
        for (int c = 0; c < k; ++c) r.c[c] = dot(a, basis[c]);
        r.d = rhs - dot(a, aff.p0);
        double norm = 0;
        for (double v : r.c) norm = std::max(norm, std::abs(v));
        if (norm <= 1e-10) return;             // constant on the affine set
        rows.push_back(std::move(r));
    };
    for (const auto& c : pre.inequalities) {
        OrientedRow r = orient(c, n);
        reduce(r.c, r.d);
    }
    for (int i = 0; i < n; ++i) {
        if (pre.pin[i]) continue;
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        reduce(e, 1.0);                        // p_i <= 1
        e[i] = -1.0;
        reduce(e, 0.0);                        // -p_i <= 0
    }

    auto point_of = [&](const std::vector<double>& z) {
        std::vector<double> p = aff.p0;
        for (int c = 0; c < k; ++c)
            for (int i = 0; i < n; ++i) p[i] += z[c] * basis[c][i];
        return p;
    };
    auto finalize = [&](std::vector<double> p, double kkt, int iterations) {
        for (double& v : p) v = std::clamp(v, 0.0, 1.0);
        res.status = CompletionResult::Status::Optimal;
        res.entropy = 0;
        for (double v : p) res.entropy += safe_h(v);
        res.kkt_residual = kkt;
        res.iterations = iterations;
        res.assignment = MarginalAssignment(std::move(p));
        return res;
    };

    if (k == 0) return finalize(aff.p0, 0.0, 0);

    // Strictly interior start: Chebyshev center in the reduced coordinates
    // (free variables split into positive and negative parts for the LP).
    std::vector<double> z(k, 0.0);
    {
        LpProblem lp;
        lp.num_vars = 2 * k + 1;
        lp.objective.assign(2 * k + 1, 0.0);
        lp.objective[2 * k] = 1.0;
        lp.maximize = true;
        lp.lower.assign(2 * k + 1, 0.0);
        lp.upper.assign(2 * k + 1, std::numeric_limits<double>::infinity());
        for (const auto& row : rows) {
            LpRow r;
            r.coeffs.assign(2 * k + 1, 0.0);
            for (int c = 0; c < k; ++c) {
                r.coeffs[c] = row.c[c];
                r.coeffs[k + c] = -row.c[c];
            }
            r.coeffs[2 * k] = std::sqrt(dot(row.c, row.c));
            r.cmp = Cmp::LessEq;
            r.rhs = row.d;
            lp.rows.push_back(std::move(r));
        }
        LpResult cres = solve_lp(lp);
        if (cres.status != LpStatus::Optimal)
            throw Error("internal: Chebyshev-center LP failed on a feasible system");
        for (int c = 0; c < k; ++c) z[c] = cres.x[c] - cres.x[k + c];
    }

    const int m_rows = static_cast<int>(rows.size());
    auto slacks_of = [&](const std::vector<double>& zz, std::vector<double>& g) {
        g.resize(m_rows);
        double min_g = std::numeric_limits<double>::infinity();
        for (int j = 0; j < m_rows; ++j) {
            g[j] = rows[j].d - dot(rows[j].c, zz);
            min_g = std::min(min_g, g[j]);
        }
        return min_g;
    };
    auto objective = [&](const std::vector<double>& zz, double mu,
                         const std::vector<double>& g) {
        double f = 0;
        for (double v : point_of(zz)) f += safe_h(v);
        for (int j = 0; j < m_rows; ++j) f += mu * std::log(g[j]);
        return f;
    };

    {
        std::vector<double> g;
        if (slacks_of(z, g) <= 0)
            throw Error("internal: interior start has non-positive slack");
    }

    int iterations = 0;
    double gamma = 0;
    double mu = 1.0;
    // Newton direction and decrement at (z, mu); gamma^2 = grad' d with d the
    // ascent direction.  The decrement is the Hessian-metric gradient norm —
    // the right stationarity measure here, because raw gradient components
    // along strongly active constraint normals are dominated by float noise
    // of order mu/g * (eps/g) once mu is small.
    auto newton_direction = [&](const std::vector<double>& zz, double mu_now,
                                std::vector<double>& dir, double& gamma_out) {
        std::vector<double> p = point_of(zz);
        std::vector<double> g;
        slacks_of(zz, g);
        std::vector<double> grad(k, 0.0);
        std::vector<std::vector<double>> hess(k, std::vector<double>(k, 0.0));
        for (int i = 0; i < n; ++i) {
            if (is_const[i]) continue;
            double x = std::clamp(p[i], 1e-15, 1.0 - 1e-15);
            double h1 = std::log((1.0 - x) / x);
            double h2 = 1.0 / (x * (1.0 - x));
            for (int c = 0; c < k; ++c) {
                double bc = basis[c][i];
                if (bc == 0.0) continue;
                grad[c] += h1 * bc;
                for (int c2 = 0; c2 <= c; ++c2)
                    hess[c][c2] += h2 * bc * basis[c2][i];
            }
        }
        for (int j = 0; j < m_rows; ++j) {
            double ginv = 1.0 / g[j];
            for (int c = 0; c < k; ++c) {
                double cc = rows[j].c[c];
                if (cc == 0.0) continue;
                grad[c] -= mu_now * ginv * cc;
                for (int c2 = 0; c2 <= c; ++c2)
                    hess[c][c2] += mu_now * ginv * ginv * cc * rows[j].c[c2];
            }
        }
        for (int c = 0; c < k; ++c)
            for (int c2 = c + 1; c2 < k; ++c2) hess[c][c2] = hess[c2][c];
        CholeskyFactor chol;
        chol.factor(hess);
        dir = chol.solve(grad);
        gamma_out = std::sqrt(std::max(0.0, dot(grad, dir)));
        return grad;
    };

    while (true) {
        bool last_stage = mu <= kMuFinal * 1.0001;
        double target = last_stage ? std::min(tol, 1e-9) : std::max(1e-9, 1e-2 * mu);
        for (int step = 0; step < 80; ++step) {
            std::vector<double> dir;
            newton_direction(z, mu, dir, gamma);
            ++iterations;
            if (gamma <= target) break;

            std::vector<double> g;
            slacks_of(z, g);
            double f0 = objective(z, mu, g);
            double alpha = 1.0;
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> zn(k);
                for (int c = 0; c < k; ++c) zn[c] = z[c] + alpha * dir[c];
                std::vector<double> gn;
                if (slacks_of(zn, gn) > 0 &&
                    objective(zn, mu, gn) >= f0 + 1e-4 * alpha * gamma * gamma)
                {
                    z = std::move(zn);
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) break;              // float noise floor for this mu
        }
        if (last_stage) break;
        mu = std::max(mu * kMuShrink, kMuFinal);
    }

    {
        std::vector<double> dir;
        newton_direction(z, kMuFinal, dir, gamma);
    }
    double kkt = std::max(gamma, m_rows * kMuFinal);
    return finalize(point_of(z), kkt, iterations);
}

// ── Joint-space oracle ──────────────────────────────────────────────────────

JointDistribution brute_force_joint_maxent(const ArgumentationFramework& af,
                                           const std::set<PropertyId>& properties,
                                           const PartialAssignment& pi,
                                           double tol) {
    const int n = af.size();
    if (n > 10)
        throw TooLargeError("joint maximum entropy enumerates 2^n subsets; capped at 10 arguments");

    LinearConstraintSystem sys = build_constraints(af, properties, pi);
    PresolvedSystem pre = presolve(sys);
    if (!pre.feasible)
        throw InfeasibleError("constraint system infeasible: " + join(pre.certificate, "; "));

    // Marginals pinned to 0/1 zero out every joint weight of the subsets on
    // the wrong side; restrict the support accordingly.  On the remaining
    // support the product of a strictly interior marginal point is a strictly
    // positive feasible start.
    std::uint32_t forced_one = 0, forced_zero = 0;
    for (int i = 0; i < n; ++i) {
        if (!pre.pin[i]) continue;
        if (*pre.pin[i] <= 1e-7) forced_zero |= (1u << i);
        else if (*pre.pin[i] >= 1.0 - 1e-7) forced_one |= (1u << i);
    }
    std::vector<std::uint32_t> support;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if ((mask & forced_one) == forced_one && (mask & forced_zero) == 0)
            support.push_back(mask);
    const int s_count = static_cast<int>(support.size());

    std::vector<double> interior = interior_point(pre, n);

    std::vector<double> w(s_count);
    double total = 0;
    for (int s = 0; s < s_count; ++s) {
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
            bool in = support[s] & (1u << i);
            prod *= in ? interior[i] : 1.0 - interior[i];
        }
        w[s] = prod;
        total += prod;
    }
    for (double& v : w) v /= total;

    auto embed = [&](const std::vector<double>& ws) {
        std::vector<double> full(1u << n, 0.0);
        double sum = 0;
        for (int s = 0; s < s_count; ++s) sum += ws[s];
        for (int s = 0; s < s_count; ++s) full[support[s]] = ws[s] / sum;
        return JointDistribution(n, std::move(full));
    };
    if (s_count == 1) return embed(w);

    // Equalities in weight space: the simplex row plus every marginal
    // equality, rank-reduced so the KKT system is nonsingular.  A marginal
    // row a'p = r reads sum_E w_E * (a' chi_E) = r over the support.
    auto weight_coeffs = [&](const std::vector<double>& a) {
        std::vector<double> c(s_count, 0.0);
        for (int s = 0; s < s_count; ++s)
            for (int i = 0; i < n; ++i)
                if (support[s] & (1u << i)) c[s] += a[i];
        return c;
    };
    std::vector<std::vector<double>> eq_rows;
    {
        std::vector<double> simplex(s_count + 1, 1.0);   // sum w = 1
        eq_rows.push_back(std::move(simplex));
        for (const auto& c : pre.equalities) {
            std::vector<double> a(n, 0.0);
            for (const auto& [idx, coeff] : c.terms) a[idx] += coeff;
            std::vector<double> row = weight_coeffs(a);
            row.push_back(c.rhs);
            eq_rows.push_back(std::move(row));
        }
        RrefResult rr = rref(eq_rows, s_count);
        if (!rr.consistent)
            throw InfeasibleError("equality rows are mutually inconsistent");
        eq_rows.resize(rr.pivot_cols.size());
    }
    const int me = static_cast<int>(eq_rows.size());

    std::vector<OrientedRow> ineq;
    for (const auto& c : pre.inequalities) {
        OrientedRow r = orient(c, n);
        OrientedRow rw;
        rw.c = weight_coeffs(r.c);
        rw.d = r.d;
        ineq.push_back(std::move(rw));
    }
    const int mi = static_cast<int>(ineq.size());

    auto slack_min = [&](const std::vector<double>& ws, std::vector<double>& g) {
        g.resize(mi);
        double min_g = std::numeric_limits<double>::infinity();
        for (int j = 0; j < mi; ++j) {
            g[j] = ineq[j].d - dot(ineq[j].c, ws);
            min_g = std::min(min_g, g[j]);
        }
        return mi == 0 ? 1.0 : min_g;
    };
    auto objective = [&](const std::vector<double>& ws, double mu,
                         const std::vector<double>& g) {
        double f = 0;
        for (double v : ws)
            if (v > 0) f -= v * std::log(v);
        for (int j = 0; j < mi; ++j) f += mu * std::log(g[j]);
        return f;
    };

    double mu = 1.0;
    while (true) {
        bool last_stage = mu <= kMuFinal * 1.0001;
        double target = last_stage ? std::min(tol, 1e-9) : std::max(1e-9, 1e-2 * mu);
        for (int step = 0; step < 60; ++step) {
            std::vector<double> g;
            slack_min(w, g);
            std::vector<double> grad(s_count);
            std::vector<std::vector<double>> p_mat(s_count, std::vector<double>(s_count, 0.0));
            for (int s = 0; s < s_count; ++s) {
                grad[s] = -std::log(w[s]) - 1.0;
                p_mat[s][s] = 1.0 / w[s];
            }
            for (int j = 0; j < mi; ++j) {
                double ginv = 1.0 / g[j];
                for (int s = 0; s < s_count; ++s) {
                    double cc = ineq[j].c[s];
                    if (cc == 0.0) continue;
                    grad[s] -= mu * ginv * cc;
                    for (int s2 = 0; s2 <= s; ++s2)
                        p_mat[s][s2] += mu * ginv * ginv * cc * ineq[j].c[s2];
                }
            }
            for (int s = 0; s < s_count; ++s)
                for (int s2 = s + 1; s2 < s_count; ++s2) p_mat[s][s2] = p_mat[s2][s];

            // Equality-constrained Newton step via the Schur complement:
            // P d = grad + A' nu  with  A d = 0.
            CholeskyFactor chol;
            chol.factor(p_mat);
            std::vector<double> x0 = chol.solve(grad);
            std::vector<std::vector<double>> xa(me);
            for (int r = 0; r < me; ++r) {
                std::vector<double> col(eq_rows[r].begin(), eq_rows[r].begin() + s_count);
                xa[r] = chol.solve(col);
            }
            std::vector<std::vector<double>> schur(me, std::vector<double>(me, 0.0));
            std::vector<double> rhs(me);
            for (int r = 0; r < me; ++r) {
                for (int r2 = 0; r2 < me; ++r2)
                    for (int s = 0; s < s_count; ++s)
                        schur[r][r2] += eq_rows[r][s] * xa[r2][s];
                rhs[r] = 0;
                for (int s = 0; s < s_count; ++s) rhs[r] -= eq_rows[r][s] * x0[s];
            }
            CholeskyFactor schur_chol;
            schur_chol.factor(schur);
            std::vector<double> nu = schur_chol.solve(rhs);
            std::vector<double> dir = x0;
            for (int r = 0; r < me; ++r)
                for (int s = 0; s < s_count; ++s) dir[s] += nu[r] * xa[r][s];

            double gamma = std::sqrt(std::max(0.0, dot(grad, dir)));
            if (gamma <= target) break;

            double alpha = 1.0;
            for (int s = 0; s < s_count; ++s)
                if (dir[s] < 0) alpha = std::min(alpha, -0.99 * w[s] / dir[s]);
            for (int j = 0; j < mi; ++j) {
                double cd = dot(ineq[j].c, dir);
                if (cd > 0) alpha = std::min(alpha, 0.99 * g[j] / cd);
            }
            double f0 = objective(w, mu, g);
            bool accepted = false;
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> wn(s_count);
                for (int s = 0; s < s_count; ++s) wn[s] = w[s] + alpha * dir[s];
                bool positive = true;
                for (double v : wn)
                    if (!(v > 0)) { positive = false; break; }
                std::vector<double> gn;
                if (positive && slack_min(wn, gn) > 0 &&
                    objective(wn, mu, gn) >= f0 + 1e-4 * alpha * gamma * gamma)
                {
                    w = std::move(wn);
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) break;
        }
        if (last_stage) break;
        mu = std::max(mu * kMuShrink, kMuFinal);
    }

    return embed(w);
}

// ── Entropy-extremal semantics ──────────────────────────────────────────────

Labelling grounded_via_maxent(const ArgumentationFramework& af) {
    CompletionResult res =
        max_entropy_completion(af, {PropertyId::JUS}, PartialAssignment(af.size()));
    if (!res.assignment)
        throw Error("internal: the justifiable class is never empty");
    // 1e-6 band: solver marginals sit within ~2e-7 of the exact optimum, so
    // exact-0.5 coordinates land safely inside the undec band.
    Labelling via_entropy = epistemic_labelling(*res.assignment, 1e-6);
    Labelling via_fixpoint = grounded_fixpoint(af);
    if (!(via_entropy == via_fixpoint))
        throw Error("internal: max-entropy grounded labelling diverges from the fixpoint");
    return via_entropy;
}

std::vector<Labelling> stable_via_min_entropy(const ArgumentationFramework& af) {
    const int n = af.size();
    if (n > 25)
        throw TooLargeError("stable enumeration capped at 25 arguments");

    std::vector<Labelling> stable;
    for (const Labelling& l : enumerate_complete(af)) {
        if (!l.undec_set().empty()) continue;
        MarginalAssignment m = congruent_assignment(l);
        if (!check(af, m, PropertyId::JUS).holds)
            throw Error("internal: stable congruent assignment must be justifiable");
        if (n <= 20) {
            // The point mass on the in-set realizes these marginals with
            // zero entropy — the global entropy minimum.
            std::uint32_t mask = 0;
            for (int i : l.in_set()) mask |= (1u << i);
            JointDistribution pm = JointDistribution::point_mass(n, mask);
            if (entropy(pm) > 1e-12 || !(marginals(pm) == m))
                throw Error("internal: point mass must realize the stable marginals");
        }
        stable.push_back(l);
    }
    return stable;
}

// ── Convexity probing ───────────────────────────────────────────────────────

ConvexityProbe convexity_probe(const ArgumentationFramework& af, PropertyId property,
                               int samples, std::uint64_t seed) {
    ConvexityProbe probe;
    probe.property = property;
    Rng rng(seed);

    int want = std::clamp(samples / 10, 2, 100);
    std::vector<MarginalAssignment> members =
        sample_members(af, property, rng, want, std::max(samples, 100));
    probe.members_sampled = static_cast<int>(members.size());

    // The known non-convex pair for RAT: attacker believed / attacker
    // disbelieved, mixing to (0.7, 0.6) across the first attack between
    // distinct arguments.  Injected so the probe exhibits the counterexample
    // deterministically whenever it applies.
    int injected_a = -1, injected_b = -1;
    if (property == PropertyId::RAT) {
        for (const auto& [a, b] : af.attacks()) {
            if (a == b) continue;
            std::vector<double> va(af.size(), 0.5), vb(af.size(), 0.5);
            va[a] = 1.0; va[b] = 0.4;
            vb[a] = 0.4; vb[b] = 0.8;
            MarginalAssignment ma(va), mb(vb);
            if (check(af, ma, property).holds && check(af, mb, property).holds) {
                injected_a = static_cast<int>(members.size());
                members.push_back(std::move(ma));
                injected_b = injected_a + 1;
                members.push_back(std::move(mb));
                probe.members_sampled += 2;
            }
            break;
        }
    }

    if (members.empty()) return probe;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(members.size()) - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int t = 0; t < samples; ++t) {
        int i, j;
        double delta;
        if (t == 0 && injected_a != -1) {
            i = injected_a;
            j = injected_b;
            delta = 0.5;
        } else {
            i = pick(rng);
            j = pick(rng);
            delta = unit(rng);
        }
        MarginalAssignment combo = convex_combine(members[i], members[j], delta);
        ++probe.pairs_tested;
        PropertyReport rep = check(af, combo, property);
        if (!rep.holds) {
            probe.violation_found = true;
            probe.member_a = members[i].values();
            probe.member_b = members[j].values();
            probe.combination = combo.values();
            probe.delta = delta;
            probe.failed_constraint = rep.violations.front().constraint;
            break;
        }
    }
    return probe;
}

} // namespace probarg
