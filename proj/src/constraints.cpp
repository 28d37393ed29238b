#include "probarg/constraints.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include "probarg/errors.hpp"

namespace probarg {

namespace {

// Terms are accumulated per variable so a self-attack contributes a single
// coefficient-2 entry rather than two coefficient-1 entries.
LinearConstraint make_row(std::vector<std::pair<int, double>> raw, Cmp cmp, double rhs,
                          std::string provenance, bool from_pin = false) {
    std::map<int, double> acc;
    for (const auto& [idx, coeff] : raw) acc[idx] += coeff;
    LinearConstraint c;
    c.terms.assign(acc.begin(), acc.end());
    c.cmp = cmp;
    c.rhs = rhs;
    c.provenance = std::move(provenance);
    c.from_pin = from_pin;
    return c;
}

std::string arrow(const ArgumentationFramework& af, int from, int to) {
    return af.name_of(from) + "->" + af.name_of(to);
}

void add_coherence_rows(const ArgumentationFramework& af,
                        std::vector<LinearConstraint>& out) {
    for (const auto& [a, b] : af.attacks())
        out.push_back(make_row({{a, 1.0}, {b, 1.0}}, Cmp::LessEq, 1.0,
                               "COH " + arrow(af, a, b)));
}

void add_optimism_rows(const ArgumentationFramework& af,
                       std::vector<LinearConstraint>& out,
                       bool attacked_only, const std::string& tag) {
    for (int a = 0; a < af.size(); ++a) {
        if (attacked_only && af.is_unattacked(a)) continue;
        std::vector<std::pair<int, double>> terms{{a, 1.0}};
        for (int b : af.attackers_of(a)) terms.emplace_back(b, 1.0);
        out.push_back(make_row(std::move(terms), Cmp::GreaterEq, 1.0,
                               tag + " " + af.name_of(a)));
    }
}

} // namespace

LinearConstraintSystem build_constraints(const ArgumentationFramework& af,
                                         const std::set<PropertyId>& properties,
                                         const PartialAssignment& pi) {
    LinearConstraintSystem sys;
    sys.num_vars = af.size();
    auto& rows = sys.constraints;

    for (PropertyId prop : kAllProperties) {
        if (!properties.count(prop)) continue;
        switch (prop) {
        case PropertyId::COH:
            add_coherence_rows(af, rows);
            break;
        case PropertyId::SFOU:
            for (int a = 0; a < af.size(); ++a)
                if (af.is_unattacked(a))
                    rows.push_back(make_row({{a, 1.0}}, Cmp::GreaterEq, 0.5,
                                            "SFOU " + af.name_of(a)));
            break;
        case PropertyId::FOU:
            for (int a = 0; a < af.size(); ++a)
                if (af.is_unattacked(a))
                    rows.push_back(make_row({{a, 1.0}}, Cmp::Eq, 1.0,
                                            "FOU " + af.name_of(a)));
            break;
        case PropertyId::SOPT:
            add_optimism_rows(af, rows, /*attacked_only=*/true, "SOPT");
            break;
        case PropertyId::OPT:
            add_optimism_rows(af, rows, /*attacked_only=*/false, "OPT");
            break;
        case PropertyId::JUS:
            add_coherence_rows(af, rows);
            add_optimism_rows(af, rows, /*attacked_only=*/false, "OPT");
            break;
        case PropertyId::NEU:
            for (int a = 0; a < af.size(); ++a)
                rows.push_back(make_row({{a, 1.0}}, Cmp::Eq, 0.5,
                                        "NEU " + af.name_of(a)));
            break;
        case PropertyId::INV:
            for (const auto& [a, b] : af.attacks())
                rows.push_back(make_row({{a, 1.0}, {b, 1.0}}, Cmp::Eq, 1.0,
                                        "INV " + arrow(af, a, b)));
            break;
        case PropertyId::MAX:
            for (int a = 0; a < af.size(); ++a)
                rows.push_back(make_row({{a, 1.0}}, Cmp::Eq, 1.0,
                                        "MAX " + af.name_of(a)));
            break;
        case PropertyId::MIN:
            for (int a = 0; a < af.size(); ++a)
                rows.push_back(make_row({{a, 1.0}}, Cmp::Eq, 0.0,
                                        "MIN " + af.name_of(a)));
            break;
        case PropertyId::TER:
        case PropertyId::RAT:
            throw UnsupportedPropertyError(
                "property " + to_string(prop) +
                " has no linear constraint encoding");
        }
    }

    for (int a = 0; a < af.size(); ++a)
        if (pi.has(a))
            rows.push_back(make_row({{a, 1.0}}, Cmp::Eq, pi.at(a),
                                    "pin pi(" + af.name_of(a) + ")", true));
    return sys;
}

double evaluate_lhs(const LinearConstraint& c, const std::vector<double>& x) {
    double lhs = 0;
    for (const auto& [idx, coeff] : c.terms) lhs += coeff * x.at(idx);
    return lhs;
}

bool constraint_satisfied(const LinearConstraint& c, const std::vector<double>& x,
                          double tol) {
    double lhs = evaluate_lhs(c, x);
    switch (c.cmp) {
    case Cmp::LessEq: return lhs <= c.rhs + tol;
    case Cmp::GreaterEq: return lhs >= c.rhs - tol;
    case Cmp::Eq: return std::abs(lhs - c.rhs) <= tol;
    }
    return false;
}

namespace {

// Min-violation point of an infeasible system: every row gets an elastic
// variable absorbing its violation and the weighted violation sum is
// minimized.  Pins are heavily weighted so certificates blame the
// framework's structural rows rather than the user's stated beliefs.
std::vector<double> min_violation_point(const LinearConstraintSystem& sys) {
    const int n = sys.num_vars;
    const int m = static_cast<int>(sys.constraints.size());
    const double inf = std::numeric_limits<double>::infinity();

    LpProblem lp;
    lp.num_vars = n + m;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.lower.assign(lp.num_vars, 0.0);
    lp.upper.assign(n, 1.0);
    lp.upper.resize(lp.num_vars, inf);
    for (int r = 0; r < m; ++r) {
        const auto& c = sys.constraints[r];
        lp.objective[n + r] = c.from_pin ? 100.0 : 1.0;
        LpRow row;
        row.coeffs.assign(lp.num_vars, 0.0);
        for (const auto& [idx, coeff] : c.terms) row.coeffs[idx] += coeff;
        row.cmp = c.cmp;
        row.rhs = c.rhs;
        switch (c.cmp) {
        case Cmp::LessEq: row.coeffs[n + r] = -1.0; break;   // lhs - v <= rhs
        case Cmp::GreaterEq: row.coeffs[n + r] = 1.0; break; // lhs + v >= rhs
        case Cmp::Eq:
            // One elastic for both directions: lhs - v <= rhs and
            // lhs + v >= rhs, so v >= |lhs - rhs| at the optimum.
            row.coeffs[n + r] = -1.0;
            row.cmp = Cmp::LessEq;
            lp.rows.push_back(row);
            row.coeffs[n + r] = 1.0;
            row.cmp = Cmp::GreaterEq;
            break;
        }
        lp.rows.push_back(std::move(row));
    }

    LpResult res = solve_lp(lp);
    if (res.status != LpStatus::Optimal)
        throw Error("internal: elastic relaxation must be solvable");
    return std::vector<double>(res.x.begin(), res.x.begin() + n);
}

} // namespace

FeasibilityCheck check_feasibility(const LinearConstraintSystem& sys, double tol) {
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

    LpResult lpres = solve_lp(lp);
    FeasibilityCheck out;
    out.point = lpres.x;
    out.feasible = lpres.status == LpStatus::Optimal;
    if (!out.feasible) {
        out.point = min_violation_point(sys);
        for (const auto& c : sys.constraints) {
            if (constraint_satisfied(c, out.point, tol)) continue;
            double lhs = evaluate_lhs(c, out.point);
            double amount = c.cmp == Cmp::LessEq ? lhs - c.rhs
                          : c.cmp == Cmp::GreaterEq ? c.rhs - lhs
                          : std::abs(lhs - c.rhs);
            char buf[64];
            std::snprintf(buf, sizeof buf, " (violated by %.6g)", amount);
            out.violated.push_back(c.provenance + buf);
        }
    }
    return out;
}

bool is_feasible(const LinearConstraintSystem& sys, double tol) {
    return check_feasibility(sys, tol).feasible;
}

} // namespace probarg
