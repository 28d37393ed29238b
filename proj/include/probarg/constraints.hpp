// Linear-constraint encodings of the property classes.
//
// Every property except TER and RAT cuts out a convex polytope of marginal
// assignments; build_constraints materializes those cuts as annotated linear
// rows over the marginal variables (one row per constraint instance, no
// deduplication, so each row can point back at the attack/argument it came
// from).  The implicit box 0 <= P(A) <= 1 is part of every system.
#ifndef PROBARG_CONSTRAINTS_HPP
#define PROBARG_CONSTRAINTS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "probarg/assignment.hpp"
#include "probarg/framework.hpp"
#include "probarg/linear_program.hpp"
#include "probarg/properties.hpp"

namespace probarg {

struct LinearConstraint {
    std::vector<std::pair<int, double>> terms;   // (argument index, coefficient)
    Cmp cmp = Cmp::LessEq;
    double rhs = 0;
    std::string provenance;    // e.g. "COH a2->a3", "OPT a4", "pin pi(a1)"
    bool from_pin = false;     // row induced by the partial assignment
};

struct LinearConstraintSystem {
    int num_vars = 0;
    std::vector<LinearConstraint> constraints;
};

// Encodings: COH p_A + p_B <= 1 per attack; SFOU p_A >= 0.5 per unattacked;
// FOU p_A = 1 per unattacked; SOPT p_A + sum(attackers) >= 1 per attacked;
// OPT the same row for every argument; JUS = COH + OPT; NEU p_A = 0.5;
// INV p_A + p_B = 1 per attack; MAX p_A = 1; MIN p_A = 0; plus one equality
// per defined entry of pi.  Self-attacks go through the same formulas
// (a->a yields 2 p_a <= 1 under COH).  TER/RAT: UnsupportedPropertyError.
LinearConstraintSystem build_constraints(const ArgumentationFramework& af,
                                         const std::set<PropertyId>& properties,
                                         const PartialAssignment& pi);

double evaluate_lhs(const LinearConstraint& c, const std::vector<double>& x);

// True iff the constraint holds at x within tol.
bool constraint_satisfied(const LinearConstraint& c, const std::vector<double>& x,
                          double tol);

struct FeasibilityCheck {
    bool feasible = false;
    std::vector<double> point;             // witness / minimum-violation point
    std::vector<std::string> violated;     // provenance + amount, infeasible only
};

// LP feasibility over the system plus boxes.  When infeasible, the reported
// point minimizes the total violation with pin rows weighted heavily, so
// certificates blame structural constraints rather than the user's pins.
FeasibilityCheck check_feasibility(const LinearConstraintSystem& sys, double tol = 1e-9);

bool is_feasible(const LinearConstraintSystem& sys, double tol = 1e-9);

} // namespace probarg

#endif
