// ============================================================================
// Maximum-entropy completion of partial probability assignments.
//
// The joint distribution of maximal entropy with given marginals is the
// product distribution, and all constraint classes handled here cut the
// feasible set by marginal-linear rows only.  So maximizing joint entropy
// over the constrained joints reduces to maximizing
//
//      F(p) = sum_A h(p_A),    h(x) = -x ln x - (1-x) ln(1-x)
//
// over the marginal polytope — n variables instead of 2^n.  F is strictly
// concave on (0,1)^n, hence the optimum is unique.
//
// Solution pipeline (deterministic, no external solver):
//   1. phase-1 simplex feasibility; infeasible -> certificate and stop,
//   2. presolve: per-variable range LPs pin collapsed variables, per-row
//      slack-max LPs expose implied equalities (constraint sets like JUS
//      routinely have empty interior without this),
//   3. eliminate the equality system: p = p0 + N z with N an orthonormal
//      null basis; a Chebyshev-center LP gives a strictly interior start,
//   4. log-barrier damped Newton on the reduced problem, mu driven to 1e-12
//      (barrier error at weakly active constraints scales as sqrt(mu); this
//      puts marginals within ~4e-7 of the true optimum),
//   5. report entropy, a KKT stationarity residual, and the iteration count.
//
// brute_force_joint_maxent optimizes over the 2^n joint weights directly
// (equality-constrained damped Newton) and is the independent oracle for the
// reduction; capped at n <= 10.
// ============================================================================
#ifndef PROBARG_MAXENT_HPP
#define PROBARG_MAXENT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "probarg/assignment.hpp"
#include "probarg/framework.hpp"
#include "probarg/labelling.hpp"
#include "probarg/properties.hpp"

namespace probarg {

struct CompletionResult {
    enum class Status { Optimal, Infeasible };

    Status status = Status::Infeasible;
    std::optional<MarginalAssignment> assignment;   // set iff Optimal
    double entropy = 0;                             // sum_A h(p_A) at optimum
    double kkt_residual = 0;
    int iterations = 0;                             // Newton steps, all mu stages
    std::vector<std::string> certificate;           // violated rows iff Infeasible
};

// properties must be linear-encodable (UnsupportedPropertyError otherwise).
// tol bounds the reported kkt_residual on success.  If pi is already total
// and feasible the result is pi itself.
CompletionResult max_entropy_completion(const ArgumentationFramework& af,
                                        const std::set<PropertyId>& properties,
                                        const PartialAssignment& pi,
                                        double tol = 1e-8);

// Independent oracle over the full 2^n joint.  Throws TooLargeError (n > 10)
// and InfeasibleError.
JointDistribution brute_force_joint_maxent(const ArgumentationFramework& af,
                                           const std::set<PropertyId>& properties,
                                           const PartialAssignment& pi,
                                           double tol = 1e-8);

// Grounded semantics recovered by optimization: the epistemic labelling of
// the max-entropy member of JUS.  Thresholds with a 1e-6 band (see header
// note: barrier accuracy at the 0.5 plateau is ~sqrt(mu)); asserts agreement
// with the fixpoint construction.
Labelling grounded_via_maxent(const ArgumentationFramework& af);

// Stable semantics at the entropy minimum: the stable labellings are exactly
// the complete labellings whose congruent assignment admits a zero-entropy
// (point-mass) joint.  Returns them; asserts each satisfies JUS.
std::vector<Labelling> stable_via_min_entropy(const ArgumentationFramework& af);

// ── Convexity probing ───────────────────────────────────────────────────────

struct ConvexityProbe {
    PropertyId property;
    int members_sampled = 0;     // assignments confirmed inside the class
    int pairs_tested = 0;
    bool violation_found = false;
    // Populated iff violation_found: a pair of members and a mixing weight
    // whose combination leaves the class.
    std::vector<double> member_a, member_b, combination;
    double delta = 0;
    std::string failed_constraint;
};

// Samples members of the class (rejection + class-specific constructions),
// tests random convex combinations.  For RAT the known non-convex pair
// ((1, 0.4), (0.4, 0.8), delta 0.5) is injected onto the first attack
// between distinct arguments, so the probe reliably exhibits the
// counterexample.  Deterministic under a fixed seed.
ConvexityProbe convexity_probe(const ArgumentationFramework& af, PropertyId property,
                               int samples, std::uint64_t seed);

} // namespace probarg

#endif
