// The twelve marginal-probability properties and operations on them:
// per-property checking with violation reports, classification, the
// completeness characterization, and restriction-based selection among the
// congruent assignments of complete labellings.
//
// Tolerance convention: an inequality x <= y passes iff x <= y + tol (and
// symmetrically for >=); equalities pass iff |x - y| <= tol.  RAT's strict
// antecedent P(A) > 0.5 fires only when P(A) > 0.5 + tol.
#ifndef PROBARG_PROPERTIES_HPP
#define PROBARG_PROPERTIES_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "probarg/assignment.hpp"
#include "probarg/framework.hpp"

namespace probarg {

enum class PropertyId { COH, SFOU, FOU, SOPT, OPT, JUS, TER, RAT, NEU, INV, MAX, MIN };

inline constexpr std::array<PropertyId, 12> kAllProperties = {
    PropertyId::COH, PropertyId::SFOU, PropertyId::FOU, PropertyId::SOPT,
    PropertyId::OPT, PropertyId::JUS,  PropertyId::TER, PropertyId::RAT,
    PropertyId::NEU, PropertyId::INV,  PropertyId::MAX, PropertyId::MIN,
};

std::string to_string(PropertyId p);
std::optional<PropertyId> property_from_string(std::string_view name);

// One broken constraint instance, e.g. COH on attack a2->a3 with
// P(a2) = 0.7 > 0.4 = 1 - P(a3):  constraint names the instance, lhs/rhs are
// the two compared values.
struct Violation {
    std::string constraint;
    std::vector<std::string> arguments;
    double lhs = 0;
    double rhs = 0;
};

struct PropertyReport {
    PropertyId property;
    bool holds = false;
    std::vector<Violation> violations;   // empty iff holds
};

PropertyReport check(const ArgumentationFramework& af, const MarginalAssignment& m,
                     PropertyId property, double tol = 1e-9);

// All properties that hold, in one pass.
std::set<PropertyId> classify(const ArgumentationFramework& af,
                              const MarginalAssignment& m, double tol = 1e-9);

// The five defining conditions of complete probability functions, evaluated
// directly.  Exposed so the equivalence with TER ∧ COH ∧ FOU can be tested
// from outside.
bool satisfies_completeness_conditions(const ArgumentationFramework& af,
                                       const MarginalAssignment& m, double tol = 1e-9);

// True iff m is a complete probability function.  Gate on TER within tol,
// snap marginals to the nearest anchor in {0, 0.5, 1}, then evaluate the
// defining conditions exactly; cross-asserted against the equivalent route
// "the congruent labelling is a complete labelling".
bool is_complete_prob_function(const ArgumentationFramework& af,
                               const MarginalAssignment& m, double tol = 1e-9);

// ── Restriction-based selection ─────────────────────────────────────────────
//
// select_by_restriction enumerates the congruent assignments of all complete
// labellings and filters by the restriction.  "max"/"min" are by SET
// INCLUSION on the set of arguments carrying the given value (the reading
// under which the selections correspond exactly to preferred / grounded /
// semi-stable semantics); none keeps everything, no_half drops assignments
// with any 0.5.

enum class Restriction {
    None, NoHalf, MaxOnes, MaxZeros, MaxHalves, MinOnes, MinZeros, MinHalves
};

std::string to_string(Restriction r);
// Accepts none, no_half, max_ones, max_zeros, max_halves, min_ones,
// min_zeros, min_halves.
std::optional<Restriction> restriction_from_string(std::string_view name);

std::vector<MarginalAssignment> select_by_restriction(const ArgumentationFramework& af,
                                                      Restriction restriction);

} // namespace probarg

#endif
