#include "probarg/properties.hpp"

#include <cmath>
#include <cstdint>

#include "probarg/errors.hpp"
#include "probarg/labelling.hpp"

namespace probarg {

std::string to_string(PropertyId p) {
    switch (p) {
        case PropertyId::COH: return "COH";
        case PropertyId::SFOU: return "SFOU";
        case PropertyId::FOU: return "FOU";
        case PropertyId::SOPT: return "SOPT";
        case PropertyId::OPT: return "OPT";
        case PropertyId::JUS: return "JUS";
        case PropertyId::TER: return "TER";
        case PropertyId::RAT: return "RAT";
        case PropertyId::NEU: return "NEU";
        case PropertyId::INV: return "INV";
        case PropertyId::MAX: return "MAX";
        case PropertyId::MIN: return "MIN";
    }
    return "?";
}

std::optional<PropertyId> property_from_string(std::string_view name) {
    for (PropertyId p : kAllProperties)
        if (to_string(p) == name) return p;
    return std::nullopt;
}

namespace {

void require_bound(const ArgumentationFramework& af, const MarginalAssignment& m) {
    if (af.size() != m.size())
        throw Error("assignment has " + std::to_string(m.size()) + " values for a framework of " +
                    std::to_string(af.size()) + " arguments");
}

double attacker_sum(const ArgumentationFramework& af, const MarginalAssignment& m, int v) {
    double s = 0;
    for (int a : af.attackers_of(v)) s += m[a];
    return s;
}

void add_violation(PropertyReport& r, std::string constraint,
                   std::vector<std::string> args, double lhs, double rhs) {
    r.violations.push_back({std::move(constraint), std::move(args), lhs, rhs});
}

// One comparator per tolerance rule; tol is always non-negative.
bool le(double x, double y, double tol) { return x <= y + tol; }
bool ge(double x, double y, double tol) { return x >= y - tol; }
bool eq(double x, double y, double tol) { return std::abs(x - y) <= tol; }

} // namespace

PropertyReport check(const ArgumentationFramework& af, const MarginalAssignment& m,
                     PropertyId property, double tol) {
    require_bound(af, m);
    PropertyReport report;
    report.property = property;

    switch (property) {
        case PropertyId::COH:
            for (const auto& [a, b] : af.attacks()) {
                if (!le(m[a], 1.0 - m[b], tol))
                    add_violation(report,
                                  "COH " + af.name_of(a) + "->" + af.name_of(b) + ": P(" +
                                      af.name_of(a) + ") <= 1 - P(" + af.name_of(b) + ")",
                                  {af.name_of(a), af.name_of(b)}, m[a], 1.0 - m[b]);
            }
            break;

        case PropertyId::SFOU:
            for (int v = 0; v < af.size(); ++v) {
                if (af.is_unattacked(v) && !ge(m[v], 0.5, tol))
                    add_violation(report, "SFOU " + af.name_of(v) + ": P >= 0.5",
                                  {af.name_of(v)}, m[v], 0.5);
            }
            break;

        case PropertyId::FOU:
            for (int v = 0; v < af.size(); ++v) {
                if (af.is_unattacked(v) && !eq(m[v], 1.0, tol))
                    add_violation(report, "FOU " + af.name_of(v) + ": P = 1",
                                  {af.name_of(v)}, m[v], 1.0);
            }
            break;

        case PropertyId::SOPT:
            for (int v = 0; v < af.size(); ++v) {
                if (af.is_unattacked(v)) continue;
                double bound = 1.0 - attacker_sum(af, m, v);
                if (!ge(m[v], bound, tol))
                    add_violation(report,
                                  "SOPT " + af.name_of(v) + ": P >= 1 - sum(attackers)",
                                  {af.name_of(v)}, m[v], bound);
            }
            break;

        case PropertyId::OPT:
            for (int v = 0; v < af.size(); ++v) {
                double bound = 1.0 - attacker_sum(af, m, v);
                if (!ge(m[v], bound, tol))
                    add_violation(report,
                                  "OPT " + af.name_of(v) + ": P >= 1 - sum(attackers)",
                                  {af.name_of(v)}, m[v], bound);
            }
            break;

        case PropertyId::JUS: {
            PropertyReport coh = check(af, m, PropertyId::COH, tol);
            PropertyReport opt = check(af, m, PropertyId::OPT, tol);
            report.violations = std::move(coh.violations);
            report.violations.insert(report.violations.end(),
                                     opt.violations.begin(), opt.violations.end());
            break;
        }

        case PropertyId::TER:
            for (int v = 0; v < af.size(); ++v) {
                double nearest = m[v] < 0.25 ? 0.0 : m[v] < 0.75 ? 0.5 : 1.0;
                if (!eq(m[v], nearest, tol))
                    add_violation(report, "TER " + af.name_of(v) + ": P in {0, 0.5, 1}",
                                  {af.name_of(v)}, m[v], nearest);
            }
            break;

        case PropertyId::RAT:
            for (const auto& [a, b] : af.attacks()) {
                if (m[a] > 0.5 + tol && !le(m[b], 0.5, tol))
                    add_violation(report,
                                  "RAT " + af.name_of(a) + "->" + af.name_of(b) + ": P(" +
                                      af.name_of(a) + ") > 0.5 implies P(" + af.name_of(b) +
                                      ") <= 0.5",
                                  {af.name_of(a), af.name_of(b)}, m[b], 0.5);
            }
            break;

        case PropertyId::NEU:
            for (int v = 0; v < af.size(); ++v) {
                if (!eq(m[v], 0.5, tol))
                    add_violation(report, "NEU " + af.name_of(v) + ": P = 0.5",
                                  {af.name_of(v)}, m[v], 0.5);
            }
            break;

        case PropertyId::INV:
            for (const auto& [a, b] : af.attacks()) {
                if (!eq(m[a], 1.0 - m[b], tol))
                    add_violation(report,
                                  "INV " + af.name_of(a) + "->" + af.name_of(b) + ": P(" +
                                      af.name_of(a) + ") = 1 - P(" + af.name_of(b) + ")",
                                  {af.name_of(a), af.name_of(b)}, m[a], 1.0 - m[b]);
            }
            break;

        case PropertyId::MAX:
            for (int v = 0; v < af.size(); ++v) {
                if (!eq(m[v], 1.0, tol))
                    add_violation(report, "MAX " + af.name_of(v) + ": P = 1",
                                  {af.name_of(v)}, m[v], 1.0);
            }
            break;

        case PropertyId::MIN:
            for (int v = 0; v < af.size(); ++v) {
                if (!eq(m[v], 0.0, tol))
                    add_violation(report, "MIN " + af.name_of(v) + ": P = 0",
                                  {af.name_of(v)}, m[v], 0.0);
            }
            break;
    }

    report.holds = report.violations.empty();
    return report;
}

std::set<PropertyId> classify(const ArgumentationFramework& af,
                              const MarginalAssignment& m, double tol) {
    std::set<PropertyId> holding;
    for (PropertyId p : kAllProperties)
        if (check(af, m, p, tol).holds) holding.insert(p);
    return holding;
}

// ── Completeness ────────────────────────────────────────────────────────────

namespace {

// Anchor comparisons under tolerance; callers pass exact ternary values after
// snapping, where these degenerate to exact tests.
bool is_one(double v, double tol) { return std::abs(v - 1.0) <= tol; }
bool is_zero(double v, double tol) { return std::abs(v) <= tol; }

} // namespace

bool satisfies_completeness_conditions(const ArgumentationFramework& af,
                                       const MarginalAssignment& m, double tol) {
    require_bound(af, m);
    // Part 1: ternary.
    if (!check(af, m, PropertyId::TER, tol).holds) return false;

    for (int v = 0; v < af.size(); ++v) {
        const auto& atks = af.attackers_of(v);
        bool all_attackers_zero = true, some_attacker_one = false;
        for (int a : atks) {
            if (!is_zero(m[a], tol)) all_attackers_zero = false;
            if (is_one(m[a], tol)) some_attacker_one = true;
        }
        // Part 2: value 1 forces all attackers to 0.
        if (is_one(m[v], tol) && !all_attackers_zero) return false;
        // Part 3: all attackers at 0 (vacuously for unattacked) forces value 1.
        if (all_attackers_zero && !is_one(m[v], tol)) return false;
        // Part 4: value 0 needs an attacker at 1.
        if (is_zero(m[v], tol) && !some_attacker_one) return false;
        // Part 5: an attacker at 1 forces value 0.
        if (some_attacker_one && !is_zero(m[v], tol)) return false;
    }
    return true;
}

bool is_complete_prob_function(const ArgumentationFramework& af,
                               const MarginalAssignment& m, double tol) {
    require_bound(af, m);
    if (!check(af, m, PropertyId::TER, tol).holds) return false;

    // Snap to the anchors so both routes see exact ternary values.
    std::vector<double> snapped(m.size());
    for (int i = 0; i < m.size(); ++i)
        snapped[i] = m[i] < 0.25 ? 0.0 : m[i] < 0.75 ? 0.5 : 1.0;
    MarginalAssignment exact(std::move(snapped));

    // Route 1: the five defining conditions.  Route 2: a ternary assignment
    // is a complete probability function iff its congruent labelling is a
    // complete labelling.  The routes are equivalent; disagreement means a
    // bug, so it is asserted.
    bool direct = satisfies_completeness_conditions(af, exact, 0.0);
    bool via_labelling = is_complete(af, epistemic_labelling(exact, 0.25));
    if (direct != via_labelling)
        throw Error("internal: completeness routes disagree");
    return direct;
}

// ── Restriction-based selection ─────────────────────────────────────────────

std::string to_string(Restriction r) {
    switch (r) {
        case Restriction::None: return "none";
        case Restriction::NoHalf: return "no_half";
        case Restriction::MaxOnes: return "max_ones";
        case Restriction::MaxZeros: return "max_zeros";
        case Restriction::MaxHalves: return "max_halves";
        case Restriction::MinOnes: return "min_ones";
        case Restriction::MinZeros: return "min_zeros";
        case Restriction::MinHalves: return "min_halves";
    }
    return "?";
}

std::optional<Restriction> restriction_from_string(std::string_view name) {
    for (Restriction r : {Restriction::None, Restriction::NoHalf, Restriction::MaxOnes,
                          Restriction::MaxZeros, Restriction::MaxHalves, Restriction::MinOnes,
                          Restriction::MinZeros, Restriction::MinHalves})
        if (to_string(r) == name) return r;
    return std::nullopt;
}

namespace {

std::uint32_t value_mask(const MarginalAssignment& m, double value) {
    std::uint32_t mask = 0;
    for (int i = 0; i < m.size(); ++i)
        if (m[i] == value) mask |= (1u << i);
    return mask;
}

} // namespace

std::vector<MarginalAssignment> select_by_restriction(const ArgumentationFramework& af,
                                                      Restriction restriction) {
    std::vector<MarginalAssignment> all;
    for (const Labelling& l : enumerate_complete(af))
        all.push_back(congruent_assignment(l));

    if (restriction == Restriction::None) return all;
    if (restriction == Restriction::NoHalf) {
        std::vector<MarginalAssignment> kept;
        for (const auto& m : all)
            if (value_mask(m, 0.5) == 0) kept.push_back(m);
        return kept;
    }

    double value = 0;
    bool maximal = false;
    switch (restriction) {
        case Restriction::MaxOnes:   value = 1.0; maximal = true; break;
        case Restriction::MinOnes:   value = 1.0; maximal = false; break;
        case Restriction::MaxZeros:  value = 0.0; maximal = true; break;
        case Restriction::MinZeros:  value = 0.0; maximal = false; break;
        case Restriction::MaxHalves: value = 0.5; maximal = true; break;
        case Restriction::MinHalves: value = 0.5; maximal = false; break;
        default: break;
    }

    std::vector<std::uint32_t> masks;
    masks.reserve(all.size());
    for (const auto& m : all) masks.push_back(value_mask(m, value));

    std::vector<MarginalAssignment> kept;
    for (size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < all.size() && !dominated; ++j) {
            if (i == j || masks[i] == masks[j]) continue;
            bool i_sub_j = (masks[i] & ~masks[j]) == 0;
            bool j_sub_i = (masks[j] & ~masks[i]) == 0;
            if (maximal ? i_sub_j : j_sub_i) dominated = true;
        }
        if (!dominated) kept.push_back(all[i]);
    }
    return kept;
}

} // namespace probarg
