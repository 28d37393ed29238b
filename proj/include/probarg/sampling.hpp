// Seeded random generation of frameworks, assignments and property-class
// members, shared by the verification suite, the convexity probes and the
// tests.  Everything is deterministic under a fixed seed.
#ifndef PROBARG_SAMPLING_HPP
#define PROBARG_SAMPLING_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "probarg/assignment.hpp"
#include "probarg/framework.hpp"
#include "probarg/properties.hpp"

namespace probarg {

using Rng = std::mt19937_64;

// n uniform in [1, max_args]; each ordered pair attacks independently with
// the given density.  Argument names a1..an.
ArgumentationFramework random_framework(Rng& rng, int max_args, double attack_density = 0.3);

// Marginals i.i.d. uniform on [0, 1].
MarginalAssignment random_assignment(Rng& rng, int n);

// Marginals i.i.d. uniform on {0, 0.5, 1}.
MarginalAssignment random_ternary_assignment(Rng& rng, int n);

// Up to `count` members of the property class, found within `attempts`
// tries: class-specific constructions (exact members) plus rejection
// sampling.  May return fewer for sparse classes.
std::vector<MarginalAssignment> sample_members(const ArgumentationFramework& af,
                                               PropertyId property, Rng& rng,
                                               int count, int attempts);

} // namespace probarg

#endif
