// Self-verification: executable checks of the structural propositions the
// rest of the library is built on — the inclusion lattice of the property
// classes, the bridges between labelling semantics and probability classes,
// restriction/semantics correspondences, the completeness characterization,
// convexity of the linear classes (with RAT's counterexample expected), and
// agreement of the two max-entropy routes.
#ifndef PROBARG_VERIFY_HPP
#define PROBARG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "probarg/framework.hpp"

namespace probarg {

struct PropositionResult {
    std::string name;
    bool ok = false;
    // A counterexample that confirms a known non-property (RAT convexity):
    // reported, but still counts as ok.
    bool expected_counterexample = false;
    std::string details;
};

struct VerifyOptions {
    int samples = 10000;
    std::uint64_t seed = 42;
    double tol = 1e-9;
};

// Runs every proposition check against the given framework.  Sampled checks
// draw `samples` random assignments; frameworks with n <= 4 additionally get
// exhaustive scans over all 3^n ternary assignments.  Deterministic under a
// fixed seed.
std::vector<PropositionResult> verify_propositions(const ArgumentationFramework& af,
                                                   const VerifyOptions& options);

} // namespace probarg

#endif
