// Probability assignments over arguments.
//
// A joint distribution assigns a weight to every subset of arguments
// (bitmask-indexed, bit i = membership of argument i).  A marginal assignment
// stores only the per-argument acceptance probabilities P(A) = sum of the
// weights of the subsets containing A.  Epistemic labellings threshold the
// marginals at 0.5; congruence is the exact correspondence in↔1, out↔0,
// undec↔0.5.
#ifndef PROBARG_ASSIGNMENT_HPP
#define PROBARG_ASSIGNMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "probarg/framework.hpp"
#include "probarg/labelling.hpp"

namespace probarg {

class MarginalAssignment {
public:
    MarginalAssignment() = default;
    // Validates every value lies in [0, 1].
    explicit MarginalAssignment(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double at(int idx) const { return values_.at(idx); }
    double operator[](int idx) const { return values_[idx]; }
    const std::vector<double>& values() const { return values_; }

    bool operator==(const MarginalAssignment& other) const { return values_ == other.values_; }

private:
    std::vector<double> values_;
};

// A partial map from arguments to probabilities; undefined entries are free.
class PartialAssignment {
public:
    PartialAssignment() = default;
    explicit PartialAssignment(int n) : values_(n) {}

    int size() const { return static_cast<int>(values_.size()); }
    bool has(int idx) const { return values_.at(idx).has_value(); }
    double at(int idx) const { return values_.at(idx).value(); }
    void set(int idx, double value);
    int defined_count() const;
    bool is_total() const { return defined_count() == size(); }

private:
    std::vector<std::optional<double>> values_;
};

class JointDistribution {
public:
    // weights.size() must be 2^num_args; weights non-negative and summing to
    // 1 within 1e-9.  Throws TooLargeError for num_args > 20.
    JointDistribution(int num_args, std::vector<double> weights);

    static JointDistribution point_mass(int num_args, std::uint32_t subset);

    int num_args() const { return num_args_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(std::uint32_t subset) const { return weights_.at(subset); }

private:
    int num_args_ = 0;
    std::vector<double> weights_;
};

// ── Derived quantities ──────────────────────────────────────────────────────

MarginalAssignment marginals(const JointDistribution& joint);

// Independent joint with the given marginals; TooLargeError for n > 20.
JointDistribution product_joint(const MarginalAssignment& m);

// Shannon entropy  -sum_E w_E ln w_E  (natural log, 0 ln 0 = 0).
double entropy(const JointDistribution& joint);

// Binary entropy  h(x) = -x ln x - (1-x) ln(1-x);  h(0) = h(1) = 0.
double binary_entropy(double x);

// in iff P(A) > 0.5 + tol, out iff P(A) < 0.5 - tol, else undec.  The band
// keeps optimizer output with float noise near 0.5 at undec.
Labelling epistemic_labelling(const MarginalAssignment& m, double threshold_tol = 1e-9);
std::vector<int> epistemic_extension(const MarginalAssignment& m, double threshold_tol = 1e-9);

// Exact correspondence within 1e-12: in↔1, out↔0, undec↔0.5.
bool is_congruent(const Labelling& l, const MarginalAssignment& m);
MarginalAssignment congruent_assignment(const Labelling& l);

// m agrees with every defined entry of pi within tol.
bool is_compliant(const MarginalAssignment& m, const PartialAssignment& pi, double tol = 1e-9);

// (1-delta)*a + delta*b, delta in [0, 1].
MarginalAssignment convex_combine(const MarginalAssignment& a,
                                  const MarginalAssignment& b, double delta);

// ── Assignment files ────────────────────────────────────────────────────────
//
// One "<argname> <probability>" pair per line; '#' starts a comment; blank
// lines ignored.  Probabilities must lie in [0, 1].  Every referenced
// argument must exist; an argument may be assigned at most once.

PartialAssignment parse_assignment(const ArgumentationFramework& af, std::string_view text);

// Throws Error unless pi.is_total().
MarginalAssignment to_marginal(const PartialAssignment& pi);

// Lines "<argname> <probability>" (9 significant digits), framework order.
std::string format_assignment(const ArgumentationFramework& af, const MarginalAssignment& m);

} // namespace probarg

#endif
