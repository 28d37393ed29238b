#include "probarg/assignment.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "probarg/errors.hpp"

namespace probarg {

namespace {

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

constexpr double kCongruenceTol = 1e-12;

} // namespace

MarginalAssignment::MarginalAssignment(std::vector<double> values)
    : values_(std::move(values)) {
    for (double v : values_)
        if (!std::isfinite(v) || !in_unit_interval(v))
            throw Error("marginal probability out of [0,1]: " + std::to_string(v));
}

void PartialAssignment::set(int idx, double value) {
    if (!std::isfinite(value) || !in_unit_interval(value))
        throw Error("probability out of [0,1]: " + std::to_string(value));
    values_.at(idx) = value;
}

int PartialAssignment::defined_count() const {
    int c = 0;
    for (const auto& v : values_)
        if (v.has_value()) ++c;
    return c;
}

JointDistribution::JointDistribution(int num_args, std::vector<double> weights)
    : num_args_(num_args), weights_(std::move(weights)) {
    if (num_args_ < 0) throw Error("negative argument count");
    if (num_args_ > 20)
        throw TooLargeError("joint distributions capped at 20 arguments, got " +
                            std::to_string(num_args_));
    if (weights_.size() != (size_t{1} << num_args_))
        throw Error("joint distribution needs 2^n weights");
    double sum = 0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0 || w > 1.0 + 1e-12)
            throw Error("joint weight out of [0,1]");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw Error("joint weights sum to " + std::to_string(sum) + ", expected 1");
}

JointDistribution JointDistribution::point_mass(int num_args, std::uint32_t subset) {
    std::vector<double> w(size_t{1} << num_args, 0.0);
    w.at(subset) = 1.0;
    return JointDistribution(num_args, std::move(w));
}

MarginalAssignment marginals(const JointDistribution& joint) {
    const int n = joint.num_args();
    std::vector<double> m(n, 0.0);
    const auto& w = joint.weights();
    for (std::uint32_t e = 0; e < w.size(); ++e) {
        if (w[e] == 0.0) continue;
        for (int i = 0; i < n; ++i)
            if (e & (1u << i)) m[i] += w[e];
    }
    for (double& v : m) v = std::min(1.0, std::max(0.0, v));   // absorb roundoff
    return MarginalAssignment(std::move(m));
}

JointDistribution product_joint(const MarginalAssignment& m) {
    const int n = m.size();
    if (n > 20)
        throw TooLargeError("product joint capped at 20 arguments, got " + std::to_string(n));
    std::vector<double> w(size_t{1} << n, 1.0);
    for (std::uint32_t e = 0; e < w.size(); ++e)
        for (int i = 0; i < n; ++i)
            w[e] *= (e & (1u << i)) ? m[i] : 1.0 - m[i];
    // Renormalize the float dust so the constructor's sum check is exact.
    double sum = 0;
    for (double v : w) sum += v;
    for (double& v : w) v /= sum;
    return JointDistribution(n, std::move(w));
}

double entropy(const JointDistribution& joint) {
    double h = 0;
    for (double w : joint.weights())
        if (w > 0.0) h -= w * std::log(w);
    return h;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

Labelling epistemic_labelling(const MarginalAssignment& m, double threshold_tol) {
    Labelling l(m.size(), Label::Undec);
    for (int i = 0; i < m.size(); ++i) {
        if (m[i] > 0.5 + threshold_tol) l[i] = Label::In;
        else if (m[i] < 0.5 - threshold_tol) l[i] = Label::Out;
    }
    return l;
}

std::vector<int> epistemic_extension(const MarginalAssignment& m, double threshold_tol) {
    return epistemic_labelling(m, threshold_tol).in_set();
}

bool is_congruent(const Labelling& l, const MarginalAssignment& m) {
    if (l.size() != m.size()) return false;
    for (int i = 0; i < l.size(); ++i) {
        double target = l[i] == Label::In ? 1.0 : l[i] == Label::Out ? 0.0 : 0.5;
        if (std::abs(m[i] - target) > kCongruenceTol) return false;
    }
    return true;
}

MarginalAssignment congruent_assignment(const Labelling& l) {
    std::vector<double> m(l.size());
    for (int i = 0; i < l.size(); ++i)
        m[i] = l[i] == Label::In ? 1.0 : l[i] == Label::Out ? 0.0 : 0.5;
    return MarginalAssignment(std::move(m));
}

bool is_compliant(const MarginalAssignment& m, const PartialAssignment& pi, double tol) {
    if (m.size() != pi.size()) return false;
    for (int i = 0; i < m.size(); ++i)
        if (pi.has(i) && std::abs(m[i] - pi.at(i)) > tol) return false;
    return true;
}

MarginalAssignment convex_combine(const MarginalAssignment& a,
                                  const MarginalAssignment& b, double delta) {
    if (a.size() != b.size()) throw Error("convex_combine: size mismatch");
    if (delta < 0.0 || delta > 1.0) throw Error("convex_combine: delta out of [0,1]");
    std::vector<double> m(a.size());
    for (int i = 0; i < a.size(); ++i) {
        m[i] = (1.0 - delta) * a[i] + delta * b[i];
        m[i] = std::min(1.0, std::max(0.0, m[i]));
    }
    return MarginalAssignment(std::move(m));
}

// ── Assignment files ────────────────────────────────────────────────────────

PartialAssignment parse_assignment(const ArgumentationFramework& af, std::string_view text) {
    PartialAssignment pi(af.size());
    std::vector<bool> seen(af.size(), false);

    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = (nl == std::string_view::npos)
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::istringstream ss{std::string(line)};
        std::string name, value_text, extra;
        if (!(ss >> name)) continue;   // blank line
        if (!(ss >> value_text) || (ss >> extra))
            throw MalformedLineError("assignment line needs '<argname> <probability>': '" +
                                     std::string(line) + "'");

        int idx = af.index_of(name);   // UnknownArgumentError on miss
        if (seen[idx])
            throw DuplicateArgumentError("argument '" + name + "' assigned twice");
        seen[idx] = true;

        double value = 0;
        auto [ptr, ec] = std::from_chars(value_text.data(),
                                         value_text.data() + value_text.size(), value);
        if (ec != std::errc{} || ptr != value_text.data() + value_text.size())
            throw MalformedLineError("not a probability: '" + value_text + "'");
        if (!std::isfinite(value) || value < 0.0 || value > 1.0)
            throw MalformedLineError("probability out of [0,1]: '" + value_text + "'");
        pi.set(idx, value);
    }
    return pi;
}

MarginalAssignment to_marginal(const PartialAssignment& pi) {
    if (!pi.is_total())
        throw Error("assignment is partial (" + std::to_string(pi.defined_count()) + "/" +
                    std::to_string(pi.size()) + " arguments defined)");
    std::vector<double> m(pi.size());
    for (int i = 0; i < pi.size(); ++i) m[i] = pi.at(i);
    return MarginalAssignment(std::move(m));
}

std::string format_assignment(const ArgumentationFramework& af, const MarginalAssignment& m) {
    std::ostringstream out;
    char buf[64];
    for (int i = 0; i < af.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.9g", m[i]);
        out << af.name_of(i) << " " << buf << "\n";
    }
    return out.str();
}

} // namespace probarg
