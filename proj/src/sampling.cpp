#include "probarg/sampling.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "probarg/labelling.hpp"
#include "probarg/properties.hpp"

namespace probarg {

ArgumentationFramework random_framework(Rng& rng, int max_args, double attack_density) {
    std::uniform_int_distribution<int> size_dist(1, std::max(1, max_args));
    const int n = size_dist(rng);
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));

    std::bernoulli_distribution attack(attack_density);
    std::vector<std::pair<std::string, std::string>> attacks;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (attack(rng)) attacks.emplace_back(names[i], names[j]);
    return ArgumentationFramework(std::move(names), attacks);
}

MarginalAssignment random_assignment(Rng& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = unit(rng);
    return MarginalAssignment(std::move(v));
}

MarginalAssignment random_ternary_assignment(Rng& rng, int n) {
    std::uniform_int_distribution<int> tri(0, 2);
    std::vector<double> v(n);
    for (double& x : v) x = tri(rng) * 0.5;
    return MarginalAssignment(std::move(v));
}

namespace {

// Attack ends must sum to 1, so an involutary member is a parity 2-coloring
// of each weakly-connected attack component: one side t, the other 1 - t.
// Components whose parity is inconsistent (odd directed cycle somewhere in
// the undirected sense, including self-attacks) are forced to 0.5.
MarginalAssignment involutary_member(const ArgumentationFramework& af, Rng& rng) {
    const int n = af.size();
    std::vector<std::vector<int>> adj(n);
    std::vector<bool> self_attached(n, false);
    for (const auto& [a, b] : af.attacks()) {
        if (a == b) {
            self_attached[a] = true;
            continue;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<int> color(n, -1);
    std::vector<double> v(n, 0.5);
    for (int seed_arg = 0; seed_arg < n; ++seed_arg) {
        if (color[seed_arg] != -1) continue;
        std::vector<int> component{seed_arg};
        color[seed_arg] = 0;
        bool consistent = !self_attached[seed_arg];
        std::deque<int> queue{seed_arg};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (self_attached[u]) consistent = false;
            for (int w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    component.push_back(w);
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    consistent = false;
                }
            }
        }
        double t = consistent ? unit(rng) : 0.5;
        for (int u : component) v[u] = color[u] == 0 ? t : 1.0 - t;
    }
    return MarginalAssignment(std::move(v));
}

// Rational repair: believed attackers force their targets down to [0, 0.5].
// Lowering values never creates a new violation (antecedents only weaken),
// so one pass suffices.
MarginalAssignment rational_member(const ArgumentationFramework& af, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> v(af.size());
    for (double& x : v) x = unit(rng);
    for (const auto& [a, b] : af.attacks())
        if (v[a] > 0.5 && v[b] > 0.5) v[b] = unit(rng) * 0.5;
    return MarginalAssignment(std::move(v));
}

// Random convex mixture of congruent assignments of complete labellings;
// those all satisfy JUS, and the JUS/COH/SOPT/OPT classes are convex.
MarginalAssignment complete_mixture(const std::vector<Labelling>& complete,
                                    int n, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(complete.size()) - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> how_many(1, 3);

    const int parts = how_many(rng);
    std::vector<double> v(n, 0.0);
    double total = 0;
    for (int t = 0; t < parts; ++t) {
        MarginalAssignment m = congruent_assignment(complete[pick(rng)]);
        double weight = unit(rng) + 0.01;
        for (int i = 0; i < n; ++i) v[i] += weight * m[i];
        total += weight;
    }
    for (double& x : v) x = std::clamp(x / total, 0.0, 1.0);
    return MarginalAssignment(std::move(v));
}

} // namespace

std::vector<MarginalAssignment> sample_members(const ArgumentationFramework& af,
                                               PropertyId property, Rng& rng,
                                               int count, int attempts) {
    const int n = af.size();
    std::vector<MarginalAssignment> out;
    auto try_add = [&](MarginalAssignment m) {
        if (static_cast<int>(out.size()) < count && check(af, m, property).holds)
            out.push_back(std::move(m));
    };
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Exact constructions first: the equality-carrying classes (NEU, MAX,
    // MIN, FOU, INV) have measure zero among uniform draws, and the
    // optimism-flavored ones are thin on dense frameworks.
    switch (property) {
    case PropertyId::NEU:
        try_add(MarginalAssignment(std::vector<double>(n, 0.5)));
        break;
    case PropertyId::MAX:
        try_add(MarginalAssignment(std::vector<double>(n, 1.0)));
        break;
    case PropertyId::MIN:
        try_add(MarginalAssignment(std::vector<double>(n, 0.0)));
        break;
    case PropertyId::FOU:
    case PropertyId::SFOU:
        for (int t = 0; t < count; ++t) {
            std::vector<double> v(n);
            for (double& x : v) x = unit(rng);
            for (int i = 0; i < n; ++i)
                if (af.is_unattacked(i))
                    v[i] = property == PropertyId::FOU ? 1.0 : 0.5 + 0.5 * unit(rng);
            try_add(MarginalAssignment(std::move(v)));
        }
        break;
    case PropertyId::INV:
        for (int t = 0; t < count; ++t) try_add(involutary_member(af, rng));
        break;
    case PropertyId::RAT:
        for (int t = 0; t < count; ++t) try_add(rational_member(af, rng));
        break;
    case PropertyId::TER:
        for (int t = 0; t < count; ++t) try_add(random_ternary_assignment(rng, n));
        break;
    case PropertyId::COH:
    case PropertyId::SOPT:
    case PropertyId::OPT:
    case PropertyId::JUS:
        if (n <= 25) {
            std::vector<Labelling> complete = enumerate_complete(af);
            if (!complete.empty())
                for (int t = 0; t < count; ++t)
                    try_add(complete_mixture(complete, n, rng));
        }
        break;
    }

    for (int t = 0; t < attempts && static_cast<int>(out.size()) < count; ++t) {
        if (property == PropertyId::TER)
            try_add(random_ternary_assignment(rng, n));
        else
            try_add(random_assignment(rng, n));
    }
    return out;
}

} // namespace probarg
