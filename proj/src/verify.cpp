#include "probarg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>

#include "probarg/assignment.hpp"
#include "probarg/errors.hpp"
#include "probarg/labelling.hpp"
#include "probarg/maxent.hpp"
#include "probarg/properties.hpp"
#include "probarg/sampling.hpp"

namespace probarg {

namespace {

std::string fmt_prob(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string fmt_point(const ArgumentationFramework& af, const MarginalAssignment& m) {
    std::string out;
    const int shown = std::min(af.size(), 8);
    for (int i = 0; i < shown; ++i) {
        if (i) out += " ";
        out += af.name_of(i) + "=" + fmt_prob(m[i]);
    }
    if (af.size() > shown) out += " ...";
    return out;
}

std::string fmt_values(const std::vector<double>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt_prob(v[i]);
    }
    return out + ")";
}

// All 3^n ternary assignments; callers gate on small n.
void for_each_ternary(int n, const std::function<void(const MarginalAssignment&)>& f) {
    std::vector<int> digit(n, 0);
    while (true) {
        std::vector<double> v(n);
        for (int i = 0; i < n; ++i) v[i] = digit[i] * 0.5;
        f(MarginalAssignment(std::move(v)));
        int i = 0;
        while (i < n && ++digit[i] == 3) digit[i++] = 0;
        if (i == n) break;
    }
}

void for_each_labelling(int n, const std::function<void(const Labelling&)>& f) {
    std::vector<int> digit(n, 0);
    while (true) {
        std::vector<Label> l(n);
        for (int i = 0; i < n; ++i) l[i] = static_cast<Label>(digit[i]);
        f(Labelling(std::move(l)));
        int i = 0;
        while (i < n && ++digit[i] == 3) digit[i++] = 0;
        if (i == n) break;
    }
}

struct Suite {
    const ArgumentationFramework& af;
    const VerifyOptions& opt;
    std::vector<PropositionResult> results;
    std::uint64_t salt = 0;

    int member_budget() const { return std::clamp(opt.samples / 20, 10, 500); }
    bool exhaustive_ternary() const { return af.size() <= 4; }

    void run(const std::string& name,
             const std::function<void(PropositionResult&, std::uint64_t)>& body) {
        PropositionResult r;
        r.name = name;
        r.ok = true;
        ++salt;
        try {
            body(r, opt.seed + salt * 0x9e3779b97f4a7c15ull);
        } catch (const TooLargeError&) {
            throw;                              // capacity errors surface to the caller
        } catch (const std::exception& e) {
            r.ok = false;
            r.details = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }

    // Universal implication "every member of A satisfies B": constructed +
    // rejected members, plus the exhaustive ternary scan on small frameworks.
    void inclusion(const std::string& name, PropertyId a, PropertyId b) {
        run(name, [&](PropositionResult& r, std::uint64_t seed) {
            auto fail = [&](const MarginalAssignment& m) {
                r.ok = false;
                const auto& v = check(af, m, b, opt.tol).violations;
                r.details = to_string(a) + " member " + fmt_point(af, m) + " violates " +
                            (v.empty() ? to_string(b) : v.front().constraint);
            };
            Rng rng(seed);
            for (const auto& m : sample_members(af, a, rng, member_budget(), opt.samples)) {
                if (!r.ok) break;
                if (!check(af, m, b, opt.tol).holds) fail(m);
            }
            if (r.ok && exhaustive_ternary())
                for_each_ternary(af.size(), [&](const MarginalAssignment& m) {
                    if (r.ok && check(af, m, a, opt.tol).holds &&
                        !check(af, m, b, opt.tol).holds)
                        fail(m);
                });
        });
    }

    // Checks quantified over arbitrary assignments (not class members).
    void over_points(PropositionResult& r, std::uint64_t seed,
                     const std::function<void(const MarginalAssignment&)>& f) {
        Rng rng(seed);
        for (int t = 0; t < opt.samples && r.ok; ++t) f(random_assignment(rng, af.size()));
        if (r.ok && exhaustive_ternary())
            for_each_ternary(af.size(), [&](const MarginalAssignment& m) {
                if (r.ok) f(m);
            });
    }

    // Ternary assignments: exhaustive on small frameworks, sampled otherwise,
    // always including the congruent assignments of the complete labellings.
    void over_ternary(PropositionResult& r, std::uint64_t seed,
                      const std::function<void(const MarginalAssignment&)>& f) {
        if (exhaustive_ternary()) {
            for_each_ternary(af.size(), [&](const MarginalAssignment& m) {
                if (r.ok || !r.details.empty()) f(m);
            });
        } else {
            Rng rng(seed);
            for (int t = 0; t < opt.samples; ++t) f(random_ternary_assignment(rng, af.size()));
        }
        if (af.size() <= 25)
            for (const Labelling& l : enumerate_complete(af)) f(congruent_assignment(l));
    }

    std::vector<Labelling> admissible_labellings(std::uint64_t seed) {
        std::vector<Labelling> out;
        const int n = af.size();
        if (std::pow(3.0, n) <= 20000) {
            for_each_labelling(n, [&](const Labelling& l) {
                if (is_admissible(af, l)) out.push_back(l);
            });
            return out;
        }
        if (n <= 25)
            for (const Labelling& l : enumerate_complete(af)) out.push_back(l);
        out.emplace_back(n, Label::Undec);
        Rng rng(seed);
        std::uniform_int_distribution<int> tri(0, 2);
        for (int t = 0; t < opt.samples; ++t) {
            std::vector<Label> labels(n);
            for (auto& l : labels) l = static_cast<Label>(tri(rng));
            Labelling l(std::move(labels));
            if (is_admissible(af, l)) out.push_back(std::move(l));
        }
        return out;
    }
};

// Weakly-connected component ids over the attack graph.
std::vector<int> weak_components(const ArgumentationFramework& af) {
    const int n = af.size();
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : af.attacks()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> comp(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = next;
                    queue.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

// A strongly connected component carries a directed odd cycle iff its parity
// 2-coloring (every attack flips the color) is inconsistent.
bool scc_has_odd_cycle(const ArgumentationFramework& af, const std::vector<int>& scc) {
    const int n = af.size();
    std::vector<bool> inside(n, false);
    for (int v : scc) inside[v] = true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : af.attacks()) {
        if (!inside[a] || !inside[b]) continue;
        if (a == b) return true;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> color(n, -1);
    color[scc[0]] = 0;
    std::deque<int> queue{scc[0]};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u]) {
            if (color[w] == -1) {
                color[w] = 1 - color[u];
                queue.push_back(w);
            } else if (color[w] == color[u]) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::vector<PropositionResult> verify_propositions(const ArgumentationFramework& af,
                                                   const VerifyOptions& options) {
    Suite s{af, options, {}, 0};
    const int n = af.size();
    const double tol = options.tol;

    // ── Class inclusion lattice ─────────────────────────────────────────────
    s.inclusion("inclusion_jus_coh", PropertyId::JUS, PropertyId::COH);
    s.inclusion("inclusion_coh_rat", PropertyId::COH, PropertyId::RAT);
    s.inclusion("inclusion_neu_inv", PropertyId::NEU, PropertyId::INV);
    s.inclusion("inclusion_inv_coh", PropertyId::INV, PropertyId::COH);
    s.inclusion("inclusion_inv_sopt", PropertyId::INV, PropertyId::SOPT);
    s.inclusion("inclusion_min_coh", PropertyId::MIN, PropertyId::COH);
    s.inclusion("inclusion_max_opt", PropertyId::MAX, PropertyId::OPT);
    s.inclusion("inclusion_fou_sfou", PropertyId::FOU, PropertyId::SFOU);

    s.run("equivalence_opt_sopt_fou", [&](PropositionResult& r, std::uint64_t seed) {
        s.over_points(r, seed, [&](const MarginalAssignment& m) {
            bool opt_holds = check(af, m, PropertyId::OPT, tol).holds;
            bool parts = check(af, m, PropertyId::SOPT, tol).holds &&
                         check(af, m, PropertyId::FOU, tol).holds;
            if (opt_holds != parts) {
                r.ok = false;
                r.details = "OPT and SOPT+FOU disagree at " + fmt_point(af, m);
            }
        });
    });

    // ── Bridges between labellings and probability classes ─────────────────
    s.run("bridge_epistemic_admissible_sfou", [&](PropositionResult& r, std::uint64_t seed) {
        s.over_points(r, seed, [&](const MarginalAssignment& m) {
            if (is_admissible(af, epistemic_labelling(m, tol)) &&
                !check(af, m, PropertyId::SFOU, tol).holds)
            {
                r.ok = false;
                r.details = "admissible epistemic labelling but SFOU fails at " + fmt_point(af, m);
            }
        });
    });

    s.run("bridge_admissible_rat", [&](PropositionResult& r, std::uint64_t seed) {
        for (const Labelling& l : s.admissible_labellings(seed)) {
            MarginalAssignment m = congruent_assignment(l);
            if (!check(af, m, PropertyId::RAT, tol).holds) {
                r.ok = false;
                r.details = "admissible labelling with non-rational congruent assignment " +
                            fmt_point(af, m);
                break;
            }
        }
    });

    s.run("bridge_complete_jus", [&](PropositionResult& r, std::uint64_t) {
        if (n > 25) return;
        for (const Labelling& l : enumerate_complete(af)) {
            MarginalAssignment m = congruent_assignment(l);
            if (!check(af, m, PropertyId::JUS, tol).holds) {
                r.ok = false;
                r.details = "complete labelling with non-justifiable congruent assignment " +
                            fmt_point(af, m);
                break;
            }
        }
    });

    // Known over-claim: admissible congruents can break OPT (an undec
    // unattacked argument sits at 0.5 < 1).  A found counterexample is
    // expected and does not fail the suite.
    s.run("bridge_admissible_jus", [&](PropositionResult& r, std::uint64_t seed) {
        for (const Labelling& l : s.admissible_labellings(seed)) {
            MarginalAssignment m = congruent_assignment(l);
            auto rep = check(af, m, PropertyId::JUS, tol);
            if (!rep.holds) {
                r.expected_counterexample = true;
                r.details = "admissible congruent assignment " + fmt_point(af, m) +
                            " violates " + rep.violations.front().constraint;
                break;
            }
        }
    });

    s.run("rat_conflict_free", [&](PropositionResult& r, std::uint64_t seed) {
        auto test = [&](const MarginalAssignment& m) {
            if (!r.ok || !check(af, m, PropertyId::RAT, tol).holds) return;
            if (!is_conflict_free(af, epistemic_labelling(m, tol))) {
                r.ok = false;
                r.details = "rational assignment with conflicting extension " + fmt_point(af, m);
            }
        };
        Rng rng(seed);
        for (const auto& m : sample_members(af, PropertyId::RAT, rng, s.member_budget(),
                                            options.samples))
            test(m);
        if (s.exhaustive_ternary())
            for_each_ternary(n, [&](const MarginalAssignment& m) { test(m); });
    });

    // ── Structural consequences of involution ──────────────────────────────
    //
    // A directed odd cycle forces value 0.5 on its entire weakly-connected
    // component (the odd chain pins one argument at 0.5 and the attack
    // equalities propagate it).  When every component carries an odd cycle
    // this is exactly INV ⊆ NEU.
    s.run("odd_cycle_inv_neu", [&](PropositionResult& r, std::uint64_t seed) {
        std::vector<int> comp = weak_components(af);
        std::vector<bool> forced(n, false);
        for (const auto& scc : strongly_connected_components(af))
            if (scc_has_odd_cycle(af, scc))
                for (int i = 0; i < n; ++i)
                    if (comp[i] == comp[scc[0]]) forced[i] = true;

        auto test = [&](const MarginalAssignment& m) {
            if (!r.ok || !check(af, m, PropertyId::INV, tol).holds) return;
            for (int i = 0; i < n; ++i)
                if (forced[i] && std::abs(m[i] - 0.5) > 2 * tol) {
                    r.ok = false;
                    r.details = "involutary member not 0.5 on an odd-cycle component: " +
                                fmt_point(af, m);
                    return;
                }
        };
        Rng rng(seed);
        for (const auto& m : sample_members(af, PropertyId::INV, rng, s.member_budget(),
                                            options.samples))
            test(m);
        if (s.exhaustive_ternary())
            for_each_ternary(n, [&](const MarginalAssignment& m) { test(m); });
    });

    s.run("inv_sibling_equality", [&](PropositionResult& r, std::uint64_t seed) {
        auto test = [&](const MarginalAssignment& m) {
            if (!r.ok || !check(af, m, PropertyId::INV, tol).holds) return;
            const auto& atk = af.attacks();
            for (size_t i = 0; i < atk.size() && r.ok; ++i)
                for (size_t j = i + 1; j < atk.size() && r.ok; ++j) {
                    bool same_target = atk[i].second == atk[j].second;
                    bool same_source = atk[i].first == atk[j].first;
                    if (!same_target && !same_source) continue;
                    int x = same_target ? atk[i].first : atk[i].second;
                    int y = same_target ? atk[j].first : atk[j].second;
                    if (std::abs(m[x] - m[y]) > 2 * tol) {
                        r.ok = false;
                        r.details = std::string("involutary member breaks ") +
                                    (same_target ? "common-target" : "common-source") +
                                    " equality of " + af.name_of(x) + ", " + af.name_of(y) +
                                    ": " + fmt_point(af, m);
                    }
                }
        };
        Rng rng(seed);
        for (const auto& m : sample_members(af, PropertyId::INV, rng, s.member_budget(),
                                            options.samples))
            test(m);
        if (s.exhaustive_ternary())
            for_each_ternary(n, [&](const MarginalAssignment& m) { test(m); });
    });

    s.run("rat_max_empty", [&](PropositionResult& r, std::uint64_t) {
        if (af.attacks().empty()) {
            r.details = "no attacks: the maximal assignment is rational here";
            return;
        }
        // MAX has the single member all-ones; with any attack present it
        // cannot be rational.
        MarginalAssignment ones(std::vector<double>(n, 1.0));
        if (check(af, ones, PropertyId::RAT, tol).holds) {
            r.ok = false;
            r.details = "all-ones assignment is rational despite an attack";
        }
    });

    // ── Completeness characterizations ──────────────────────────────────────
    s.run("def1_labelling_equivalence", [&](PropositionResult& r, std::uint64_t seed) {
        s.over_ternary(r, seed, [&](const MarginalAssignment& m) {
            if (!r.ok) return;
            bool direct = satisfies_completeness_conditions(af, m, tol);
            bool via_labelling = is_complete(af, epistemic_labelling(m, 0.25));
            if (direct != via_labelling) {
                r.ok = false;
                r.details = "defining conditions and labelling route disagree at " +
                            fmt_point(af, m);
            }
        });
    });

    // Forward direction must hold; the reverse direction (ternary + coherent
    // + founded would already be complete) is a known over-claim and any
    // counterexample found is reported as expected.
    s.run("def1_characterization_ter_coh_fou", [&](PropositionResult& r, std::uint64_t seed) {
        s.over_ternary(r, seed, [&](const MarginalAssignment& m) {
            if (!r.ok) return;
            bool complete_fn = satisfies_completeness_conditions(af, m, tol);
            bool conj = check(af, m, PropertyId::TER, tol).holds &&
                        check(af, m, PropertyId::COH, tol).holds &&
                        check(af, m, PropertyId::FOU, tol).holds;
            if (complete_fn && !conj) {
                r.ok = false;
                r.details = "complete probability function outside TER∧COH∧FOU at " +
                            fmt_point(af, m);
            } else if (conj && !complete_fn && !r.expected_counterexample) {
                r.expected_counterexample = true;
                r.details = "TER∧COH∧FOU member that is not complete: " + fmt_point(af, m);
            }
        });
    });

    // ── Restriction / semantics correspondences ─────────────────────────────
    const std::pair<Restriction, Semantics> table[] = {
        {Restriction::None, Semantics::Complete},
        {Restriction::NoHalf, Semantics::Stable},
        {Restriction::MaxOnes, Semantics::Preferred},
        {Restriction::MaxZeros, Semantics::Preferred},
        {Restriction::MaxHalves, Semantics::Grounded},
        {Restriction::MinOnes, Semantics::Grounded},
        {Restriction::MinZeros, Semantics::Grounded},
        {Restriction::MinHalves, Semantics::SemiStable},
    };
    for (const auto& [restriction, semantics] : table) {
        s.run("table2_" + to_string(restriction), [&, restriction = restriction,
                                                   semantics = semantics](
                                                      PropositionResult& r, std::uint64_t) {
            std::vector<std::vector<double>> got, want;
            for (const auto& m : select_by_restriction(af, restriction))
                got.push_back(m.values());
            for (const Labelling& l : select(af, semantics))
                want.push_back(congruent_assignment(l).values());
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want) {
                r.ok = false;
                r.details = to_string(restriction) + " selects " + std::to_string(got.size()) +
                            " assignments, " + to_string(semantics) + " has " +
                            std::to_string(want.size()) + " labellings";
            }
        });
    }

    // ── Convexity ───────────────────────────────────────────────────────────
    for (PropertyId p : kAllProperties) {
        bool expected_violation = p == PropertyId::TER || p == PropertyId::RAT;
        s.run("convexity_" + to_string(p), [&, p, expected_violation](PropositionResult& r,
                                                                      std::uint64_t seed) {
            ConvexityProbe probe = convexity_probe(af, p, options.samples, seed);
            if (!probe.violation_found) return;
            std::string what = "members " + fmt_values(probe.member_a) + " and " +
                               fmt_values(probe.member_b) + " with delta " +
                               fmt_prob(probe.delta) + " give " +
                               fmt_values(probe.combination) + ", violating " +
                               probe.failed_constraint;
            if (expected_violation) {
                r.expected_counterexample = true;
                r.details = what;
            } else {
                r.ok = false;
                r.details = what;
            }
        });
    }

    // ── Optimization routes ─────────────────────────────────────────────────
    s.run("maxent_agreement", [&](PropositionResult& r, std::uint64_t) {
        if (n > 8) {
            r.details = "skipped: joint oracle capped at 8 arguments here";
            return;
        }
        for (PropertyId p : {PropertyId::COH, PropertyId::JUS}) {
            CompletionResult reduced =
                max_entropy_completion(af, {p}, PartialAssignment(n));
            JointDistribution joint = brute_force_joint_maxent(af, {p}, PartialAssignment(n));
            MarginalAssignment via_joint = marginals(joint);
            double worst = 0;
            for (int i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(via_joint[i] - reduced.assignment->at(i)));
            double entropy_gap = std::abs(entropy(joint) - reduced.entropy);
            if (worst > 1e-5 || entropy_gap > 1e-5) {
                r.ok = false;
                r.details = "under " + to_string(p) + ": marginal gap " + fmt_prob(worst) +
                            ", entropy gap " + fmt_prob(entropy_gap);
                return;
            }
        }
    });

    s.run("grounded_maxent_jus", [&](PropositionResult& r, std::uint64_t) {
        Labelling via_entropy = grounded_via_maxent(af);
        std::vector<Labelling> grounded = select(af, Semantics::Grounded);
        if (grounded.size() != 1 || !(grounded.front() == via_entropy)) {
            r.ok = false;
            r.details = "max-entropy labelling disagrees with the grounded selection";
        }
    });

    return s.results;
}

} // namespace probarg
