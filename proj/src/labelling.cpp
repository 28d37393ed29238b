#include "probarg/labelling.hpp"

#include <algorithm>
#include <cstdint>

#include "probarg/errors.hpp"

namespace probarg {

std::vector<int> Labelling::indices_with(Label l) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == l) out.push_back(i);
    return out;
}

std::string to_string(Semantics s) {
    switch (s) {
        case Semantics::Grounded: return "grounded";
        case Semantics::Complete: return "complete";
        case Semantics::Preferred: return "preferred";
        case Semantics::Stable: return "stable";
        case Semantics::SemiStable: return "semi-stable";
    }
    return "?";
}

Semantics semantics_from_string(std::string_view name) {
    if (name == "grounded") return Semantics::Grounded;
    if (name == "complete") return Semantics::Complete;
    if (name == "preferred") return Semantics::Preferred;
    if (name == "stable") return Semantics::Stable;
    if (name == "semi-stable") return Semantics::SemiStable;
    throw Error("unknown semantics '" + std::string(name) + "'");
}

// ── Legality conditions ─────────────────────────────────────────────────────

bool is_conflict_free(const ArgumentationFramework& af, const Labelling& l) {
    for (const auto& [a, b] : af.attacks())
        if (l[a] == Label::In && l[b] == Label::In) return false;
    return true;
}

bool is_admissible(const ArgumentationFramework& af, const Labelling& l) {
    for (int v = 0; v < af.size(); ++v) {
        if (l[v] == Label::In) {
            for (int a : af.attackers_of(v))
                if (l[a] != Label::Out) return false;
        } else if (l[v] == Label::Out) {
            bool has_in_attacker = false;
            for (int a : af.attackers_of(v))
                if (l[a] == Label::In) { has_in_attacker = true; break; }
            if (!has_in_attacker) return false;
        }
    }
    return true;
}

bool is_complete(const ArgumentationFramework& af, const Labelling& l) {
    if (!is_admissible(af, l)) return false;
    for (int v = 0; v < af.size(); ++v) {
        if (l[v] != Label::Undec) continue;
        bool has_in_attacker = false, has_non_out_attacker = false;
        for (int a : af.attackers_of(v)) {
            if (l[a] == Label::In) has_in_attacker = true;
            if (l[a] != Label::Out) has_non_out_attacker = true;
        }
        if (has_in_attacker || !has_non_out_attacker) return false;
    }
    return true;
}

// ── Enumeration ─────────────────────────────────────────────────────────────
//
// Backtracking over partial labellings with unit propagation.  State codes:
// -1 unassigned, otherwise the Label value.  assign() applies the forced
// consequences of each decision until a fixed point or a conflict:
//   * unattacked argument       -> In,
//   * argument with In attacker -> Out,
//   * In argument               -> all attackers and targets Out,
//   * Out argument              -> if all-but-one attackers are assigned
//                                  non-In, the last one must be In,
//   * Undec argument            -> if all attackers assigned and all Out,
//                                  conflict; if exactly one unassigned and
//                                  the rest Out, it must be Undec (In would
//                                  force this argument Out).

namespace {

struct Enumerator {
    const ArgumentationFramework& af;
    std::vector<int8_t> state;
    std::vector<Labelling> found;

    explicit Enumerator(const ArgumentationFramework& a)
        : af(a), state(a.size(), -1) {}

    bool assign(int v, Label l, std::vector<int>& trail) {
        if (state[v] != -1) return state[v] == static_cast<int8_t>(l);
        state[v] = static_cast<int8_t>(l);
        trail.push_back(v);

        if (l == Label::In) {
            for (int a : af.attackers_of(v))
                if (!assign(a, Label::Out, trail)) return false;
            for (int t : af.targets_of(v))
                if (!assign(t, Label::Out, trail)) return false;
            // v's own legality needs all attackers Out — enforced above.
        }
        // Re-examine the arguments whose constraints mention v.
        if (!recheck(v, trail)) return false;
        for (int t : af.targets_of(v))
            if (!recheck(t, trail)) return false;
        return true;
    }

    // Derive what the current assignment of b's attackers forces for b.
    bool recheck(int b, std::vector<int>& trail) {
        const auto& atks = af.attackers_of(b);
        int unassigned = -1, num_unassigned = 0;
        bool any_in = false, any_undec = false;
        for (int a : atks) {
            if (state[a] == -1) { unassigned = a; ++num_unassigned; }
            else if (state[a] == static_cast<int8_t>(Label::In)) any_in = true;
            else if (state[a] == static_cast<int8_t>(Label::Undec)) any_undec = true;
        }

        if (state[b] == -1) {
            if (atks.empty()) return assign(b, Label::In, trail);
            if (any_in) return assign(b, Label::Out, trail);
            if (num_unassigned == 0)
                return assign(b, any_undec ? Label::Undec : Label::In, trail);
            return true;
        }
        if (state[b] == static_cast<int8_t>(Label::In)) {
            // All attackers must be Out.
            if (any_in || any_undec) return false;
            for (int a : atks)
                if (state[a] == -1 && !assign(a, Label::Out, trail)) return false;
            return true;
        }
        if (state[b] == static_cast<int8_t>(Label::Out)) {
            if (any_in) return true;
            if (num_unassigned == 0) return false;              // no In attacker possible
            if (num_unassigned == 1) return assign(unassigned, Label::In, trail);
            return true;
        }
        // b is Undec: no In attacker, at least one non-Out attacker.
        if (any_in) return false;
        if (any_undec) return true;
        if (num_unassigned == 0) return false;                  // all attackers Out
        if (num_unassigned == 1) return assign(unassigned, Label::Undec, trail);
        return true;
    }

    void undo(std::vector<int>& trail, size_t mark) {
        while (trail.size() > mark) {
            state[trail.back()] = -1;
            trail.pop_back();
        }
    }

    void search(std::vector<int>& trail) {
        int v = -1;
        for (int i = 0; i < af.size(); ++i)
            if (state[i] == -1) { v = i; break; }
        if (v == -1) {
            std::vector<Label> labels(state.size());
            for (size_t i = 0; i < state.size(); ++i) labels[i] = static_cast<Label>(state[i]);
            Labelling l(std::move(labels));
            if (is_complete(af, l)) found.push_back(std::move(l));
            return;
        }
        for (Label choice : {Label::In, Label::Out, Label::Undec}) {
            size_t mark = trail.size();
            if (assign(v, choice, trail)) search(trail);
            undo(trail, mark);
        }
    }

    void run() {
        std::vector<int> trail;
        // Root propagation: unattacked arguments are forced In.
        for (int i = 0; i < af.size(); ++i) {
            if (af.is_unattacked(i) && state[i] == -1) {
                if (!assign(i, Label::In, trail)) return;
            }
        }
        search(trail);
    }
};

} // namespace

std::vector<Labelling> enumerate_complete(const ArgumentationFramework& af) {
    if (af.size() > 25)
        throw TooLargeError("complete-labelling enumeration capped at 25 arguments, got " +
                            std::to_string(af.size()));
    Enumerator e(af);
    e.run();
    std::sort(e.found.begin(), e.found.end());
    return e.found;
}

Labelling grounded_fixpoint(const ArgumentationFramework& af) {
    const int n = af.size();
    Labelling l(n, Label::Undec);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (l[v] != Label::Undec) continue;
            bool all_out = true, any_in = false;
            for (int a : af.attackers_of(v)) {
                if (l[a] != Label::Out) all_out = false;
                if (l[a] == Label::In) any_in = true;
            }
            if (any_in) { l[v] = Label::Out; changed = true; }
            else if (all_out) { l[v] = Label::In; changed = true; }
        }
    }
    return l;
}

// ── Selection ───────────────────────────────────────────────────────────────

namespace {

std::uint32_t label_mask(const Labelling& l, Label which) {
    std::uint32_t m = 0;
    for (int i = 0; i < l.size(); ++i)
        if (l[i] == which) m |= (1u << i);
    return m;
}

bool strict_subset(std::uint32_t a, std::uint32_t b) {
    return a != b && (a & ~b) == 0;
}

// Keep the labellings whose `which`-set is inclusion-minimal (or -maximal).
std::vector<Labelling> inclusion_filter(const std::vector<Labelling>& all, Label which,
                                        bool maximal) {
    std::vector<std::uint32_t> masks;
    masks.reserve(all.size());
    for (const auto& l : all) masks.push_back(label_mask(l, which));

    std::vector<Labelling> kept;
    for (size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < all.size() && !dominated; ++j) {
            if (maximal ? strict_subset(masks[i], masks[j])
                        : strict_subset(masks[j], masks[i]))
                dominated = true;
        }
        if (!dominated) kept.push_back(all[i]);
    }
    return kept;
}

} // namespace

std::vector<Labelling> select(const ArgumentationFramework& af, Semantics semantics) {
    std::vector<Labelling> all = enumerate_complete(af);
    switch (semantics) {
        case Semantics::Complete:
            return all;
        case Semantics::Grounded:
            return inclusion_filter(all, Label::In, /*maximal=*/false);
        case Semantics::Preferred:
            return inclusion_filter(all, Label::In, /*maximal=*/true);
        case Semantics::Stable: {
            std::vector<Labelling> kept;
            for (const auto& l : all)
                if (l.undec_set().empty()) kept.push_back(l);
            return kept;
        }
        case Semantics::SemiStable:
            return inclusion_filter(all, Label::Undec, /*maximal=*/false);
    }
    return {};
}

} // namespace probarg
