// Three-valued labellings and the classical semantics defined through them.
//
// A labelling maps every argument to in/out/undec.  Complete labellings are
// the fixed points of the usual legality conditions; grounded, preferred,
// stable and semi-stable are selected among them by set-inclusion criteria
// on their in/undec sets.
#ifndef PROBARG_LABELLING_HPP
#define PROBARG_LABELLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "probarg/framework.hpp"

namespace probarg {

enum class Label : std::uint8_t { In = 0, Out = 1, Undec = 2 };

class Labelling {
public:
    Labelling() = default;
    Labelling(int n, Label fill) : labels_(n, fill) {}
    explicit Labelling(std::vector<Label> labels) : labels_(std::move(labels)) {}

    int size() const { return static_cast<int>(labels_.size()); }
    Label at(int idx) const { return labels_.at(idx); }
    Label& operator[](int idx) { return labels_[idx]; }
    Label operator[](int idx) const { return labels_[idx]; }

    std::vector<int> in_set() const { return indices_with(Label::In); }
    std::vector<int> out_set() const { return indices_with(Label::Out); }
    std::vector<int> undec_set() const { return indices_with(Label::Undec); }

    bool operator==(const Labelling& other) const { return labels_ == other.labels_; }
    // Lexicographic by argument index with In < Out < Undec.
    bool operator<(const Labelling& other) const { return labels_ < other.labels_; }

private:
    std::vector<int> indices_with(Label l) const;
    std::vector<Label> labels_;
};

enum class Semantics { Grounded, Complete, Preferred, Stable, SemiStable };

std::string to_string(Semantics s);
// Accepts "grounded", "complete", "preferred", "stable", "semi-stable".
Semantics semantics_from_string(std::string_view name);

// Legality predicates.  All require l.size() == af.size().
bool is_conflict_free(const ArgumentationFramework& af, const Labelling& l);
bool is_admissible(const ArgumentationFramework& af, const Labelling& l);
bool is_complete(const ArgumentationFramework& af, const Labelling& l);

// All complete labellings, sorted lexicographically (In < Out < Undec).
// Backtracking with constraint propagation; throws TooLargeError for n > 25.
std::vector<Labelling> enumerate_complete(const ArgumentationFramework& af);

// The unique grounded labelling via the monotone fixpoint construction;
// no size cap.
Labelling grounded_fixpoint(const ArgumentationFramework& af);

// Complete labellings matching the given semantics.  Maximal/minimal always
// means set inclusion on the relevant label set.
std::vector<Labelling> select(const ArgumentationFramework& af, Semantics semantics);

} // namespace probarg

#endif
