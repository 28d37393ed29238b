// Abstract argumentation frameworks: a finite set of named arguments and a
// binary attack relation.  Arguments are addressed by dense index in
// first-declaration order; names are only touched at the I/O boundary.
#ifndef PROBARG_FRAMEWORK_HPP
#define PROBARG_FRAMEWORK_HPP

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace probarg {

class ArgumentationFramework {
public:
    ArgumentationFramework() = default;

    // Validates: names non-empty, [A-Za-z0-9_]+ only, no duplicates; attack
    // endpoints declared.  Duplicate attack pairs are collapsed.
    ArgumentationFramework(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& attacks);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& argument_names() const { return names_; }
    const std::string& name_of(int idx) const { return names_.at(idx); }

    // Throws UnknownArgumentError; find() is the non-throwing variant.
    int index_of(std::string_view name) const;
    std::optional<int> find(std::string_view name) const;

    const std::vector<std::pair<int, int>>& attacks() const { return attacks_; }
    bool has_attack(int attacker, int target) const;
    const std::vector<int>& attackers_of(int idx) const { return attackers_.at(idx); }
    const std::vector<int>& targets_of(int idx) const { return targets_.at(idx); }
    bool is_unattacked(int idx) const { return attackers_.at(idx).empty(); }

    bool operator==(const ArgumentationFramework& other) const {
        return names_ == other.names_ && attacks_ == other.attacks_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, int>> attacks_;      // declaration order, deduplicated
    std::vector<std::vector<int>> attackers_;       // attackers_[b] = {a : a -> b}
    std::vector<std::vector<int>> targets_;         // targets_[a]   = {b : a -> b}
};

// ── Text formats ────────────────────────────────────────────────────────────
//
// APX: statements "arg(<name>)." and "att(<a>,<b>).", any whitespace between
// them, '%' starts a comment line.  TGF: one node id per line, a lone '#'
// separator, then "<src> <dst>" edge lines.

ArgumentationFramework parse_apx(std::string_view text);
ArgumentationFramework parse_tgf(std::string_view text);
std::string serialize_apx(const ArgumentationFramework& af);
std::string serialize_tgf(const ArgumentationFramework& af);

// Name-level convenience wrapper around attackers_of.
std::vector<std::string> attackers(const ArgumentationFramework& af,
                                   std::string_view argument);

// True iff some directed cycle visits an odd number of distinct arguments
// (a self-attack counts, length 1).  SCC decomposition + parity 2-coloring:
// an SCC contains an odd cycle iff its underlying parity assignment is
// inconsistent.
bool has_odd_cycle(const ArgumentationFramework& af);

// Tarjan SCCs, exposed because tests cross-check the odd-cycle reduction.
std::vector<std::vector<int>> strongly_connected_components(const ArgumentationFramework& af);

} // namespace probarg

#endif
