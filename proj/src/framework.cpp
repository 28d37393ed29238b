#include "probarg/framework.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "probarg/errors.hpp"

namespace probarg {

namespace {

bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_name_char);
}

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    for (auto& l : lines)
        if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    return lines;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

ArgumentationFramework::ArgumentationFramework(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
    names_ = std::move(names);
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        if (!valid_name(names_[i]))
            throw Error("invalid argument name '" + names_[i] + "'");
        if (!index_.emplace(names_[i], i).second)
            throw DuplicateArgumentError("argument '" + names_[i] + "' declared twice");
    }
    attackers_.resize(names_.size());
    targets_.resize(names_.size());
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : attacks) {
        int ia = index_of(a), ib = index_of(b);
        if (!seen.insert({ia, ib}).second) continue;
        attacks_.emplace_back(ia, ib);
        targets_[ia].push_back(ib);
        attackers_[ib].push_back(ia);
    }
}

int ArgumentationFramework::index_of(std::string_view name) const {
    auto found = find(name);
    if (!found)
        throw UnknownArgumentError("unknown argument '" + std::string(name) + "'");
    return *found;
}

std::optional<int> ArgumentationFramework::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool ArgumentationFramework::has_attack(int attacker, int target) const {
    const auto& ts = targets_.at(attacker);
    return std::find(ts.begin(), ts.end(), target) != ts.end();
}

// ── APX ─────────────────────────────────────────────────────────────────────

namespace {

// One "arg(x)" / "att(x,y)" statement, already stripped of the trailing dot.
struct ApxStatement {
    bool is_att = false;
    std::string first, second;
};

ApxStatement parse_apx_statement(std::string_view stmt) {
    std::string_view s = trim(stmt);
    auto malformed = [&] { throw MalformedLineError("malformed statement '" + std::string(trim(stmt)) + ".'"); };

    ApxStatement result;
    if (s.substr(0, 3) == "arg") result.is_att = false;
    else if (s.substr(0, 3) == "att") result.is_att = true;
    else malformed();
    s = trim(s.substr(3));

    if (s.empty() || s.front() != '(' || s.back() != ')') malformed();
    s = trim(s.substr(1, s.size() - 2));

    if (!result.is_att) {
        if (!valid_name(s)) malformed();
        result.first = std::string(s);
        return result;
    }
    size_t comma = s.find(',');
    if (comma == std::string_view::npos) malformed();
    std::string_view a = trim(s.substr(0, comma));
    std::string_view b = trim(s.substr(comma + 1));
    if (!valid_name(a) || !valid_name(b)) malformed();
    result.first = std::string(a);
    result.second = std::string(b);
    return result;
}

} // namespace

ArgumentationFramework parse_apx(std::string_view text) {
    // Drop comment lines, then split the remaining stream on '.' — several
    // statements may share a line.
    std::string stream;
    for (auto line : split_lines(text)) {
        std::string_view t = trim(line);
        if (!t.empty() && t.front() == '%') continue;
        stream.append(line);
        stream.push_back('\n');
    }

    std::vector<std::string> names;
    std::set<std::string> declared;
    std::vector<std::pair<std::string, std::string>> attacks;

    size_t pos = 0;
    while (pos < stream.size()) {
        while (pos < stream.size() && std::isspace(static_cast<unsigned char>(stream[pos]))) ++pos;
        if (pos >= stream.size()) break;
        size_t dot = stream.find('.', pos);
        if (dot == std::string::npos)
            throw MalformedLineError("statement without terminating '.': '" +
                                     std::string(trim(std::string_view(stream).substr(pos))) + "'");
        ApxStatement st = parse_apx_statement(std::string_view(stream).substr(pos, dot - pos));
        if (!st.is_att) {
            if (!declared.insert(st.first).second)
                throw DuplicateArgumentError("argument '" + st.first + "' declared twice");
            names.push_back(st.first);
        } else {
            if (!declared.count(st.first))
                throw UnknownArgumentError("attack references undeclared argument '" + st.first + "'");
            if (!declared.count(st.second))
                throw UnknownArgumentError("attack references undeclared argument '" + st.second + "'");
            attacks.emplace_back(st.first, st.second);
        }
        pos = dot + 1;
    }
    return ArgumentationFramework(std::move(names), attacks);
}

std::string serialize_apx(const ArgumentationFramework& af) {
    std::ostringstream out;
    for (const auto& name : af.argument_names()) out << "arg(" << name << ").\n";
    for (const auto& [a, b] : af.attacks())
        out << "att(" << af.name_of(a) << "," << af.name_of(b) << ").\n";
    return out.str();
}

// ── TGF ─────────────────────────────────────────────────────────────────────

ArgumentationFramework parse_tgf(std::string_view text) {
    auto lines = split_lines(text);

    size_t separator = lines.size();
    for (size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]) == "#") { separator = i; break; }
    }
    if (separator == lines.size())
        throw MissingSeparatorError("TGF input has no '#' separator line");

    std::vector<std::string> names;
    std::set<std::string> declared;
    for (size_t i = 0; i < separator; ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        // First token is the node id; any remainder is a display label.
        if (!valid_name(toks[0]))
            throw MalformedLineError("invalid node id '" + std::string(toks[0]) + "'");
        std::string name(toks[0]);
        if (!declared.insert(name).second)
            throw DuplicateArgumentError("node '" + name + "' declared twice");
        names.push_back(std::move(name));
    }

    std::vector<std::pair<std::string, std::string>> attacks;
    for (size_t i = separator + 1; i < lines.size(); ++i) {
        auto toks = tokens_of(lines[i]);
        if (toks.empty()) continue;
        if (toks.size() < 2)
            throw MalformedLineError("edge line needs two node ids: '" +
                                     std::string(trim(lines[i])) + "'");
        for (int k = 0; k < 2; ++k)
            if (!declared.count(std::string(toks[k])))
                throw UnknownArgumentError("edge references unknown node '" +
                                           std::string(toks[k]) + "'");
        attacks.emplace_back(std::string(toks[0]), std::string(toks[1]));
    }
    return ArgumentationFramework(std::move(names), attacks);
}

std::string serialize_tgf(const ArgumentationFramework& af) {
    std::ostringstream out;
    for (const auto& name : af.argument_names()) out << name << "\n";
    out << "#\n";
    for (const auto& [a, b] : af.attacks())
        out << af.name_of(a) << " " << af.name_of(b) << "\n";
    return out.str();
}

std::vector<std::string> attackers(const ArgumentationFramework& af,
                                   std::string_view argument) {
    std::vector<std::string> result;
    for (int a : af.attackers_of(af.index_of(argument))) result.push_back(af.name_of(a));
    return result;
}

// ── Cycle structure ─────────────────────────────────────────────────────────

std::vector<std::vector<int>> strongly_connected_components(const ArgumentationFramework& af) {
    const int n = af.size();
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int counter = 0;

    // Iterative Tarjan; frame.second = position in the target list.
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<std::pair<int, size_t>> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge == 0) {
                index[v] = lowlink[v] = counter++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            const auto& ts = af.targets_of(v);
            if (edge < ts.size()) {
                int w = ts[edge++];
                if (index[w] == -1) {
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    std::vector<int> component;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component.push_back(w);
                    } while (w != v);
                    components.push_back(std::move(component));
                }
                int finished = v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().first] =
                        std::min(lowlink[frames.back().first], lowlink[finished]);
            }
        }
    }
    return components;
}

bool has_odd_cycle(const ArgumentationFramework& af) {
    const int n = af.size();
    std::vector<int> component_of(n, -1);
    auto components = strongly_connected_components(af);
    for (size_t c = 0; c < components.size(); ++c)
        for (int v : components[c]) component_of[v] = static_cast<int>(c);

    // Within one strongly connected component every closed walk can be
    // decomposed into simple cycles, so an odd walk exists iff an odd simple
    // cycle does.  A directed BFS 2-coloring is consistent iff all walks are
    // even.
    std::vector<int> color(n, -1);
    for (const auto& component : components) {
        int start = component[0];
        color[start] = 0;
        std::vector<int> queue{start};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int w : af.targets_of(v)) {
                if (component_of[w] != component_of[v]) continue;
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    queue.push_back(w);
                }
            }
        }
        for (int v : component) {
            for (int w : af.targets_of(v)) {
                if (component_of[w] != component_of[v]) continue;
                if (color[v] == color[w]) return true;   // odd closed walk
            }
        }
    }
    return false;
}

} // namespace probarg
