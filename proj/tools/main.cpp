// probarg — command-line front end.
//
// Subcommands: semantics, epistemic, check, complete, verify.  Shared flags:
// --file, --format (apx|tgf), --tol, --output (text|json).
//
// Exit codes: 0 success, 1 semantic negative (property FAIL, infeasible
// completion, failed proposition), 2 parse error (unreadable or malformed
// input file), 3 invalid usage or capacity (unknown names, partial assignment
// where a total one is required, unsupported property, framework too large
// for an exhaustive operation).
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "probarg/assignment.hpp"
#include "probarg/errors.hpp"
#include "probarg/framework.hpp"
#include "probarg/labelling.hpp"
#include "probarg/maxent.hpp"
#include "probarg/properties.hpp"
#include "probarg/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace probarg;

// Local error kinds so the top-level handler can map exceptions to the exit
// contract without guessing where a library Error came from.
struct FileError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };

struct SharedOpts {
    std::string file;
    std::string format = "apx";
    double tol = 1e-9;
    bool tol_given = false;
    std::string output = "text";

    bool json_out() const { return output == "json"; }
};

std::string fmt_prob(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot read file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

ArgumentationFramework load_framework(const SharedOpts& o) {
    std::string text = read_file(o.file);
    try {
        return o.format == "tgf" ? parse_tgf(text) : parse_apx(text);
    } catch (const Error& e) {
        throw FileError("cannot parse '" + o.file + "': " + e.what());
    }
}

PartialAssignment load_assignment(const ArgumentationFramework& af, const std::string& path) {
    // Unknown argument names propagate as UnknownArgumentError (exit 3);
    // malformed lines or out-of-range probabilities are parse errors (exit 2).
    return parse_assignment(af, read_file(path));
}

MarginalAssignment require_total(const ArgumentationFramework& af, const PartialAssignment& pi,
                                 const std::string& path) {
    if (!pi.is_total()) {
        int missing = pi.size() - pi.defined_count();
        std::string example;
        for (int i = 0; i < pi.size(); ++i)
            if (!pi.has(i)) {
                example = af.name_of(i);
                break;
            }
        throw UsageError("'" + path + "' must assign every argument (" +
                         std::to_string(missing) + " missing, e.g. '" + example + "')");
    }
    return to_marginal(pi);
}

std::set<PropertyId> parse_property_list(const std::string& list) {
    std::set<PropertyId> out;
    if (list == "all") {
        out.insert(kAllProperties.begin(), kAllProperties.end());
        return out;
    }
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw UsageError("empty entry in property list '" + list + "'");
        item = item.substr(b, e - b + 1);
        auto p = property_from_string(item);
        if (!p) throw UsageError("unknown property '" + item + "'");
        out.insert(*p);
    }
    if (out.empty()) throw UsageError("empty property list");
    return out;
}

std::string join_names(const ArgumentationFramework& af, const std::vector<int>& idxs) {
    std::string out;
    for (int i : idxs) out += " " + af.name_of(i);
    return out;
}

void print_labelling(std::ostream& os, const ArgumentationFramework& af, const Labelling& l) {
    os << "IN:" << join_names(af, l.in_set()) << "\n";
    os << "OUT:" << join_names(af, l.out_set()) << "\n";
    os << "UNDEC:" << join_names(af, l.undec_set()) << "\n";
}

json labelling_json(const ArgumentationFramework& af, const Labelling& l) {
    auto names = [&](const std::vector<int>& idxs) {
        json arr = json::array();
        for (int i : idxs) arr.push_back(af.name_of(i));
        return arr;
    };
    return json{{"in", names(l.in_set())}, {"out", names(l.out_set())},
                {"undec", names(l.undec_set())}};
}

// ── Commands ────────────────────────────────────────────────────────────────

int cmd_semantics(const SharedOpts& shared, const std::string& semantics_name) {
    ArgumentationFramework af = load_framework(shared);
    std::vector<Labelling> labellings = select(af, semantics_from_string(semantics_name));
    if (shared.json_out()) {
        json out;
        out["labellings"] = json::array();
        for (const Labelling& l : labellings) out["labellings"].push_back(labelling_json(af, l));
        std::cout << out.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < labellings.size(); ++i) {
            if (i) std::cout << "\n";
            print_labelling(std::cout, af, labellings[i]);
        }
    }
    return 0;
}

int cmd_epistemic(const SharedOpts& shared, const std::string& assignment_path) {
    ArgumentationFramework af = load_framework(shared);
    MarginalAssignment m = require_total(af, load_assignment(af, assignment_path),
                                         assignment_path);
    Labelling l = epistemic_labelling(m, shared.tol);
    std::vector<int> extension = l.in_set();
    if (shared.json_out()) {
        json out;
        out["labellings"] = json::array({labelling_json(af, l)});
        out["extension"] = json::array();
        for (int i : extension) out["extension"].push_back(af.name_of(i));
        std::cout << out.dump(2) << "\n";
    } else {
        print_labelling(std::cout, af, l);
        std::cout << "EXTENSION:" << join_names(af, extension) << "\n";
    }
    return 0;
}

int cmd_check(const SharedOpts& shared, const std::string& assignment_path,
              const std::string& properties) {
    ArgumentationFramework af = load_framework(shared);
    MarginalAssignment m = require_total(af, load_assignment(af, assignment_path),
                                         assignment_path);
    std::set<PropertyId> requested = parse_property_list(properties);

    bool all_pass = true;
    json report = json::array();
    std::ostringstream text;
    for (PropertyId p : kAllProperties) {
        if (!requested.count(p)) continue;
        PropertyReport rep = check(af, m, p, shared.tol);
        all_pass = all_pass && rep.holds;
        text << to_string(p) << ": " << (rep.holds ? "PASS" : "FAIL") << "\n";
        json violations = json::array();
        for (const Violation& v : rep.violations) {
            text << "  " << v.constraint << " (lhs " << fmt_prob(v.lhs) << ", rhs "
                 << fmt_prob(v.rhs) << ")\n";
            violations.push_back(json{{"constraint", v.constraint},
                                      {"arguments", v.arguments},
                                      {"lhs", v.lhs},
                                      {"rhs", v.rhs}});
        }
        report.push_back(json{{"id", to_string(p)}, {"holds", rep.holds},
                              {"violations", violations}});
    }
    if (shared.json_out())
        std::cout << json{{"properties", report}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return all_pass ? 0 : 1;
}

int cmd_complete(const SharedOpts& shared, const std::string& partial_path,
                 const std::string& properties) {
    ArgumentationFramework af = load_framework(shared);
    PartialAssignment pi = load_assignment(af, partial_path);
    std::set<PropertyId> props = parse_property_list(properties);
    double solver_tol = shared.tol_given ? shared.tol : 1e-8;
    CompletionResult res = max_entropy_completion(af, props, pi, solver_tol);

    bool optimal = res.status == CompletionResult::Status::Optimal;
    if (shared.json_out()) {
        json completion;
        completion["status"] = optimal ? "optimal" : "infeasible";
        if (res.assignment) {
            json values;
            for (int i = 0; i < af.size(); ++i) values[af.name_of(i)] = res.assignment->at(i);
            completion["assignment"] = values;
        } else {
            completion["assignment"] = nullptr;
        }
        completion["entropy"] = res.entropy;
        completion["kkt"] = res.kkt_residual;
        completion["iterations"] = res.iterations;
        completion["certificate"] = res.certificate;
        std::cout << json{{"completion", completion}}.dump(2) << "\n";
    } else {
        if (res.assignment) std::cout << format_assignment(af, *res.assignment);
        std::cout << "# entropy " << fmt_prob(res.entropy) << "\n";
        std::cout << "# status " << (optimal ? "optimal" : "infeasible") << "\n";
        std::cout << "# kkt " << fmt_prob(res.kkt_residual) << "\n";
        for (const std::string& row : res.certificate)
            std::cout << "# violated: " << row << "\n";
    }
    return optimal ? 0 : 1;
}

int cmd_verify(const SharedOpts& shared, int samples, std::uint64_t seed) {
    ArgumentationFramework af = load_framework(shared);
    VerifyOptions options;
    options.samples = samples;
    options.seed = seed;
    options.tol = shared.tol;
    std::vector<PropositionResult> results = verify_propositions(af, options);

    bool all_ok = true;
    json report = json::array();
    std::ostringstream text;
    for (const PropositionResult& r : results) {
        all_ok = all_ok && r.ok;
        if (!r.ok)
            text << r.name << ": COUNTEREXAMPLE " << r.details << "\n";
        else if (r.expected_counterexample)
            text << r.name << ": OK (expected counterexample: " << r.details << ")\n";
        else
            text << r.name << ": OK" << (r.details.empty() ? "" : " (" + r.details + ")") << "\n";
        report.push_back(json{{"name", r.name},
                              {"ok", r.ok},
                              {"expected_counterexample", r.expected_counterexample},
                              {"details", r.details}});
    }
    if (shared.json_out())
        std::cout << json{{"verify", report}}.dump(2) << "\n";
    else
        std::cout << text.str();
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"probarg: labelling semantics, probability-function properties, and "
                 "max-entropy completion for abstract argumentation frameworks"};
    app.require_subcommand(1);

    SharedOpts shared;
    auto add_shared = [&](CLI::App* cmd) {
        cmd->add_option("--file", shared.file, "framework file")->required();
        cmd->add_option("--format", shared.format, "framework file format")
            ->check(CLI::IsMember({"apx", "tgf"}));
        cmd->add_option("--tol", shared.tol, "comparison tolerance (default 1e-9)");
        cmd->add_option("--output", shared.output, "output mode")
            ->check(CLI::IsMember({"text", "json"}));
    };

    std::string semantics_name, assignment_path, partial_path;
    std::string check_properties = "all", complete_properties;
    int samples = 10000;
    std::uint64_t seed = 42;

    CLI::App* sem = app.add_subcommand("semantics", "enumerate labellings under a semantics");
    add_shared(sem);
    sem->add_option("--semantics", semantics_name, "semantics to apply")
        ->required()
        ->check(CLI::IsMember({"grounded", "complete", "preferred", "stable", "semi-stable"}));

    CLI::App* epi = app.add_subcommand("epistemic",
                                       "epistemic labelling/extension of an assignment");
    add_shared(epi);
    epi->add_option("--assignment", assignment_path, "total assignment file")->required();

    CLI::App* chk = app.add_subcommand("check", "check properties of an assignment");
    add_shared(chk);
    chk->add_option("--assignment", assignment_path, "total assignment file")->required();
    chk->add_option("--properties", check_properties,
                    "comma-separated property IDs, or 'all' (default)");

    CLI::App* cmp = app.add_subcommand("complete",
                                       "max-entropy completion of a partial assignment");
    add_shared(cmp);
    cmp->add_option("--partial", partial_path, "partial assignment file")->required();
    cmp->add_option("--properties", complete_properties, "comma-separated property IDs")
        ->required();

    CLI::App* ver = app.add_subcommand("verify", "run the proposition suite on a framework");
    add_shared(ver);
    ver->add_option("--samples", samples, "sampling budget per proposition")
        ->check(CLI::PositiveNumber);
    ver->add_option("--seed", seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;   // 0 covers --help/--version; anything else is usage
    }
    shared.tol_given = app.get_subcommands().front()->count("--tol") > 0;

    try {
        if (*sem) return cmd_semantics(shared, semantics_name);
        if (*epi) return cmd_epistemic(shared, assignment_path);
        if (*chk) return cmd_check(shared, assignment_path, check_properties);
        if (*cmp) return cmd_complete(shared, partial_path, complete_properties);
        return cmd_verify(shared, samples, seed);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnknownArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedPropertyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
