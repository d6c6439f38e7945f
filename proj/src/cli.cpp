#include "rbdq/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rbdq/classify.hpp"
#include "rbdq/errors.hpp"
#include "rbdq/fixtures.hpp"
#include "rbdq/groebner.hpp"
#include "rbdq/json_io.hpp"
#include "rbdq/polysystem.hpp"
#include "rbdq/selftest.hpp"

namespace rbdq {

namespace {

/// Bad flags, unreadable files and malformed content: exit 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    std::string weight = "0";
    std::string order = "grevlex";
    std::string format = "text";
    std::string grid = "-1,0,1";
    std::string out;
    std::string check;
    std::string transcribed;
    std::string label_map;
    std::string table;
    std::size_t max_pairs = BuchbergerLimits{}.max_pairs;
    unsigned max_degree = BuchbergerLimits{}.max_degree;
    std::size_t max_examples = 25;
    bool saturate = false;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot read " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool looks_like_json(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && text[pos] == '{';
}

/// Weight for commands that need a number ("sym" is rejected).
Scalar numeric_weight(const std::string& text) {
    const WeightMode mode = WeightMode::parse(text);
    if (mode.kind == WeightKind::Symbolic) {
        throw InputError("this command needs a numeric weight, not \"sym\"");
    }
    return mode.value;
}

PolySystem read_system(const std::string& path, const VariableRing& ring) {
    const std::string text = read_file(path);
    if (looks_like_json(text)) {
        return system_from_json(parse_json_text(text), ring);
    }
    return parse_paper_system(text, ring);
}

OperatorMatrix read_matrix(const std::string& path) {
    return operator_matrix_from_json(parse_json_text(read_file(path)));
}

std::vector<Scalar> parse_grid(const std::string& text) {
    std::vector<Scalar> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        grid.push_back(Scalar::parse(item));
    }
    if (grid.empty()) {
        throw InputError("--grid needs at least one value");
    }
    return grid;
}

std::string scalar_list(const std::vector<Scalar>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i == 0 ? "" : ", ") + values[i].to_string();
    }
    return out;
}

class Emitter {
public:
    Emitter(const Options& options, std::ostream& out) : options_(options), out_(out) {}

    [[nodiscard]] bool json() const { return options_.format == "json"; }

    void emit(const std::string& text) {
        if (options_.out.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(options_.out, std::ios::binary);
        if (!file || !(file << text)) {
            throw InputError("cannot write " + options_.out);
        }
    }

    void emit(const Json& j) { emit(j.dump(2) + "\n"); }

private:
    const Options& options_;
    std::ostream& out_;
};

std::string witness_text(const DefectWitness& w) {
    return "defect at (e" + std::to_string(w.i) + ", e" + std::to_string(w.j) + ") = " + to_string(w.defect);
}

int cmd_verify(const Options& o, Emitter& e) {
    const OperatorMatrix r = read_matrix(o.input);
    const Scalar lambda = numeric_weight(o.weight);
    const auto witness = find_defect_witness(r, lambda);
    if (e.json()) {
        Json j{{"weight", scalar_to_json(lambda)}, {"rota_baxter", !witness.has_value()}};
        if (witness) {
            j["witness"] = Json{{"pair", {witness->i, witness->j}}, {"defect", to_json(witness->defect)}};
        }
        e.emit(j);
    } else if (witness) {
        e.emit("NOT ROTA-BAXTER (weight " + lambda.to_string() + "): " + witness_text(*witness) + "\n");
    } else {
        e.emit("ROTA-BAXTER (weight " + lambda.to_string() + ")\n");
    }
    return witness ? kExitNotRotaBaxter : kExitOk;
}

int cmd_generate(const Options& o, Emitter& e) {
    const PolySystem system = generate_system(WeightMode::parse(o.weight));
    if (e.json()) {
        e.emit(to_json(system));
    } else {
        e.emit(format_system_text(system));
    }
    return kExitOk;
}

int cmd_reduce(const Options& o, Emitter& e) {
    const VariableRing& ring = VariableRing::saturated();
    PolySystem system = read_system(o.input, ring);
    const bool any = std::any_of(system.polys.begin(), system.polys.end(),
                                 [](const LabeledPolynomial& p) { return !p.poly.is_zero(); });
    if (!any) {
        throw InputError("the system has no nonzero polynomials");
    }
    if (o.saturate) {
        system = with_weight_inverse(system);
    }
    const TermOrder order = parse_order_kind(o.order) == OrderKind::Lex ? TermOrder::lex(kMaxVars)
                                                                       : TermOrder::grevlex(kMaxVars);
    const GroebnerBasis basis = buchberger(system, order, BuchbergerLimits{o.max_pairs, o.max_degree});
    std::optional<std::vector<MembershipVerdict>> verdicts;
    if (!o.check.empty()) {
        verdicts = membership_report(basis, read_system(o.check, ring));
    }

    if (e.json()) {
        Json j = to_json(basis, ring);
        if (verdicts) {
            j["membership"] = to_json(*verdicts);
        }
        e.emit(j);
        return kExitOk;
    }
    std::string text = "# order: " + basis.order.describe(ring) + "\n";
    text += "# generators: " + std::to_string(basis.generators.size()) + "\n";
    text += "# pairs reduced: " + std::to_string(basis.stats.pairs_reduced) +
            ", discarded: " + std::to_string(basis.stats.pairs_discarded) +
            ", zero reductions: " + std::to_string(basis.stats.zero_reductions) +
            ", max pair degree: " + std::to_string(basis.stats.max_pair_degree) + "\n";
    for (std::size_t n = 0; n < basis.generators.size(); ++n) {
        text += "g" + std::to_string(n + 1) + ": " + to_string(basis.generators[n], ring) + "\n";
    }
    if (verdicts) {
        std::size_t members = 0;
        for (const auto& v : *verdicts) {
            members += v.member ? 1 : 0;
        }
        text += "# membership: " + std::to_string(members) + "/" + std::to_string(verdicts->size()) + " in the ideal\n";
        for (const auto& v : *verdicts) {
            text += v.label + ": " +
                    (v.member ? std::string("member")
                              : std::string("not a member") + (v.square_member  ? " (square is a member)"
                                                               : v.cube_member ? " (cube is a member)"
                                                                               : "")) +
                    "\n";
        }
    }
    e.emit(text);
    return kExitOk;
}

int cmd_classify(const Options& o, Emitter& e) {
    const OperatorMatrix r = read_matrix(o.input);
    const Scalar lambda = numeric_weight(o.weight);
    const ClassificationResult result = classify(r, lambda);
    if (e.json()) {
        e.emit(to_json(result, lambda));
    } else {
        std::string text = to_string(result.verdict);
        if (result.family) {
            text += " " + to_string(*result.family);
        }
        if (result.witness) {
            text += ": " + witness_text(*result.witness);
        }
        e.emit(text + "\n");
    }
    switch (result.verdict) {
        case Verdict::NotRotaBaxter:
            return kExitNotRotaBaxter;
        case Verdict::InFamily:
            return kExitOk;
        case Verdict::RotaBaxterOutsideKnownFamilies:
            return kExitOutsideFamilies;
    }
    return kExitOk;
}

int cmd_audit(const Options& o, Emitter& e) {
    AuditOptions options;
    options.lambda = numeric_weight(o.weight);
    options.grid = parse_grid(o.grid);
    options.max_examples = o.max_examples;
    const AuditReport report = audit_completeness(options);
    if (e.json()) {
        e.emit(to_json(report));
        return kExitOk;
    }
    std::string text = "weight: " + report.lambda.to_string() + "\n";
    text += "grid: {" + scalar_list(report.grid) + "}\n";
    text += "candidates: " + std::to_string(report.candidates) + "\n";
    text += "solutions: " + std::to_string(report.solutions) + "\n";
    for (const auto& [name, count] : report.by_family) {
        text += "  " + name + ": " + std::to_string(count) + "\n";
    }
    if (report.outside_total != 0) {
        text += "outside known families: " + std::to_string(report.outside_total) + " (" +
                std::to_string(report.outside_with_a43_zero) + " with a43 = 0), re-verified: " +
                (report.outside_examples_verified ? "yes" : "NO") + "\n";
        for (const auto& r : report.outside_examples) {
            text += "  " + to_string(r) + "\n";
        }
    }
    if (report.zero_operator_is_solution) {
        text += std::string("zero operator: ") + (*report.zero_operator_is_solution ? "solves" : "does not solve") +
                " the system; " +
                (*report.zero_operator_matches_weighted_form ? "matches" : "does not match") +
                " the a11 = -lambda row form\n";
    }
    text += "inconsistencies: " + std::to_string(report.inconsistencies.size()) + "\n";
    for (const auto& line : report.inconsistencies) {
        text += "  " + line + "\n";
    }
    e.emit(text);
    return kExitOk;
}

int cmd_compare(const Options& o, Emitter& e) {
    const WeightMode mode = WeightMode::parse(o.weight);
    const std::string transcription = !o.transcribed.empty()             ? read_file(o.transcribed)
                                      : mode.kind == WeightKind::Zero ? std::string(fixtures::reference_weight0_system())
                                                                        : std::string(fixtures::reference_weightl_system());
    const LabelMap map = parse_label_map(o.label_map.empty() ? std::string(fixtures::reference_label_map())
                                                             : read_file(o.label_map));
    const PolySystem transcribed = looks_like_json(transcription) ? system_from_json(parse_json_text(transcription))
                                                                  : parse_paper_system(transcription);
    const ComparisonReport report = compare_systems(generate_system(mode), transcribed, map);
    if (e.json()) {
        e.emit(to_json(report));
        return kExitOk;
    }
    std::string text = "exact: " + std::to_string(report.exact) + ", scalar multiple: " +
                       std::to_string(report.scalar_multiple) + ", mismatch: " + std::to_string(report.mismatch) + "\n";
    for (const auto& entry : report.entries) {
        if (entry.kind == MatchKind::Exact) {
            continue;
        }
        text += entry.label + " vs " + (entry.slot.empty() ? std::string("(no slot)") : entry.slot) + ": " +
                to_string(entry.kind);
        if (entry.kind == MatchKind::ScalarMultiple) {
            text += " by " + entry.factor.to_string();
        } else if (!entry.slot.empty()) {
            text += ", transcribed - generated = " + to_string(entry.difference);
        }
        if (!entry.exact_elsewhere.empty()) {
            text += ", equals generated " + entry.exact_elsewhere.front();
        }
        text += "\n";
    }
    e.emit(text);
    return kExitOk;
}

int cmd_selftest(const Options& o, Emitter& e) {
    StructureTable table = StructureTable::dual_quaternion();
    if (!o.table.empty()) {
        table = structure_table_from_json(parse_json_text(read_file(o.table)));
    }
    const SelftestReport report = run_selftest(table);
    const bool ok = report.mandatory_passed();
    if (e.json()) {
        Json checks = Json::array();
        for (const auto& c : report.checks) {
            checks.push_back(Json{{"name", c.name}, {"mandatory", c.mandatory}, {"passed", c.passed}, {"detail", c.detail}});
        }
        e.emit(Json{{"passed", ok}, {"checks", checks}});
    } else {
        std::string text;
        for (const auto& c : report.checks) {
            const char* tag = c.passed ? "PASS" : (c.mandatory ? "FAIL" : "INFO");
            text += std::string("[") + tag + "] " + c.name + ": " + c.detail + "\n";
        }
        text += ok ? "selftest: all mandatory checks passed\n" : "selftest: mandatory checks FAILED\n";
        e.emit(text);
    }
    return ok ? kExitOk : kExitNotRotaBaxter;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Rota-Baxter operators on the dual quaternion algebra, by exact computation", "rbdq"};
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
    };
    const auto add_weight = [&](CLI::App* cmd, const std::string& help) {
        cmd->add_option("--weight", o.weight, help);
    };

    auto* verify = app.add_subcommand("verify", "Check the Rota-Baxter identity for a matrix");
    verify->add_option("matrix", o.input, "Matrix JSON file ('-' for stdin)")->required();
    add_weight(verify, "Weight lambda as a rational");
    add_format(verify);

    auto* generate = app.add_subcommand("generate", "Emit the 64-polynomial constraint system");
    add_weight(generate, "0, sym or a rational p/q");
    add_format(generate);

    auto* reduce = app.add_subcommand("reduce", "Reduced Groebner basis of a polynomial system");
    reduce->add_option("system", o.input, "System file, text or JSON ('-' for stdin)")->required();
    reduce->add_option("--order", o.order, "Term order")->check(CLI::IsMember({"lex", "grevlex"}));
    reduce->add_option("--max-pairs", o.max_pairs, "Maximum number of S-pairs to reduce");
    reduce->add_option("--max-degree", o.max_degree, "Maximum lcm degree of a selected pair");
    reduce->add_flag("--saturate", o.saturate, "Adjoin t*l - 1 so that the weight is invertible");
    reduce->add_option("--check", o.check, "Report ideal membership for each polynomial of this system");
    add_format(reduce);

    auto* classify_cmd = app.add_subcommand("classify", "Match a matrix against the known operator families");
    classify_cmd->add_option("matrix", o.input, "Matrix JSON file ('-' for stdin)")->required();
    add_weight(classify_cmd, "Weight lambda as a rational");
    add_format(classify_cmd);

    auto* audit = app.add_subcommand("audit", "Enumerate reduced-form candidates over a grid and classify the solutions");
    add_weight(audit, "Weight lambda as a rational");
    audit->add_option("--grid", o.grid, "Comma-separated rationals");
    audit->add_option("--max-examples", o.max_examples, "Outside-family exemplars to list");
    add_format(audit);

    auto* compare = app.add_subcommand("compare", "Compare the generated system with a transcription");
    add_weight(compare, "0 or sym: selects the system and the shipped transcription");
    compare->add_option("--transcribed", o.transcribed, "Transcription to audit instead of the shipped one");
    compare->add_option("--label-map", o.label_map, "Label map instead of the shipped one");
    add_format(compare);

    auto* selftest = app.add_subcommand("selftest", "Run the invariant suite");
    selftest->add_option("--table", o.table, "Structure table JSON to test instead of the dual quaternions");
    add_format(selftest);

    // CLI11 consumes arguments from the back.
    std::vector<std::string> reversed;
    if (args.size() > 1) {
        reversed.assign(args.rbegin(), args.rend() - 1);
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Emitter emitter(o, out);
    try {
        if (*verify) {
            return cmd_verify(o, emitter);
        }
        if (*generate) {
            return cmd_generate(o, emitter);
        }
        if (*reduce) {
            return cmd_reduce(o, emitter);
        }
        if (*classify_cmd) {
            return cmd_classify(o, emitter);
        }
        if (*audit) {
            return cmd_audit(o, emitter);
        }
        if (*compare) {
            return cmd_compare(o, emitter);
        }
        if (*selftest) {
            return cmd_selftest(o, emitter);
        }
    } catch (const LimitExceeded& e) {
        const auto& s = e.stats();
        err << "limit exceeded: " << e.what() << " (pairs reduced " << s.pairs_reduced << ", discarded "
            << s.pairs_discarded << ", basis size " << s.basis_size << ", max pair degree " << s.max_pair_degree
            << ")\n";
        return kExitLimit;
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::domain_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace rbdq
