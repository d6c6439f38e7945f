#include "rbdq/json_io.hpp"

#include <algorithm>

#include "rbdq/errors.hpp"

namespace rbdq {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing key \"") + key + "\"");
    }
    return j.at(key);
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) {
        return Scalar::parse(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Scalar(j.get<std::int64_t>());
    }
    throw ParseError("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

Json to_json(const DualQuaternion& x) {
    Json coords = Json::array();
    for (const auto& c : x.coords) {
        coords.push_back(scalar_to_json(c));
    }
    return Json{{"coords", coords}};
}

DualQuaternion dual_quaternion_from_json(const Json& j) {
    const Json& coords = require(j, "coords");
    if (!coords.is_array() || coords.size() != kDim) {
        throw ParseError("\"coords\" must be an array of 4 scalars");
    }
    DualQuaternion x;
    for (std::size_t i = 0; i < kDim; ++i) {
        x.coords[i] = scalar_from_json(coords[i]);
    }
    return x;
}

Json to_json(const StructureTable& table) {
    Json rows = Json::array();
    for (std::size_t p = 0; p < kDim; ++p) {
        Json row = Json::array();
        for (std::size_t q = 0; q < kDim; ++q) {
            Json coords = Json::array();
            for (std::size_t k = 0; k < kDim; ++k) {
                coords.push_back(scalar_to_json(table.at(p, q, k)));
            }
            row.push_back(coords);
        }
        rows.push_back(row);
    }
    return Json{{"products", rows}};
}

StructureTable structure_table_from_json(const Json& j) {
    const Json& rows = require(j, "products");
    const auto sized = [](const Json& a) { return a.is_array() && a.size() == kDim; };
    if (!sized(rows)) {
        throw ParseError("\"products\" must be a 4x4 array of coordinate arrays");
    }
    StructureTable table;
    for (std::size_t p = 0; p < kDim; ++p) {
        if (!sized(rows[p])) {
            throw ParseError("\"products\" must be a 4x4 array of coordinate arrays");
        }
        for (std::size_t q = 0; q < kDim; ++q) {
            if (!sized(rows[p][q])) {
                throw ParseError("\"products\" must be a 4x4 array of coordinate arrays");
            }
            for (std::size_t k = 0; k < kDim; ++k) {
                table.set(p, q, k, scalar_from_json(rows[p][q][k]));
            }
        }
    }
    return table;
}

Json to_json(const OperatorMatrix& r) {
    Json rows = Json::array();
    for (std::size_t row = 0; row < kDim; ++row) {
        Json entries = Json::array();
        for (std::size_t col = 0; col < kDim; ++col) {
            entries.push_back(scalar_to_json(r(row, col)));
        }
        rows.push_back(entries);
    }
    return Json{{"entries", rows}};
}

OperatorMatrix operator_matrix_from_json(const Json& j) {
    const Json& rows = require(j, "entries");
    if (!rows.is_array() || rows.size() != kDim) {
        throw ParseError("\"entries\" must be a 4x4 array");
    }
    OperatorMatrix r;
    for (std::size_t row = 0; row < kDim; ++row) {
        if (!rows[row].is_array() || rows[row].size() != kDim) {
            throw ParseError("\"entries\" row " + std::to_string(row + 1) + " must have 4 scalars");
        }
        for (std::size_t col = 0; col < kDim; ++col) {
            r(row, col) = scalar_from_json(rows[row][col]);
        }
    }
    return r;
}

Json to_json(const Polynomial& p, const VariableRing& ring) {
    Json terms = Json::array();
    for (const auto& term : p.terms()) {
        Json exps = Json::object();
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            if (term.mono.exps[v] != 0) {
                exps[ring.name(v)] = term.mono.exps[v];
            }
        }
        terms.push_back(Json{{"coeff", scalar_to_json(term.coeff)}, {"exps", exps}});
    }
    return terms;
}

Polynomial polynomial_from_json(const Json& j, const VariableRing& ring) {
    if (!j.is_array()) {
        throw ParseError("\"terms\" must be an array");
    }
    std::vector<Term> terms;
    for (const auto& t : j) {
        Term term;
        term.coeff = scalar_from_json(require(t, "coeff"));
        const Json& exps = require(t, "exps");
        if (!exps.is_object()) {
            throw ParseError("\"exps\" must be an object");
        }
        for (const auto& [name, power] : exps.items()) {
            const auto var = ring.index_of(name);
            if (!var) {
                throw ParseError("unknown variable \"" + name + "\"");
            }
            if (!power.is_number_unsigned() || power.get<unsigned>() > 0xffff) {
                throw ParseError("exponent of \"" + name + "\" must be a small non-negative integer");
            }
            term.mono.exps[*var] = static_cast<std::uint16_t>(power.get<unsigned>());
        }
        terms.push_back(std::move(term));
    }
    return Polynomial::from_terms(std::move(terms));
}

Json to_json(const PolySystem& system, const VariableRing& ring) {
    Json polys = Json::array();
    for (const auto& p : system.polys) {
        Json entry{{"label", p.label}, {"terms", to_json(p.poly, ring)}};
        if (p.source) {
            entry["source"] = p.source->label();
        }
        polys.push_back(entry);
    }
    return Json{{"weight_mode", system.mode.to_string()}, {"polys", polys}};
}

PolySystem system_from_json(const Json& j, const VariableRing& ring) {
    PolySystem system;
    const Json& mode = require(j, "weight_mode");
    if (!mode.is_string()) {
        throw ParseError("\"weight_mode\" must be a string");
    }
    system.mode = WeightMode::parse(mode.get<std::string>());
    const Json& polys = require(j, "polys");
    if (!polys.is_array()) {
        throw ParseError("\"polys\" must be an array");
    }
    std::size_t n = 0;
    for (const auto& p : polys) {
        ++n;
        LabeledPolynomial lp;
        lp.label = p.contains("label") ? p.at("label").get<std::string>() : "#" + std::to_string(n);
        lp.poly = polynomial_from_json(require(p, "terms"), ring);
        system.polys.push_back(std::move(lp));
    }
    return system;
}

Json to_json(const BuchbergerStats& stats) {
    return Json{{"pairs_reduced", stats.pairs_reduced},
                {"pairs_discarded", stats.pairs_discarded},
                {"zero_reductions", stats.zero_reductions},
                {"max_pair_degree", stats.max_pair_degree},
                {"basis_size", stats.basis_size}};
}

Json to_json(const GroebnerBasis& basis, const VariableRing& ring) {
    Json gens = Json::array();
    for (const auto& g : basis.generators) {
        gens.push_back(Json{{"text", to_string(g, ring)}, {"terms", to_json(g, ring)}});
    }
    return Json{{"order", basis.order.describe(ring)}, {"generators", gens}, {"stats", to_json(basis.stats)}};
}

Json to_json(const FamilyDescriptor& family) {
    Json params = Json::object();
    const auto names = family.param_names();
    for (std::size_t i = 0; i < family.params.size() && i < names.size(); ++i) {
        params[names[i]] = scalar_to_json(family.params[i]);
    }
    return Json{{"family", to_string(family.tag)}, {"params", params}};
}

Json to_json(const ClassificationResult& result, const Scalar& lambda) {
    Json out{{"weight", scalar_to_json(lambda)}, {"verdict", to_string(result.verdict)}};
    if (result.family) {
        out["family"] = to_json(*result.family);
    }
    if (result.witness) {
        out["witness"] = Json{{"pair", {result.witness->i, result.witness->j}},
                              {"defect", to_json(result.witness->defect)}};
    }
    out["matrix"] = to_json(result.matrix);
    return out;
}

Json to_json(const AuditReport& report) {
    Json grid = Json::array();
    for (const auto& g : report.grid) {
        grid.push_back(scalar_to_json(g));
    }
    Json by_family = Json::object();
    for (const auto& [name, count] : report.by_family) {
        by_family[name] = count;
    }
    Json examples = Json::array();
    for (const auto& r : report.outside_examples) {
        examples.push_back(to_json(r));
    }
    Json out{{"mode", report.lambda.is_zero() ? "0" : report.lambda.to_string()},
             {"grid", grid},
             {"candidates", report.candidates},
             {"solutions", report.solutions},
             {"by_family", by_family},
             {"outside_total", report.outside_total},
             {"outside_with_a43_zero", report.outside_with_a43_zero},
             {"outside_examples_verified", report.outside_examples_verified},
             {"outside_examples", examples},
             {"inconsistencies", report.inconsistencies}};
    if (report.zero_operator_is_solution) {
        out["zero_operator"] = Json{{"is_solution", *report.zero_operator_is_solution},
                                    {"matches_weighted_row_form", *report.zero_operator_matches_weighted_form}};
    }
    return out;
}

Json to_json(const ComparisonReport& report, const VariableRing& ring) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        Json entry{{"label", e.label}, {"slot", e.slot}, {"match", to_string(e.kind)}};
        if (e.kind == MatchKind::ScalarMultiple) {
            entry["factor"] = scalar_to_json(e.factor);
        }
        if (e.kind == MatchKind::Mismatch && !e.slot.empty()) {
            entry["difference"] = to_string(e.difference, ring);
        }
        if (!e.exact_elsewhere.empty()) {
            entry["exact_elsewhere"] = e.exact_elsewhere;
        }
        entries.push_back(entry);
    }
    return Json{{"exact", report.exact},
                {"scalar_multiple", report.scalar_multiple},
                {"mismatch", report.mismatch},
                {"discrepancies", report.discrepancies()},
                {"entries", entries}};
}

Json to_json(const std::vector<MembershipVerdict>& verdicts) {
    Json out = Json::array();
    for (const auto& v : verdicts) {
        Json entry{{"label", v.label}, {"member", v.member}};
        if (!v.member) {
            entry["square_member"] = v.square_member;
            entry["cube_member"] = v.cube_member;
        }
        out.push_back(entry);
    }
    return out;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("invalid JSON", line, column);
    }
}

}  // namespace rbdq
