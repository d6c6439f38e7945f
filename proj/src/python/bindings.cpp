// Python bindings. Scalars cross the boundary as strings ("p/q"); structured
// results are returned as JSON text and decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "rbdq/classify.hpp"
#include "rbdq/errors.hpp"
#include "rbdq/groebner.hpp"
#include "rbdq/json_io.hpp"
#include "rbdq/polysystem.hpp"
#include "rbdq/rb_operator.hpp"
#include "rbdq/selftest.hpp"

namespace py = pybind11;
using namespace rbdq;

namespace {

using Coords = std::vector<std::string>;
using Rows = std::vector<std::vector<std::string>>;

DualQuaternion element(const Coords& coords) {
    if (coords.size() != kDim) {
        throw std::invalid_argument("an element needs 4 coordinates");
    }
    DualQuaternion x;
    for (std::size_t k = 0; k < kDim; ++k) {
        x[k] = Scalar::parse(coords[k]);
    }
    return x;
}

Coords coords(const DualQuaternion& x) {
    Coords out;
    for (const auto& c : x.coords) {
        out.push_back(c.to_string());
    }
    return out;
}

OperatorMatrix matrix(const Rows& rows) {
    if (rows.size() != kDim) {
        throw std::invalid_argument("an operator matrix needs 4 rows");
    }
    std::array<std::array<Scalar, kDim>, kDim> entries;
    for (std::size_t r = 0; r < kDim; ++r) {
        if (rows[r].size() != kDim) {
            throw std::invalid_argument("an operator matrix needs 4 columns");
        }
        for (std::size_t c = 0; c < kDim; ++c) {
            entries[r][c] = Scalar::parse(rows[r][c]);
        }
    }
    return OperatorMatrix(entries);
}

Rows rows(const OperatorMatrix& r) {
    Rows out(kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            out[i].push_back(r(i, j).to_string());
        }
    }
    return out;
}

Scalar numeric_weight(const std::string& text) {
    const WeightMode mode = WeightMode::parse(text);
    if (mode.kind == WeightKind::Symbolic) {
        throw std::invalid_argument("a numeric weight is required, not \"sym\"");
    }
    return mode.value;
}

PolySystem read_system(const std::string& text, const VariableRing& ring) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        return system_from_json(parse_json_text(text), ring);
    }
    return parse_paper_system(text, ring);
}

TermOrder order_from(const std::string& name) {
    return parse_order_kind(name) == OrderKind::Lex ? TermOrder::lex(kMaxVars) : TermOrder::grevlex(kMaxVars);
}

}  // namespace

PYBIND11_MODULE(_rbdq, m) {
    m.doc() = "Rota-Baxter operators on the dual quaternions";

    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("multiply", [](const Coords& x, const Coords& y) { return coords(multiply(element(x), element(y))); },
          py::arg("x"), py::arg("y"));

    m.def("apply", [](const Rows& r, const Coords& x) { return coords(apply(matrix(r), element(x))); },
          py::arg("matrix"), py::arg("x"));

    m.def("is_rota_baxter",
          [](const Rows& r, const std::string& weight) { return is_rota_baxter(matrix(r), numeric_weight(weight)); },
          py::arg("matrix"), py::arg("weight") = "0");

    m.def(
        "defect_witness",
        [](const Rows& r, const std::string& weight) -> std::optional<std::tuple<std::size_t, std::size_t, Coords>> {
            const auto w = find_defect_witness(matrix(r), numeric_weight(weight));
            if (!w) {
                return std::nullopt;
            }
            return std::make_tuple(w->i, w->j, coords(w->defect));
        },
        py::arg("matrix"), py::arg("weight") = "0");

    m.def(
        "generate_system",
        [](const std::string& weight, const std::string& format) {
            const PolySystem system = generate_system(WeightMode::parse(weight));
            if (format == "json") {
                return to_json(system).dump();
            }
            if (format != "text") {
                throw std::invalid_argument("format must be 'text' or 'json'");
            }
            return format_system_text(system);
        },
        py::arg("weight") = "sym", py::arg("format") = "text");

    m.def(
        "reduce",
        [](const std::string& system_text, const std::string& order, bool saturate, std::size_t max_pairs,
           unsigned max_degree, const std::optional<std::string>& check) {
            const VariableRing& ring = VariableRing::saturated();
            PolySystem system = read_system(system_text, ring);
            if (std::none_of(system.polys.begin(), system.polys.end(),
                             [](const LabeledPolynomial& p) { return !p.poly.is_zero(); })) {
                throw std::invalid_argument("the system has no nonzero polynomials");
            }
            if (saturate) {
                system = with_weight_inverse(system);
            }
            const TermOrder term_order = order_from(order);
            const GroebnerBasis basis = [&] {
                py::gil_scoped_release release;
                return buchberger(system, term_order, BuchbergerLimits{max_pairs, max_degree});
            }();
            Json j = to_json(basis, ring);
            if (check) {
                j["membership"] = to_json(membership_report(basis, read_system(*check, ring)));
            }
            return j.dump();
        },
        py::arg("system"), py::arg("order") = "grevlex", py::arg("saturate") = false,
        py::arg("max_pairs") = BuchbergerLimits{}.max_pairs, py::arg("max_degree") = BuchbergerLimits{}.max_degree,
        py::arg("check") = std::nullopt);

    m.def(
        "classify",
        [](const Rows& r, const std::string& weight) {
            const Scalar lambda = numeric_weight(weight);
            return to_json(classify(matrix(r), lambda), lambda).dump();
        },
        py::arg("matrix"), py::arg("weight") = "0");

    m.def(
        "build_family",
        [](const std::string& name, const std::vector<std::string>& params) {
            std::vector<Scalar> values;
            for (const auto& p : params) {
                values.push_back(Scalar::parse(p));
            }
            FamilyDescriptor family;
            if (name == "ZeroOperator") {
                family.tag = FamilyTag::ZeroOperator;
            } else if (name == "W0_RowFamily") {
                family.tag = FamilyTag::W0RowFamily;
            } else if (name == "W0_BlockFamily") {
                family.tag = FamilyTag::W0BlockFamily;
            } else if (name == "WL_RowFamily") {
                family.tag = FamilyTag::WLRowFamily;
            } else {
                throw std::invalid_argument("unknown family '" + name + "'");
            }
            family.params = std::move(values);
            return rows(build_family(family));
        },
        py::arg("family"), py::arg("params"));

    m.def(
        "audit",
        [](const std::string& weight, const std::vector<std::string>& grid, std::size_t max_examples) {
            AuditOptions options;
            options.lambda = numeric_weight(weight);
            options.grid.clear();
            for (const auto& g : grid) {
                options.grid.push_back(Scalar::parse(g));
            }
            options.max_examples = max_examples;
            AuditReport report;
            {
                py::gil_scoped_release release;
                report = audit_completeness(options);
            }
            return to_json(report).dump();
        },
        py::arg("weight") = "0", py::arg("grid") = std::vector<std::string>{"-1", "0", "1"},
        py::arg("max_examples") = 25);

    m.def("selftest", [] {
        std::vector<std::tuple<std::string, bool, bool, std::string>> out;
        for (const auto& c : run_selftest().checks) {
            out.emplace_back(c.name, c.mandatory, c.passed, c.detail);
        }
        return out;
    });
}
