#include "rbdq/polysystem.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "rbdq/errors.hpp"

namespace rbdq {

namespace {

using SymbolicElement = std::array<Polynomial, kDim>;

SymbolicElement symbolic_basis(std::size_t i) {
    SymbolicElement e;
    e[i] = Polynomial(1);
    return e;
}

/// R applied to an element with polynomial coordinates; R has indeterminate entries.
SymbolicElement symbolic_apply(const SymbolicElement& x) {
    SymbolicElement out;
    for (std::size_t row = 0; row < kDim; ++row) {
        for (std::size_t col = 0; col < kDim; ++col) {
            if (!x[col].is_zero()) {
                out[row] += Polynomial::variable(entry_var(row + 1, col + 1)) * x[col];
            }
        }
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace

WeightMode WeightMode::fixed(const Scalar& value) {
    if (value.is_zero()) {
        return zero();
    }
    return {WeightKind::Fixed, value};
}

WeightMode WeightMode::parse(std::string_view text) {
    if (text == "sym") {
        return symbolic();
    }
    return fixed(Scalar::parse(text));
}

std::string WeightMode::to_string() const {
    switch (kind) {
        case WeightKind::Zero:
            return "0";
        case WeightKind::Symbolic:
            return "sym";
        case WeightKind::Fixed:
            return value.to_string();
    }
    return "0";
}

std::string Provenance::label() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ",e" + std::to_string(k) + ")";
}

std::vector<Polynomial> PolySystem::polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        out.push_back(p.poly);
    }
    return out;
}

const LabeledPolynomial* PolySystem::find(std::string_view label) const {
    for (const auto& p : polys) {
        if (p.label == label) {
            return &p;
        }
    }
    return nullptr;
}

PolySystem generate_system(const WeightMode& mode, const StructureTable& table) {
    Polynomial weight;
    switch (mode.kind) {
        case WeightKind::Zero:
            break;
        case WeightKind::Symbolic:
            weight = Polynomial::variable(kWeightVar);
            break;
        case WeightKind::Fixed:
            weight = Polynomial(mode.value);
            break;
    }

    PolySystem system{mode, {}};
    system.polys.reserve(kDim * kDim * kDim);
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            const auto ei = symbolic_basis(i);
            const auto ej = symbolic_basis(j);
            const auto rei = symbolic_apply(ei);
            const auto rej = symbolic_apply(ej);
            const auto lhs = table.multiply(rei, rej);
            const auto t1 = symbolic_apply(table.multiply(rei, ej));
            const auto t2 = symbolic_apply(table.multiply(ei, rej));
            const auto t3 = symbolic_apply(table.multiply(ei, ej));
            for (std::size_t k = 0; k < kDim; ++k) {
                Polynomial p = t1[k] + t2[k] + weight * t3[k] - lhs[k];
                Provenance src{i, j, k};
                system.polys.push_back({src.label(), std::move(p), src});
            }
        }
    }
    return system;
}

std::vector<Scalar> assignment(const OperatorMatrix& r, const Scalar& lambda) {
    std::vector<Scalar> values(kWeightVar + 1);
    for (std::size_t row = 1; row <= kDim; ++row) {
        for (std::size_t col = 1; col <= kDim; ++col) {
            values[entry_var(row, col)] = r.a(row, col);
        }
    }
    values[kWeightVar] = lambda;
    return values;
}

Scalar evaluate_at(const Polynomial& p, const OperatorMatrix& r, const Scalar& lambda) {
    const auto values = assignment(r, lambda);
    return p.evaluate(values);
}

PolySystem parse_paper_system(std::string_view text, const VariableRing& ring) {
    PolySystem system;
    std::optional<WeightMode> declared;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::string_view raw = lines[n];
        const std::string_view line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto body = trim(line.substr(1));
            constexpr std::string_view key = "weight:";
            if (body.substr(0, key.size()) == key) {
                try {
                    declared = WeightMode::parse(trim(body.substr(key.size())));
                } catch (const ParseError& e) {
                    throw ParseError(e.what(), n + 1, 1);
                }
            }
            continue;
        }
        std::string label = "#" + std::to_string(system.polys.size() + 1);
        std::size_t offset = 0;
        std::string_view body = raw;
        const auto colon = raw.find(':');
        if (colon != std::string_view::npos) {
            label = std::string(trim(raw.substr(0, colon)));
            if (label.empty()) {
                throw ParseError("empty label", n + 1, colon + 1);
            }
            body = raw.substr(colon + 1);
            offset = colon + 1;
        }
        try {
            system.polys.push_back({label, parse_polynomial(body, ring), std::nullopt});
        } catch (const ParseError& e) {
            std::string message = e.what();
            const auto pos = message.find(": ");
            if (pos != std::string::npos) {
                message = message.substr(pos + 2);
            }
            throw ParseError(message, n + 1, offset + e.column());
        }
    }
    if (declared) {
        system.mode = *declared;
    } else {
        bool uses_weight = false;
        for (const auto& p : system.polys) {
            uses_weight = uses_weight || p.poly.uses_variable(kWeightVar);
        }
        system.mode = uses_weight ? WeightMode::symbolic() : WeightMode::zero();
    }
    return system;
}

std::string format_system_text(const PolySystem& system, const VariableRing& ring) {
    std::string out = "# weight: " + system.mode.to_string() + "\n";
    for (const auto& p : system.polys) {
        out += p.label + ": " + to_string(p.poly, ring) + "\n";
    }
    return out;
}

std::vector<std::string> ComparisonReport::discrepancies() const {
    std::vector<std::string> out;
    for (const auto& e : entries) {
        if (e.kind != MatchKind::Exact) {
            out.push_back(e.label);
        }
    }
    return out;
}

LabelMap parse_label_map(std::string_view text) {
    LabelMap map;
    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto line = trim(lines[n]);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto open = line.find('(');
        if (open == std::string_view::npos || line.back() != ')') {
            throw ParseError("expected a trailing (i,j,ek) slot", n + 1, line.size());
        }
        const std::string slot(line.substr(open));
        std::string_view labels = line.substr(0, open);
        while (!(labels = trim(labels)).empty()) {
            const auto space = labels.find_first_of(" \t");
            map[std::string(labels.substr(0, space))] = slot;
            if (space == std::string_view::npos) {
                break;
            }
            labels.remove_prefix(space);
        }
    }
    return map;
}

ComparisonReport compare_systems(const PolySystem& generated, const PolySystem& transcribed,
                                 const LabelMap& label_map) {
    ComparisonReport report;
    for (const auto& t : transcribed.polys) {
        ComparisonEntry entry;
        entry.label = t.label;
        const Polynomial t_monic = t.poly.normalized();
        for (const auto& g : generated.polys) {
            if (g.poly == t.poly) {
                entry.exact_elsewhere.push_back(g.label);
            }
        }

        const LabeledPolynomial* slot = nullptr;
        if (const auto it = label_map.find(t.label); it != label_map.end()) {
            slot = generated.find(it->second);
        } else {
            slot = generated.find(t.label);
        }
        if (slot == nullptr) {
            // Unmapped: take the first generated polynomial it agrees with, if any.
            for (const auto& g : generated.polys) {
                if (g.poly == t.poly || (!t.poly.is_zero() && g.poly.normalized() == t_monic)) {
                    slot = &g;
                    break;
                }
            }
        }

        if (slot == nullptr) {
            entry.kind = MatchKind::Mismatch;
            entry.difference = t.poly;
        } else {
            entry.slot = slot->label;
            if (slot->poly == t.poly) {
                entry.kind = MatchKind::Exact;
            } else if (!t.poly.is_zero() && !slot->poly.is_zero() && slot->poly.normalized() == t_monic) {
                entry.kind = MatchKind::ScalarMultiple;
                entry.factor = t.poly.terms().front().coeff / slot->poly.terms().front().coeff;
            } else {
                entry.kind = MatchKind::Mismatch;
                entry.difference = t.poly - slot->poly;
            }
        }
        // A slot label is already covered by the slot field.
        std::erase(entry.exact_elsewhere, entry.slot);

        switch (entry.kind) {
            case MatchKind::Exact:
                ++report.exact;
                break;
            case MatchKind::ScalarMultiple:
                ++report.scalar_multiple;
                break;
            case MatchKind::Mismatch:
                ++report.mismatch;
                break;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string to_string(MatchKind kind) {
    switch (kind) {
        case MatchKind::Exact:
            return "exact";
        case MatchKind::ScalarMultiple:
            return "scalar-multiple";
        case MatchKind::Mismatch:
            return "mismatch";
    }
    return "mismatch";
}

}  // namespace rbdq
