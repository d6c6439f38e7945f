#include "rbdq/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "rbdq/errors.hpp"
#include "rbdq/polysystem.hpp"

namespace rbdq {

namespace {

bool rows_below_first_zero(const OperatorMatrix& r) {
    for (std::size_t row = 2; row <= kDim; ++row) {
        for (std::size_t col = 1; col <= kDim; ++col) {
            if (!r.a(row, col).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

FamilyDescriptor FamilyDescriptor::row(const Scalar& a, const Scalar& b, const Scalar& c) {
    return {FamilyTag::W0RowFamily, {a, b, c}};
}

FamilyDescriptor FamilyDescriptor::block(const Scalar& d, const Scalar& e, const Scalar& f) {
    return {FamilyTag::W0BlockFamily, {d, e, f}};
}

FamilyDescriptor FamilyDescriptor::weighted_row(const Scalar& lambda, const Scalar& a, const Scalar& b,
                                                const Scalar& c) {
    return {FamilyTag::WLRowFamily, {lambda, a, b, c}};
}

std::vector<std::string> FamilyDescriptor::param_names() const {
    switch (tag) {
        case FamilyTag::ZeroOperator:
            return {};
        case FamilyTag::W0RowFamily:
            return {"a", "b", "c"};
        case FamilyTag::W0BlockFamily:
            return {"d", "e", "f"};
        case FamilyTag::WLRowFamily:
            return {"lambda", "a", "b", "c"};
    }
    return {};
}

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::ZeroOperator:
            return "ZeroOperator";
        case FamilyTag::W0RowFamily:
            return "W0_RowFamily";
        case FamilyTag::W0BlockFamily:
            return "W0_BlockFamily";
        case FamilyTag::WLRowFamily:
            return "WL_RowFamily";
    }
    return "?";
}

std::string to_string(const FamilyDescriptor& family) {
    std::string out = to_string(family.tag) + "(";
    const auto names = family.param_names();
    for (std::size_t i = 0; i < family.params.size(); ++i) {
        if (i != 0) {
            out += ", ";
        }
        out += (i < names.size() ? names[i] : "p") + "=" + family.params[i].to_string();
    }
    return out + ")";
}

OperatorMatrix build_family(const FamilyDescriptor& family) {
    const auto& p = family.params;
    const auto need = [&](std::size_t n) {
        if (p.size() != n) {
            throw ConstraintError(to_string(family.tag) + " takes " + std::to_string(n) + " parameters");
        }
    };
    OperatorMatrix r;
    switch (family.tag) {
        case FamilyTag::ZeroOperator:
            need(0);
            break;
        case FamilyTag::W0RowFamily:
            need(3);
            r.set_a(1, 2, p[0]);
            r.set_a(1, 3, p[1]);
            r.set_a(1, 4, p[2]);
            break;
        case FamilyTag::W0BlockFamily: {
            need(3);
            const Scalar& d = p[0];
            const Scalar& e = p[1];
            const Scalar& f = p[2];
            if (f.is_zero()) {
                throw ConstraintError("W0_BlockFamily requires f != 0");
            }
            r.set_a(2, 3, d);
            r.set_a(2, 4, d * e / f);
            r.set_a(3, 3, -e);
            r.set_a(3, 4, -(e * e) / f);
            r.set_a(4, 3, f);
            r.set_a(4, 4, e);
            break;
        }
        case FamilyTag::WLRowFamily:
            need(4);
            if (p[0].is_zero()) {
                throw ConstraintError("WL_RowFamily requires lambda != 0");
            }
            r.set_a(1, 1, -p[0]);
            r.set_a(1, 2, p[1]);
            r.set_a(1, 3, p[2]);
            r.set_a(1, 4, p[3]);
            break;
    }
    return r;
}

std::optional<FamilyDescriptor> recover_family(const OperatorMatrix& r, const Scalar& lambda) {
    if (r.is_zero()) {
        return FamilyDescriptor::zero_operator();
    }
    if (lambda.is_zero()) {
        if (r.a(1, 1).is_zero() && rows_below_first_zero(r)) {
            return FamilyDescriptor::row(r.a(1, 2), r.a(1, 3), r.a(1, 4));
        }
        if (!r.a(4, 3).is_zero()) {
            auto candidate = FamilyDescriptor::block(r.a(2, 3), r.a(4, 4), r.a(4, 3));
            if (build_family(candidate) == r) {
                return candidate;
            }
        }
        return std::nullopt;
    }
    if (r.a(1, 1) == -lambda && rows_below_first_zero(r)) {
        return FamilyDescriptor::weighted_row(lambda, r.a(1, 2), r.a(1, 3), r.a(1, 4));
    }
    return std::nullopt;
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::NotRotaBaxter:
            return "NotRotaBaxter";
        case Verdict::InFamily:
            return "InFamily";
        case Verdict::RotaBaxterOutsideKnownFamilies:
            return "RotaBaxterOutsideKnownFamilies";
    }
    return "?";
}

ClassificationResult classify(const OperatorMatrix& r, const Scalar& lambda) {
    ClassificationResult result;
    result.matrix = r;
    if (auto witness = find_defect_witness(r, lambda)) {
        result.verdict = Verdict::NotRotaBaxter;
        result.witness = std::move(witness);
        return result;
    }
    if (auto family = recover_family(r, lambda)) {
        result.verdict = Verdict::InFamily;
        result.family = std::move(family);
        return result;
    }
    result.verdict = Verdict::RotaBaxterOutsideKnownFamilies;
    return result;
}

AuditReport audit_completeness(const AuditOptions& options) {
    if (options.grid.empty()) {
        throw std::invalid_argument("audit grid must be nonempty");
    }
    AuditReport report;
    report.lambda = options.lambda;
    report.grid = options.grid;
    std::sort(report.grid.begin(), report.grid.end());
    report.grid.erase(std::unique(report.grid.begin(), report.grid.end()), report.grid.end());

    const PolySystem system = generate_system(WeightMode::fixed(options.lambda));
    std::vector<Polynomial> polys;
    for (const auto& p : system.polys) {
        if (!p.poly.is_zero()) {
            polys.push_back(p.poly);
        }
    }

    std::vector<Scalar> a11_values{Scalar(0)};
    if (!options.lambda.is_zero()) {
        a11_values = {Scalar(0), -options.lambda};
        std::sort(a11_values.begin(), a11_values.end());
    }
    // Free entries in row-major order.
    const std::vector<std::pair<std::size_t, std::size_t>> free = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                                                    {3, 3}, {3, 4}, {4, 3}, {4, 4}};
    const std::size_t g = report.grid.size();
    std::size_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
        combos *= g;
    }

    for (const auto& a11 : a11_values) {
        for (std::size_t code = 0; code < combos; ++code) {
            OperatorMatrix r;
            r.set_a(1, 1, a11);
            std::size_t rest = code;
            for (std::size_t f = free.size(); f-- > 0;) {
                r.set_a(free[f].first, free[f].second, report.grid[rest % g]);
                rest /= g;
            }
            ++report.candidates;

            const auto values = assignment(r, options.lambda);
            const bool solves = std::all_of(polys.begin(), polys.end(),
                                            [&](const Polynomial& p) { return p.evaluate(values).is_zero(); });
            const bool rb = is_rota_baxter(r, options.lambda);
            if (solves != rb) {
                report.inconsistencies.push_back("system verdict " + std::string(solves ? "solution" : "non-solution") +
                                                 " disagrees with defect oracle at " + to_string(r));
            }
            if (!solves) {
                continue;
            }
            ++report.solutions;
            const auto result = classify(r, options.lambda);
            switch (result.verdict) {
                case Verdict::NotRotaBaxter:
                    // already recorded as an inconsistency above
                    break;
                case Verdict::InFamily:
                    ++report.by_family[to_string(result.family->tag)];
                    break;
                case Verdict::RotaBaxterOutsideKnownFamilies: {
                    ++report.by_family["OutsideKnownFamilies"];
                    ++report.outside_total;
                    if (r.a(4, 3).is_zero()) {
                        ++report.outside_with_a43_zero;
                    }
                    const bool verified = is_rota_baxter(r, options.lambda) && !recover_family(r, options.lambda);
                    report.outside_examples_verified = report.outside_examples_verified && verified;
                    if (report.outside_examples.size() < options.max_examples) {
                        report.outside_examples.push_back(r);
                    }
                    break;
                }
            }
        }
    }

    if (!options.lambda.is_zero()) {
        const OperatorMatrix zero;
        report.zero_operator_is_solution = std::all_of(polys.begin(), polys.end(), [&](const Polynomial& p) {
            return evaluate_at(p, zero, options.lambda).is_zero();
        });
        report.zero_operator_matches_weighted_form = zero.a(1, 1) == -options.lambda;
    }
    return report;
}

}  // namespace rbdq
