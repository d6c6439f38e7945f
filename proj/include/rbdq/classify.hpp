#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rbdq/rb_operator.hpp"
#include "rbdq/scalar.hpp"

namespace rbdq {

enum class FamilyTag {
    ZeroOperator,
    W0RowFamily,    // first row (0, a, b, c), weight 0
    W0BlockFamily,  // rows (0,0,0,0), (0,0,d,de/f), (0,0,-e,-e^2/f), (0,0,f,e), f != 0, weight 0
    WLRowFamily,    // first row (-lambda, a, b, c), weight lambda != 0
};

/// Parametric operator family with its parameters:
///   ZeroOperator: none; W0RowFamily: a, b, c; W0BlockFamily: d, e, f;
///   WLRowFamily: lambda, a, b, c.
struct FamilyDescriptor {
    FamilyTag tag = FamilyTag::ZeroOperator;
    std::vector<Scalar> params;

    static FamilyDescriptor zero_operator() { return {}; }
    static FamilyDescriptor row(const Scalar& a, const Scalar& b, const Scalar& c);
    static FamilyDescriptor block(const Scalar& d, const Scalar& e, const Scalar& f);
    static FamilyDescriptor weighted_row(const Scalar& lambda, const Scalar& a, const Scalar& b, const Scalar& c);

    /// Parameter names in order, e.g. {"d", "e", "f"}.
    [[nodiscard]] std::vector<std::string> param_names() const;

    friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&) = default;
};

std::string to_string(FamilyTag tag);  // "ZeroOperator", "W0_RowFamily", ...
std::string to_string(const FamilyDescriptor& family);

/// Throws ConstraintError when f = 0 (block family) or lambda = 0 (weighted row family).
OperatorMatrix build_family(const FamilyDescriptor& family);

/// The family valid for this weight whose pattern the matrix follows exactly,
/// with parameters read back from the entries. Only the pattern is checked here;
/// the Rota-Baxter property is not.
std::optional<FamilyDescriptor> recover_family(const OperatorMatrix& r, const Scalar& lambda);

enum class Verdict { NotRotaBaxter, InFamily, RotaBaxterOutsideKnownFamilies };

std::string to_string(Verdict verdict);

struct ClassificationResult {
    Verdict verdict = Verdict::NotRotaBaxter;
    std::optional<FamilyDescriptor> family;  // InFamily
    std::optional<DefectWitness> witness;    // NotRotaBaxter
    OperatorMatrix matrix;                   // the classified matrix (witness for the outside verdict)
};

ClassificationResult classify(const OperatorMatrix& r, const Scalar& lambda);

struct AuditOptions {
    Scalar lambda;
    std::vector<Scalar> grid{Scalar(-1), Scalar(0), Scalar(1)};
    std::size_t max_examples = 25;
};

/// Enumerates matrices with a21 = a22 = a31 = a32 = a41 = a42 = 0, a11 in
/// {0, -lambda}, and a12, a13, a14, a23, a24, a33, a34, a43, a44 ranging over
/// the grid (lexicographic in row-major entry order). A candidate is a solution
/// when every polynomial of the generated fixed-weight system vanishes on it.
struct AuditReport {
    Scalar lambda;
    std::vector<Scalar> grid;
    std::size_t candidates = 0;
    std::size_t solutions = 0;
    std::map<std::string, std::size_t> by_family;     // keys from to_string(FamilyTag) and "OutsideKnownFamilies"
    std::vector<OperatorMatrix> outside_examples;     // first max_examples, in enumeration order
    std::size_t outside_total = 0;
    bool outside_examples_verified = true;            // all outside solutions re-verified as Rota-Baxter and unmatched
    std::size_t outside_with_a43_zero = 0;
    std::vector<std::string> inconsistencies;         // polynomial-system verdict disagreeing with the defect oracle
    // lambda != 0 only: the zero operator solves the system but has a11 = 0 != -lambda.
    std::optional<bool> zero_operator_is_solution;
    std::optional<bool> zero_operator_matches_weighted_form;
};

/// Throws std::invalid_argument on an empty grid.
AuditReport audit_completeness(const AuditOptions& options);

}  // namespace rbdq
