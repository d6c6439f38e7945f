#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbdq/polynomial.hpp"
#include "rbdq/rb_operator.hpp"
#include "rbdq/scalar.hpp"
#include "rbdq/structure_table.hpp"

namespace rbdq {

enum class WeightKind { Zero, Symbolic, Fixed };

/// How the weight enters a system: absent, as the indeterminate l, or as a
/// fixed nonzero rational. Textual form is "0", "sym" or "p/q".
struct WeightMode {
    WeightKind kind = WeightKind::Zero;
    Scalar value;  // meaningful for Fixed only

    static WeightMode zero() { return {}; }
    static WeightMode symbolic() { return {WeightKind::Symbolic, Scalar(0)}; }
    /// fixed(0) collapses to zero().
    static WeightMode fixed(const Scalar& value);
    /// Throws ParseError for anything other than "0", "sym" or a rational literal.
    static WeightMode parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const WeightMode&, const WeightMode&) = default;
};

/// Basis pair (e_i, e_j) and coordinate e_k a generated polynomial came from.
struct Provenance {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;

    [[nodiscard]] std::string label() const;  // "(i,j,ek)"
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct LabeledPolynomial {
    std::string label;
    Polynomial poly;
    std::optional<Provenance> source;

    friend bool operator==(const LabeledPolynomial&, const LabeledPolynomial&) = default;
};

struct PolySystem {
    WeightMode mode;
    std::vector<LabeledPolynomial> polys;

    [[nodiscard]] std::vector<Polynomial> polynomials() const;
    [[nodiscard]] const LabeledPolynomial* find(std::string_view label) const;
    friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

/// The 64 coordinate polynomials of
///
///     R(R(e_i)e_j) + R(e_i R(e_j)) + lambda R(e_i e_j) - R(e_i)R(e_j)
///
/// in the indeterminates a11..a44 (and l in symbolic mode), ordered by i, then
/// j, then k. Products go through the generic structure-table path.
PolySystem generate_system(const WeightMode& mode, const StructureTable& table = StructureTable::dual_quaternion());

/// Values for the 17 slots a11..a44, l taken from a matrix and a weight.
std::vector<Scalar> assignment(const OperatorMatrix& r, const Scalar& lambda);

/// Exact evaluation at a matrix; the weight symbol takes the value lambda.
Scalar evaluate_at(const Polynomial& p, const OperatorMatrix& r, const Scalar& lambda);

/// Lines of the form "label: polynomial" or a bare polynomial (labelled #n).
/// Blank lines and '#' comments are skipped; a "# weight: <0|sym|p/q>" comment
/// sets the mode, otherwise it is symbolic iff some polynomial uses l.
/// Throws ParseError with the 1-based line and column of the offending input.
PolySystem parse_paper_system(std::string_view text, const VariableRing& ring = VariableRing::rota_baxter());

std::string format_system_text(const PolySystem& system, const VariableRing& ring = VariableRing::rota_baxter());

enum class MatchKind { Exact, ScalarMultiple, Mismatch };

struct ComparisonEntry {
    std::string label;           // transcribed label
    std::string slot;            // generated label it was compared with ("" if none)
    MatchKind kind = MatchKind::Mismatch;
    Scalar factor;               // transcribed = factor * generated, for ScalarMultiple
    Polynomial difference;       // transcribed - generated slot, for Mismatch with a slot
    std::vector<std::string> exact_elsewhere;  // other generated labels equal to the transcription
};

struct ComparisonReport {
    std::vector<ComparisonEntry> entries;
    std::size_t exact = 0;
    std::size_t scalar_multiple = 0;
    std::size_t mismatch = 0;

    [[nodiscard]] std::vector<std::string> discrepancies() const;
};

/// Transcribed label -> generated label.
using LabelMap = std::map<std::string, std::string, std::less<>>;

/// Reads "label... (i,j,ek)" lines; every label on a line maps to the slot at its end.
LabelMap parse_label_map(std::string_view text);

/// Audits each transcribed polynomial against the generated slot chosen by the
/// label map (or a same-labelled generated polynomial). The generated system is
/// authoritative; a transcription without a slot is matched against the whole
/// generated system.
ComparisonReport compare_systems(const PolySystem& generated, const PolySystem& transcribed,
                                 const LabelMap& label_map = {});

std::string to_string(MatchKind kind);

}  // namespace rbdq
