#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbdq/scalar.hpp"

namespace rbdq {

/// Exponent slots available to every monomial. The first 17 are the operator
/// entries a11..a44 (row-major) followed by the weight symbol l; slot 17 is
/// the auxiliary inverse-of-weight variable used for saturation.
inline constexpr std::size_t kMaxVars = 18;
inline constexpr std::size_t kWeightVar = 16;
inline constexpr std::size_t kSaturationVar = 17;

/// Slot of a_{row,col} (1-based).
constexpr std::size_t entry_var(std::size_t row, std::size_t col) { return (row - 1) * 4 + (col - 1); }

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exps{};

    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] bool is_one() const { return total_degree() == 0; }
    [[nodiscard]] bool divides(const Monomial& other) const;
    /// Requires divisor.divides(*this).
    [[nodiscard]] Monomial divided_by(const Monomial& divisor) const;
    [[nodiscard]] bool coprime_with(const Monomial& other) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);
    static Monomial variable(std::size_t var, std::uint16_t power = 1);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Names for the variable slots in use. Parsing and printing go through a ring.
class VariableRing {
public:
    explicit VariableRing(std::vector<std::string> names);

    /// a11, a12, ..., a44, l
    static const VariableRing& rota_baxter();
    /// rota_baxter() plus t, the inverse of l
    static const VariableRing& saturated();

    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t var) const { return names_.at(var); }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view name) const;
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }

    friend bool operator==(const VariableRing&, const VariableRing&) = default;

private:
    std::vector<std::string> names_;
};

struct Term {
    Monomial mono;
    Scalar coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Strict "a comes before b" in storage order: graded reverse lexicographic
/// with slot 0 as the largest variable, larger monomials first.
bool canonical_greater(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in canonical storage order with no zero coefficients, so
/// structural equality is polynomial equality.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(std::int64_t constant) : Polynomial(Scalar(constant)) {}  // NOLINT

    static Polynomial variable(std::size_t var);
    static Polynomial monomial(const Monomial& m, const Scalar& coeff);
    /// Combines like terms, drops zeros and sorts.
    static Polynomial from_terms(std::vector<Term> terms);

    [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] unsigned total_degree() const;
    [[nodiscard]] unsigned degree_in(std::size_t var) const;
    [[nodiscard]] bool uses_variable(std::size_t var) const { return degree_in(var) > 0; }
    [[nodiscard]] Scalar coefficient(const Monomial& m) const;

    /// Exact value at a point; values[v] is substituted for slot v.
    /// Throws std::invalid_argument if a used slot has no value.
    [[nodiscard]] Scalar evaluate(std::span<const Scalar> values) const;
    [[nodiscard]] Polynomial substitute(std::size_t var, const Scalar& value) const;
    /// Divides by the coefficient of the first stored term (zero stays zero).
    [[nodiscard]] Polynomial normalized() const;
    [[nodiscard]] Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Scalar& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
    friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Term> terms_;
};

/// Text form, e.g. "a11^2 + 2*a12*a21 - 3/2*l". The zero polynomial prints as "0".
std::string to_string(const Polynomial& p, const VariableRing& ring = VariableRing::rota_baxter());

/// Parses the text grammar: terms joined by '+'/'-', each term an optional
/// rational coefficient and variable powers joined by '*'. Whitespace is
/// ignored and U+2212 is accepted as a minus sign. Throws ParseError with a
/// 1-based column (line is left to the caller).
Polynomial parse_polynomial(std::string_view text, const VariableRing& ring = VariableRing::rota_baxter());

}  // namespace rbdq
