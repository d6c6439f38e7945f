#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rbdq {

/// Exact rational number, always in lowest terms with a positive denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Scalar(std::int64_t numerator, std::int64_t denominator);
    explicit Scalar(mpq_class value);

    /// Parses "p", "-p" or "p/q" (decimal). Non-reduced input is accepted and normalized.
    static Scalar parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_one() const { return value_ == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] std::string numerator_string() const { return value_.get_num().get_str(); }
    [[nodiscard]] std::string denominator_string() const { return value_.get_den().get_str(); }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    /// Throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Scalar& lhs, const Scalar& rhs);

    [[nodiscard]] Scalar inverse() const;
    [[nodiscard]] Scalar pow(unsigned exponent) const;

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace rbdq
