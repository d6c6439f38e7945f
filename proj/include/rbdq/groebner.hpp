#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbdq/polynomial.hpp"
#include "rbdq/polysystem.hpp"

namespace rbdq {

enum class OrderKind { Lex, Grevlex };

/// Monomial order over the variable slots listed in `priority`, largest first.
class TermOrder {
public:
    TermOrder(OrderKind kind, std::vector<std::size_t> priority);

    /// Natural priority 0 > 1 > ... > nvars-1.
    static TermOrder grevlex(std::size_t nvars);
    static TermOrder lex(std::size_t nvars);

    [[nodiscard]] OrderKind kind() const { return kind_; }
    [[nodiscard]] const std::vector<std::size_t>& priority() const { return priority_; }

    /// Strict comparison: is a larger than b?
    [[nodiscard]] bool greater(const Monomial& a, const Monomial& b) const;

    /// e.g. "grevlex(a11>a12>...>l)"
    [[nodiscard]] std::string describe(const VariableRing& ring) const;

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    OrderKind kind_;
    std::vector<std::size_t> priority_;
};

std::string to_string(OrderKind kind);
/// "lex" or "grevlex"; throws ParseError otherwise.
OrderKind parse_order_kind(const std::string& name);

Monomial leading_monomial(const Polynomial& p, const TermOrder& order);
Scalar leading_coefficient(const Polynomial& p, const TermOrder& order);

struct BuchbergerLimits {
    std::size_t max_pairs = 100000;  // S-pairs reduced
    unsigned max_degree = 12;        // lcm degree of any selected pair
};

struct BuchbergerStats {
    std::size_t pairs_reduced = 0;
    std::size_t pairs_discarded = 0;  // removed by the Gebauer-Moeller criteria
    std::size_t zero_reductions = 0;
    unsigned max_pair_degree = 0;
    std::size_t basis_size = 0;
};

/// Thrown when a limit is hit; no basis is returned in that case.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(const std::string& what, BuchbergerStats stats) : std::runtime_error(what), stats_(stats) {}
    [[nodiscard]] const BuchbergerStats& stats() const { return stats_; }

private:
    BuchbergerStats stats_;
};

/// Reduced Groebner basis: monic generators sorted by increasing leading monomial.
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> generators;
    BuchbergerStats stats;
};

/// Full multivariate division remainder: no term of the result is divisible by
/// a leading monomial of `divisors`. Divisors are tried in the given order.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& divisors, const TermOrder& order);

struct DivisionResult {
    std::vector<Polynomial> quotients;  // one per divisor
    Polynomial remainder;
};

/// Same division as normal_form, also recording p = sum q_i g_i + remainder.
DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors, const TermOrder& order);

/// Buchberger's algorithm with the Gebauer-Moeller criteria. Pairs are selected
/// by smallest lcm degree, ties broken by creation index. Deterministic for a
/// fixed input sequence and order. Throws std::invalid_argument if every input
/// is zero and LimitExceeded when a limit is reached.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                         const BuchbergerLimits& limits = {});
GroebnerBasis buchberger(const PolySystem& system, const TermOrder& order, const BuchbergerLimits& limits = {});

/// Every S-polynomial of the generators reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& generators, const TermOrder& order);

bool ideal_contains(const GroebnerBasis& basis, const Polynomial& p);

/// Cofactors q_i with p = sum q_i g_i over the basis generators, verified by
/// exact arithmetic before being returned; nullopt if p is not in the ideal.
std::optional<std::vector<Polynomial>> membership_certificate(const GroebnerBasis& basis, const Polynomial& p);

struct MembershipVerdict {
    std::string label;
    bool member = false;
    // Only evaluated when member is false: p^2 and p^3 membership hint at
    // radical (variety-level) containment.
    bool square_member = false;
    bool cube_member = false;
};

struct IdealComparison {
    std::vector<MembershipVerdict> first_in_second;   // generators of A tested in <B>
    std::vector<MembershipVerdict> second_in_first;   // generators of B tested in <A>
    bool first_subset_second = false;
    bool second_subset_first = false;
    [[nodiscard]] bool equal() const { return first_subset_second && second_subset_first; }
};

std::vector<MembershipVerdict> membership_report(const GroebnerBasis& basis, const PolySystem& candidates);

/// Computes a basis of each side and tests every generator against the other ideal.
IdealComparison compare_ideals(const PolySystem& first, const PolySystem& second, const TermOrder& order,
                               const BuchbergerLimits& limits = {});

/// Appends t*l - 1 (label "weight-inverse"); the resulting ideal restricted to
/// t-free polynomials is the saturation by the weight, i.e. it encodes l != 0.
PolySystem with_weight_inverse(const PolySystem& system);

}  // namespace rbdq
