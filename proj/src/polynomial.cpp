#include "rbdq/polynomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rbdq {

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (auto e : exps) {
        d += e;
    }
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (exps[v] > other.exps[v]) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    Monomial out;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        out.exps[v] = static_cast<std::uint16_t>(exps[v] - divisor.exps[v]);
    }
    return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (exps[v] != 0 && other.exps[v] != 0) {
            return false;
        }
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        out.exps[v] = std::max(a.exps[v], b.exps[v]);
    }
    return out;
}

Monomial Monomial::variable(std::size_t var, std::uint16_t power) {
    if (var >= kMaxVars) {
        throw std::out_of_range("variable slot out of range");
    }
    Monomial m;
    m.exps[var] = power;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        out.exps[v] = static_cast<std::uint16_t>(a.exps[v] + b.exps[v]);
    }
    return out;
}

VariableRing::VariableRing(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) {
        throw std::invalid_argument("too many variables");
    }
}

const VariableRing& VariableRing::rota_baxter() {
    static const VariableRing ring = [] {
        std::vector<std::string> names;
        for (int r = 1; r <= 4; ++r) {
            for (int c = 1; c <= 4; ++c) {
                names.push_back("a" + std::to_string(r) + std::to_string(c));
            }
        }
        names.emplace_back("l");
        return VariableRing(std::move(names));
    }();
    return ring;
}

const VariableRing& VariableRing::saturated() {
    static const VariableRing ring = [] {
        auto names = rota_baxter().names();
        names.emplace_back("t");
        return VariableRing(std::move(names));
    }();
    return ring;
}

std::optional<std::size_t> VariableRing::index_of(std::string_view name) const {
    for (std::size_t v = 0; v < names_.size(); ++v) {
        if (names_[v] == name) {
            return v;
        }
    }
    return std::nullopt;
}

bool canonical_greater(const Monomial& a, const Monomial& b) {
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) {
        return da > db;
    }
    for (std::size_t v = kMaxVars; v-- > 0;) {
        if (a.exps[v] != b.exps[v]) {
            return a.exps[v] < b.exps[v];
        }
    }
    return false;
}

Polynomial::Polynomial(const Scalar& constant) {
    if (!constant.is_zero()) {
        terms_.push_back({Monomial{}, constant});
    }
}

Polynomial Polynomial::variable(std::size_t var) { return monomial(Monomial::variable(var), Scalar(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& coeff) {
    Polynomial p;
    if (!coeff.is_zero()) {
        p.terms_.push_back({m, coeff});
    }
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return canonical_greater(a.mono, b.mono); });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) {
                p.terms_.pop_back();
            }
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff.is_zero()) {
        p.terms_.pop_back();
    }
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.mono.total_degree());
    }
    return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) {
        d = std::max<unsigned>(d, t.mono.exps[var]);
    }
    return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
        if (t.mono == m) {
            return t.coeff;
        }
    }
    return Scalar(0);
}

Scalar Polynomial::evaluate(std::span<const Scalar> values) const {
    Scalar total(0);
    for (const auto& t : terms_) {
        Scalar value = t.coeff;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            if (t.mono.exps[v] == 0) {
                continue;
            }
            if (v >= values.size()) {
                throw std::invalid_argument("evaluate: missing value for variable slot " + std::to_string(v));
            }
            value *= values[v].pow(t.mono.exps[v]);
        }
        total += value;
    }
    return total;
}

Polynomial Polynomial::substitute(std::size_t var, const Scalar& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Term s = t;
        if (s.mono.exps[var] != 0) {
            s.coeff *= value.pow(s.mono.exps[var]);
            s.mono.exps[var] = 0;
        }
        out.push_back(std::move(s));
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::normalized() const {
    if (terms_.empty()) {
        return *this;
    }
    return *this * terms_.front().coeff.inverse();
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial out(1);
    for (unsigned i = 0; i < exponent; ++i) {
        out *= *this;
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto a = terms_.begin();
    auto b = rhs.terms_.begin();
    while (a != terms_.end() || b != rhs.terms_.end()) {
        if (b == rhs.terms_.end() || (a != terms_.end() && canonical_greater(a->mono, b->mono))) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || canonical_greater(b->mono, a->mono)) {
            merged.push_back(*b++);
        } else {
            Scalar c = a->coeff + b->coeff;
            if (!c.is_zero()) {
                merged.push_back({a->mono, std::move(c)});
            }
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.coeff *= rhs;
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    // Shifting a sorted polynomial by a monomial keeps it sorted, so each
    // partial product can be merged in linear time.
    Polynomial out;
    for (const auto& ta : a.terms_) {
        Polynomial shifted;
        shifted.terms_.reserve(b.terms_.size());
        for (const auto& tb : b.terms_) {
            shifted.terms_.push_back({ta.mono * tb.mono, ta.coeff * tb.coeff});
        }
        out += shifted;
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) {
        t.coeff = -t.coeff;
    }
    return out;
}

std::string to_string(const Polynomial& p, const VariableRing& ring) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Scalar magnitude = negative ? -t.coeff : t.coeff;
        std::string factors;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            const auto e = t.mono.exps[v];
            if (e == 0) {
                continue;
            }
            if (v >= ring.size()) {
                throw std::invalid_argument("to_string: variable slot " + std::to_string(v) + " has no name");
            }
            if (!factors.empty()) {
                factors += "*";
            }
            factors += ring.name(v);
            if (e > 1) {
                factors += "^" + std::to_string(e);
            }
        }
        if (factors.empty()) {
            out += magnitude.to_string();
        } else if (magnitude.is_one()) {
            out += factors;
        } else {
            out += magnitude.to_string() + "*" + factors;
        }
    }
    return out;
}

}  // namespace rbdq
