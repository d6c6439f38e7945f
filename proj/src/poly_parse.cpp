#include <cctype>
#include <string>

#include "rbdq/errors.hpp"
#include "rbdq/polynomial.hpp"

namespace rbdq {

namespace {

class Parser {
public:
    Parser(std::string_view text, const VariableRing& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) {
            fail("empty polynomial");
        }
        Polynomial out;
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (consume_minus()) {
                sign = -1;
            } else if (peek() == '+') {
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            skip_space();
            Polynomial term = parse_term();
            out += sign < 0 ? -term : term;
            first = false;
            skip_space();
        }
        return out;
    }

private:
    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
    [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    bool consume_minus() {
        if (peek() == '-') {
            ++pos_;
            return true;
        }
        if (text_.substr(pos_, 3) == "\xE2\x88\x92") {  // U+2212
            pos_ += 3;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    std::string_view digits() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Polynomial parse_factor() {
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            std::string literal(digits());
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                const auto den = digits();
                if (den.empty()) {
                    fail("expected denominator");
                }
                if (den.find_first_not_of('0') == std::string_view::npos) {
                    fail("zero denominator");
                }
                literal += "/" + std::string(den);
            }
            return Polynomial(Scalar::parse(literal));
        }
        if (std::isalpha(static_cast<unsigned char>(peek())) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
            const auto name = text_.substr(start, pos_ - start);
            const auto var = ring_.index_of(name);
            if (!var) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            skip_space();
            std::uint16_t power = 1;
            if (peek() == '^') {
                ++pos_;
                skip_space();
                const auto e = digits();
                if (e.empty() || e.size() > 4) {
                    fail("expected exponent");
                }
                power = static_cast<std::uint16_t>(std::stoul(std::string(e)));
            }
            return Polynomial::monomial(Monomial::variable(*var, power), Scalar(1));
        }
        fail(at_end() ? "unexpected end of input" : std::string("unexpected character '") + peek() + "'");
    }

    Polynomial parse_term() {
        Polynomial term = parse_factor();
        skip_space();
        while (peek() == '*') {
            ++pos_;
            term *= parse_factor();
            skip_space();
        }
        return term;
    }

    std::string_view text_;
    const VariableRing& ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableRing& ring) { return Parser(text, ring).parse(); }

}  // namespace rbdq
