#include "novipot/laurent.hpp"

#include <cctype>

namespace novipot {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Lattice& lattice, std::vector<std::string> variables)
        : text_(text), lattice_(lattice), vars_(std::move(variables)) {}

    LaurentPoly parse() {
        LaurentPoly p = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p.with_variables(vars_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    LaurentPoly expr() {
        LaurentPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly term() {
        LaurentPoly acc = unary();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (c == '/') {
                ++pos_;
                const std::size_t at = pos_;
                LaurentPoly divisor = unary();
                if (divisor.is_zero()) throw SyntaxError(at, "division by zero");
                if (!divisor.is_monomial()) throw SyntaxError(at, "division by a non-monomial expression");
                acc = acc * divisor.monomial_inverse();
            } else {
                return acc;
            }
        }
    }

    LaurentPoly unary() {
        if (peek() == '-') {
            ++pos_;
            return -unary();
        }
        return power();
    }

    LaurentPoly power() {
        bool bare_t = false;
        LaurentPoly base = primary(bare_t);
        if (peek() != '^') return base;
        ++pos_;
        const std::size_t at = pos_;
        const Rational e = exponent();
        if (bare_t) return LaurentPoly::constant(lattice_, NovikovElement::monomial(lattice_, 1, e), vars_);
        if (!is_integer(e)) throw SyntaxError(at, "rational exponents are only allowed on T");
        const auto n = to_int64(e);
        if (n < 0 && !base.is_monomial()) throw SyntaxError(at, "negative power of a non-monomial expression");
        return pow(base, static_cast<int>(n));
    }

    Rational exponent() {
        if (peek() == '{') {
            ++pos_;
            const Integer num = integer(true);
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                den = integer(false);
                if (den == 0) fail("zero denominator in exponent");
            }
            expect('}');
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        return Rational(integer(true));
    }

    Integer integer(bool allow_sign) {
        bool negative = false;
        if (allow_sign && peek() == '-') {
            negative = true;
            ++pos_;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        Integer z(std::string(text_.substr(start, pos_ - start)), 10);
        return negative ? Integer(-z) : z;
    }

    LaurentPoly primary(bool& bare_t) {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return LaurentPoly::constant(lattice_, Rational(integer(false)), vars_);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "T") {
                bare_t = true;
                return LaurentPoly::constant(lattice_, NovikovElement::monomial(lattice_, 1, 1), vars_);
            }
            if (name == "E" && pos_ < text_.size() && text_[pos_] == '{') {
                ++pos_;
                const std::size_t at = pos_;
                LaurentPoly inner = expr();
                expect('}');
                if (!inner.is_constant()) throw SyntaxError(at, "E{...} needs a variable-free argument");
                const NovikovElement arg =
                    inner.is_zero() ? NovikovElement::zero(lattice_) : inner.terms().begin()->second;
                if (!arg.is_zero() && arg.valuation() <= Valuation(0)) {
                    throw SyntaxError(at, "E{...} needs an argument of positive valuation");
                }
                return LaurentPoly::constant(lattice_, exp(arg), vars_);
            }
            if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
            return LaurentPoly::variable(lattice_, name, vars_);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("expected an operand, found '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Lattice lattice_;
    std::vector<std::string> vars_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const Lattice& lattice, std::vector<std::string> variables) {
    return Parser(text, lattice, std::move(variables)).parse();
}

NovikovElement parse_scalar(std::string_view text, const Lattice& lattice) {
    const LaurentPoly p = parse_laurent(text, lattice);
    if (!p.variables().empty() && !p.is_constant()) {
        throw SyntaxError(0, "expected a variable-free expression");
    }
    return p.is_zero() ? NovikovElement::zero(lattice) : p.terms().begin()->second;
}

}  // namespace novipot
