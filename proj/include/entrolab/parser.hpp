#pragma once

// Text syntax for polynomials. Grammar: integer literals, declared variable
// identifiers, unary minus, binary + - *, ^ with a nonnegative integer
// literal exponent, and parentheses. Implicit multiplication is rejected.

#include <cctype>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entrolab/polynomial.hpp"

namespace entrolab {

namespace detail {

struct Token {
    enum class Kind { integer, ident, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::size_t pos;
    std::string text; // literal digits or identifier
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
            out.push_back({Token::Kind::integer, start,
                           std::string(src.substr(start, i - start))});
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Token::Kind::ident, start,
                           std::string(src.substr(start, i - start))});
        } else {
            Token::Kind k;
            switch (c) {
                case '+': k = Token::Kind::plus; break;
                case '-': k = Token::Kind::minus; break;
                case '*': k = Token::Kind::star; break;
                case '^': k = Token::Kind::caret; break;
                case '(': k = Token::Kind::lparen; break;
                case ')': k = Token::Kind::rparen; break;
                default:
                    throw parse_error(std::string("unexpected character '") + c + "'",
                                      start);
            }
            out.push_back({k, start, std::string(1, c)});
            ++i;
        }
    }
    out.push_back({Token::Kind::end, src.size(), ""});
    return out;
}

template <class F>
class ExprParser {
public:
    using P = Polynomial<typename F::Elem>;

    ExprParser(std::string_view src, std::span<const std::string> variables,
               const F& field, const MonomialOrder& order)
        : tokens_(tokenize(src)), vars_(variables), field_(field), order_(order) {}

    P parse() {
        P r = expr();
        if (peek().kind != Token::Kind::end) {
            const Token& t = peek();
            if (t.kind == Token::Kind::ident || t.kind == Token::Kind::integer ||
                t.kind == Token::Kind::lparen)
                throw parse_error("unexpected '" + t.text +
                                      "'; implicit multiplication is not allowed",
                                  t.pos);
            throw parse_error("unexpected '" + t.text + "'", t.pos);
        }
        return r;
    }

private:
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }
    bool accept(typename Token::Kind k) {
        if (peek().kind == k) { ++cursor_; return true; }
        return false;
    }

    P expr() {
        bool neg = accept(Token::Kind::minus);
        P acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept(Token::Kind::plus)) acc = acc + term();
            else if (accept(Token::Kind::minus)) acc = acc - term();
            else return acc;
        }
    }

    P term() {
        P acc = factor();
        while (accept(Token::Kind::star)) acc = acc * factor();
        return acc;
    }

    P factor() {
        if (accept(Token::Kind::minus)) return -factor();
        P b = base();
        if (accept(Token::Kind::caret)) {
            const Token& t = peek();
            if (t.kind != Token::Kind::integer)
                throw parse_error("exponent must be a nonnegative integer literal",
                                  t.pos);
            advance();
            std::uint32_t e = parse_exponent(t);
            P acc = P::constant(vars_.size(), order_, field_.one());
            for (std::uint32_t k = 0; k < e; ++k) acc = acc * b;
            return acc;
        }
        return b;
    }

    P base() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::integer: {
                advance();
                return P::constant(vars_.size(), order_,
                                   field_.from_integer(BigInt(t.text)));
            }
            case Token::Kind::ident: {
                advance();
                for (std::size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == t.text)
                        return P::variable(vars_.size(), order_, i, field_.one());
                throw parse_error("unknown identifier '" + t.text + "'", t.pos);
            }
            case Token::Kind::lparen: {
                advance();
                P inner = expr();
                if (!accept(Token::Kind::rparen))
                    throw parse_error("expected ')'", peek().pos);
                return inner;
            }
            default:
                throw parse_error("expected an integer, a variable, or '('", t.pos);
        }
    }

    std::uint32_t parse_exponent(const Token& t) const {
        if (t.text.size() > 9)
            throw parse_error("exponent too large", t.pos);
        return static_cast<std::uint32_t>(std::stoul(t.text));
    }

    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    std::span<const std::string> vars_;
    const F& field_;
    MonomialOrder order_;
};

} // namespace detail

template <class F>
Polynomial<typename F::Elem> parse_polynomial(std::string_view src,
                                              std::span<const std::string> variables,
                                              const F& field,
                                              const MonomialOrder& order) {
    detail::ExprParser<F> p(src, variables, field, order);
    return p.parse();
}

template <class F>
Polynomial<typename F::Elem> parse_polynomial(std::string_view src,
                                              const std::vector<std::string>& variables,
                                              const F& field) {
    return parse_polynomial(src, std::span<const std::string>(variables), field,
                            MonomialOrder::degrevlex(variables.size()));
}

// Canonical rendering: terms descending under the polynomial's own order.
// Printing a parsed polynomial and re-parsing it is the identity.
inline std::string monomial_to_string(const Monomial& m,
                                      std::span<const std::string> names) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

template <class K>
std::string to_string(const Polynomial<K>& f,
                      std::span<const std::string> names) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        K mag = display_abs(t.coeff);
        bool neg = displays_negative(t.coeff);
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono = monomial_to_string(t.mono, names);
        if (mono.empty()) {
            s += coeff_to_string(mag);
        } else if (is_display_one(mag)) {
            s += mono;
        } else {
            s += coeff_to_string(mag) + "*" + mono;
        }
    }
    return s;
}

template <class K>
std::string to_string(const Polynomial<K>& f,
                      const std::vector<std::string>& names) {
    return to_string(f, std::span<const std::string>(names));
}

} // namespace entrolab
