#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "pjet/errors.hpp"
#include "pjet/polynomial.hpp"

namespace pjet {

// Recursive-descent parser for the polynomial grammar:
//
//   expr   := ['-' | '+'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := nat | var | '(' expr ')'
//   var    := name ['@' nat]        name := [a-zA-Z][a-zA-Z0-9]*
//
// `^` binds tightest, then `*`, then `+`/`-`; whitespace is insignificant.
// `x` means `x@0`. Errors carry 1-based line/column and the expected tokens.
namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_ws();
        Polynomial p = expr();
        skip_ws();
        if (!at_end()) fail("end of input");
        return p;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = at_end() ? "end of input" : "'" + std::string(1, text_[pos_]) + "'";
        throw SyntaxError("expected " + expected + ", found " + found + " at " +
                              std::to_string(line_) + ":" + std::to_string(col_),
                          line_, col_);
    }

    bool accept(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    std::uint64_t natural(const char* what) {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail(what);
        std::uint64_t v = 0;
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.size() > 18) fail(std::string(what) + " small enough to fit 18 digits");
        for (char c : digits) v = v * 10 + static_cast<std::uint64_t>(c - '0');
        return v;
    }

    Polynomial expr() {
        bool negate = false;
        skip_ws();
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negate = peek() == '-';
            advance();
        }
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() == '+') {
                advance();
                p += term();
            } else if (peek() == '-') {
                advance();
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept('*')) p *= factor();
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        skip_ws();
        if (!at_end() && peek() == '^') {
            advance();
            return pjet::pow(base, natural("exponent"));
        }
        return base;
    }

    Polynomial atom() {
        skip_ws();
        if (at_end()) fail("integer, variable, or '('");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            return Polynomial(BigInt(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
                name += peek();
                advance();
            }
            std::uint32_t order = 0;
            if (!at_end() && peek() == '@') {
                advance();
                std::uint64_t k = natural("jet order");
                if (k > 0xffffffffull) fail("jet order below 2^32");
                order = static_cast<std::uint32_t>(k);
            }
            return Polynomial(Variable(name, order));
        }
        if (c == '(') {
            advance();
            Polynomial p = expr();
            if (!accept(')')) fail("')'");
            return p;
        }
        fail("integer, variable, or '('");
    }
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text) {
    return detail::Parser(text).parse();
}

} // namespace pjet
