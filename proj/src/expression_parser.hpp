#pragma once

// Small recursive-descent parser for polynomial / rational-function input.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "contact_sextic/error.hpp"
#include "contact_sextic/rational.hpp"

namespace contact_sextic::detail {

template <class T, class Ops>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, Ops ops) : text_(text), ops_(std::move(ops)) {}

    T parse() {
        T value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    T expr() {
        T value = term();
        for (;;) {
            if (accept('+'))
                value = value + term();
            else if (accept('-'))
                value = value - term();
            else
                return value;
        }
    }

    T term() {
        T value = unary();
        for (;;) {
            if (accept('*'))
                value = value * unary();
            else if (accept('/'))
                value = ops_.divide(value, unary());
            else
                return value;
        }
    }

    T unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    T power() {
        T base = atom();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    T atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            T inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return T(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            return ops_.identifier(std::string(text_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    Ops ops_;
    std::size_t pos_ = 0;
};

}  // namespace contact_sextic::detail
