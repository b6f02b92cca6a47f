#include "extactic/parse.hpp"

#include <cctype>
#include <sstream>

namespace extactic {

namespace {

constexpr std::uint32_t kExpCap = 1u << 20;

class Parser {
public:
    Parser(const std::string& text, const VarsPtr& vars) : text_(text), vars_(vars) {}

    MultiPoly run() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& text_;
    const VarsPtr& vars_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << ": " << msg;
        throw InputError(os.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr() {
        bool neg = false;
        while (true) {
            if (consume('-')) neg = !neg;
            else if (consume('+')) continue;
            else break;
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (consume('+')) acc += term();
            else if (consume('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (consume('*')) acc = acc * factor();
        // "2x" or ")(": reject with position
        char c = peek();
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
            fail("implicit multiplication is not allowed");
        return acc;
    }

    MultiPoly factor() {
        bool neg = false;
        while (consume('-')) neg = !neg;
        MultiPoly a = atom();
        while (consume('^')) {
            std::uint64_t e = natural();
            if (e > kExpCap) fail("exponent overflow");
            a = a.pow(static_cast<std::uint32_t>(e));
        }
        return neg ? -a : a;
    }

    MultiPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!consume(')')) fail("missing closing parenthesis");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("expected number, variable, or parenthesized expression");
    }

    std::uint64_t natural() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a nonnegative integer literal");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::uint64_t(1) << 40)) fail("exponent overflow");
            ++pos_;
        }
        return v;
    }

    std::string integer_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    MultiPoly number() {
        std::string num = integer_digits();
        // `/` directly between integer literals forms a rational constant
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::string den = integer_digits();
            if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
            return MultiPoly::constant(vars_, rat_from_string(num + "/" + den));
        }
        return MultiPoly::constant(vars_, rat_from_string(num));
    }

    MultiPoly variable() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = vars_->index(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        return MultiPoly::variable(vars_, *idx);
    }
};

} // namespace

MultiPoly parse_poly(const std::string& text, const VarsPtr& vars) {
    return Parser(text, vars).run();
}

} // namespace extactic
