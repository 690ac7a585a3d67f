#include "jmult/parser.hpp"

#include <cctype>

namespace jmult {
namespace {

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring) : text_(text), ring_(ring) {}

    Polynomial run() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected input", pos_);
        return p;
    }

private:
    const std::string& text_;
    const RingPtr& ring_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Polynomial acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (eat('^')) {
            unsigned e = parse_uint("exponent expected");
            if (e > kMaxExponent) throw ParseError("exponent overflow", pos_);
            b = b.pow(e);
        }
        return b;
    }

    Polynomial base() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Polynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint32_t p = ring_->field().characteristic();
            std::uint64_t v = 0;
            skip_ws();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
                v %= p;
                ++pos_;
            }
            return Polynomial::constant(ring_, static_cast<long long>(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            skip_ws();
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            int idx = ring_->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            return Polynomial::variable(ring_, idx);
        }
        throw ParseError("expected a number, variable or '('", pos_);
    }

    unsigned parse_uint(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(what, pos_);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > kMaxExponent) throw ParseError("exponent overflow", pos_);
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace jmult
