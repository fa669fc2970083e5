#include "m0nlab/expr.hpp"

#include <cctype>

namespace m0nlab {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int n;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool starts(const char* kw) {
        skip();
        std::size_t i = 0;
        while (kw[i] && pos + i < s.size() && s[pos + i] == kw[i]) ++i;
        if (kw[i]) return false;
        pos += i;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ExprError(msg + " at offset " + std::to_string(pos));
    }
    long number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stol(s.substr(start, pos - start));
    }

    ChowClass expr() {
        ChowClass v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    ChowClass term() {
        ChowClass v = factor();
        while (eat('*')) v = multiply(v, factor());
        return v;
    }
    ChowClass factor() {
        ChowClass v = atom();
        if (eat('^')) {
            long e = number();
            if (e < 0) fail("negative exponent");
            v = power(v, static_cast<int>(e));
        }
        return v;
    }
    ChowClass atom() {
        skip();
        if (eat('-')) {
            ChowClass v = atom();
            v *= Int(-1);
            return v;
        }
        if (eat('(')) {
            ChowClass v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (starts("psi(")) {
            long l = number();
            if (!eat(')')) fail("expected ')'");
            return ChowClass::psi(static_cast<int>(l), n);
        }
        if (starts("D{")) {
            std::vector<int> labels;
            labels.push_back(static_cast<int>(number()));
            while (eat(',')) labels.push_back(static_cast<int>(number()));
            if (!eat('}')) fail("expected '}'");
            return ChowClass::divisor(labels_to_mask(labels, n), n);
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            ChowClass v = ChowClass::one(n);
            v *= Int(number());
            return v;
        }
        fail("expected D{...}, psi(...), a number, or '('");
    }
};

} // namespace

ChowClass parse_chow_expr(const std::string& text, int n) {
    Parser p{text, 0, n};
    ChowClass v = p.expr();
    p.skip();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

} // namespace m0nlab
