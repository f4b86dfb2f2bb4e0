#include <cctype>
#include <stdexcept>

#include "altcohom/alt.hpp"

namespace altcohom::alt {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    AltClass parse() {
        AltClass r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    int integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 6) fail("integer too large");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    AltClass expr() {
        AltClass r = term();
        while (eat('+')) {
            std::size_t at = pos_;
            AltClass t = term();
            try {
                r += t;
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), at);
            }
        }
        return r;
    }

    AltClass term() {
        AltClass r = factor();
        while (true) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == 'o') {
                ++pos_;
                AltClass f = factor();
                r = odot(r, f);
            } else {
                return r;
            }
        }
    }

    AltClass factor() {
        AltClass r = power();
        while (eat('*')) r = cup(r, power());
        return r;
    }

    AltClass power() {
        AltClass r = primary();
        if (eat('^')) r = alt::power(r, integer());
        return r;
    }

    AltClass primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        std::size_t at = pos_;
        try {
            if (eat('(')) {
                AltClass r = expr();
                expect(')');
                return r;
            }
            char c = s_[pos_];
            if (c == 'g') {
                ++pos_;
                int sign;
                if (eat('+')) sign = 0;
                else if (eat('-')) sign = 1;
                else fail("expected g+ or g-");
                expect('(');
                int l = integer();
                expect(',');
                int m = integer();
                expect(')');
                return gamma_pm(l, m, sign);
            }
            if (c == 's') {
                ++pos_;
                expect('(');
                int k = integer();
                expect(';');
                int m = integer();
                expect(')');
                return scale_one(k, m);
            }
            if (c == 'L') {
                ++pos_;
                expect('(');
                int p = integer();
                expect(',');
                int n = integer();
                expect(')');
                return a4_lift(p, n, 0);
            }
            if (c == '1') {
                ++pos_;
                if (eat('+')) return sign_plus();
                if (eat('-')) return sign_minus();
                expect('(');
                int m = integer();
                expect(')');
                return unit(m);
            }
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), at);
        }
        fail("expected a generator");
    }
};

}  // namespace

AltClass parse_alt(const std::string& text) { return Parser(text).parse(); }

}  // namespace altcohom::alt
