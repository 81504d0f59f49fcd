#include "supergeom/parser.hpp"

#include <cctype>

namespace sg {

namespace {

class Parser {
public:
    Parser(const TablePtr& table, const std::string& text) : table_(table), s_(text) {}

    SuperPolynomial parse() {
        SuperPolynomial p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

private:
    const TablePtr& table_;
    const std::string& s_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SuperPolynomial expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        SuperPolynomial p = term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                p += term();
            } else if (c == '-') {
                ++pos_;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }

    SuperPolynomial term() {
        SuperPolynomial p = power();
        while (peek() == '*') {
            ++pos_;
            p = p * power();
        }
        return p;
    }

    SuperPolynomial power() {
        size_t base_pos = pos_;
        SuperPolynomial p = factor();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t e_pos = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected nonnegative integer exponent", e_pos);
            long long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 1000) throw ParseError("exponent too large", e_pos);
                ++pos_;
            }
            auto par = p.parity();
            if (e > 1 && par && *par == Parity::Odd)
                throw ParseError("exponent > 1 on an odd expression", base_pos);
            return p.pow(static_cast<int>(e));
        }
        return p;
    }

    SuperPolynomial factor() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            SuperPolynomial p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    SuperPolynomial rational_literal() {
        size_t start = pos_;
        std::string num;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            num.push_back(s_[pos_++]);
        if (pos_ < s_.size() && s_[pos_] == '/') {
            size_t save = pos_;
            ++pos_;
            std::string den;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                den.push_back(s_[pos_++]);
            if (den.empty()) {
                pos_ = save;  // not a fraction; "/" belongs to caller (never valid, caught later)
            } else {
                Rational q(BigInt::from_string(num), BigInt::from_string(den));
                return SuperPolynomial::constant(table_, q);
            }
        }
        (void)start;
        return SuperPolynomial::constant(table_, Rational(BigInt::from_string(num)));
    }

    SuperPolynomial identifier() {
        size_t start = pos_;
        std::string name;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            name.push_back(s_[pos_++]);
        int idx = table_->index_of(name);
        if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
        return SuperPolynomial::variable(table_, idx);
    }
};

}  // namespace

SuperPolynomial parse_expression(const TablePtr& table, const std::string& text) {
    return Parser(table, text).parse();
}

}  // namespace sg
