#include "form_parse.hpp"

#include <cctype>
#include <map>

namespace cremona {

namespace {

using Terms = std::map<Monomial, Rational, MonomialBefore>;

Terms t_const(const Rational& c) {
    Terms t;
    if (c != 0) t[{0, 0, 0}] = c;
    return t;
}

Terms t_add(const Terms& a, const Terms& b) {
    Terms s = a;
    for (const auto& [m, c] : b) {
        auto [it, inserted] = s.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) s.erase(it);
        }
    }
    return s;
}

Terms t_mul(const Terms& a, const Terms& b) {
    Terms p;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            const Monomial m{ma.a + mb.a, ma.b + mb.b, ma.c + mb.c};
            auto [it, inserted] = p.emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) p.erase(it);
            }
        }
    return p;
}

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Terms parse() {
        Terms t = expr();
        skip_ws();
        if (pos_ != s_.size()) fail(Err::ParseError, "trailing input in polynomial at offset " + std::to_string(pos_));
        return t;
    }

private:
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

    Terms expr() {
        Terms acc = t_const(0);
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        while (true) {
            Terms t = term();
            if (negate) t = t_mul(t, t_const(-1));
            acc = t_add(acc, t);
            if (eat('+')) negate = false;
            else if (eat('-')) negate = true;
            else break;
        }
        return acc;
    }

    Terms term() {
        Terms acc = factor();
        while (true) {
            const char c = peek();
            if (c == '*') {
                eat('*');
                acc = t_mul(acc, factor());
            } else if (c == '(' || c == 'x' || c == 'y' || c == 'z' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = t_mul(acc, factor()); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Terms factor() {
        Terms base_t = base();
        if (eat('^')) {
            const long e = number_long();
            Terms acc = t_const(1);
            for (long i = 0; i < e; ++i) acc = t_mul(acc, base_t);
            return acc;
        }
        return base_t;
    }

    Terms base() {
        skip_ws();
        if (pos_ >= s_.size()) fail(Err::ParseError, "unexpected end of polynomial");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Terms t = expr();
            if (!eat(')')) fail(Err::ParseError, "missing ')' in polynomial");
            return t;
        }
        if (c == 'x' || c == 'y' || c == 'z') {
            ++pos_;
            Monomial m{c == 'x' ? 1 : 0, c == 'y' ? 1 : 0, c == 'z' ? 1 : 0};
            Terms t;
            t[m] = 1;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return t_const(number());
        }
        fail(Err::ParseError, std::string("unexpected character '") + c + "' in polynomial");
    }

    Rational number() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) fail(Err::ParseError, "expected a number in polynomial");
        return rational_from_string(digits);
    }

    long number_long() {
        const Rational n = number();
        return static_cast<long>(n.get_num().get_si());
    }
};

} // namespace

Form parse_form(const std::string& text) {
    Parser p(text);
    Terms t = p.parse();
    if (t.empty()) return Form(0);
    const int degree = t.begin()->first.total();
    Form f(degree);
    for (const auto& [m, c] : t) {
        if (m.total() != degree)
            fail(Err::ParseError, "polynomial is not homogeneous: '" + text + "'");
        f.add_term(m, c);
    }
    return f;
}

} // namespace cremona
