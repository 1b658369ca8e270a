#include <cctype>

#include "rdga/errors.hpp"
#include "rdga/geometry.hpp"

namespace rdga {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Parser {
public:
    Parser(const std::string& s, const Chart& chart, int line, int column)
        : s_(s), chart_(chart), line_(line), col0_(column) {}

    Scalar parse() {
        skip();
        if (pos_ == s_.size()) error("empty expression");
        Scalar v = expr();
        skip();
        if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    const std::string& s_;
    const Chart& chart_;
    int line_, col0_;
    std::size_t pos_ = 0;

    // columns count code points, not bytes
    int column_at(std::size_t p) const {
        int c = col0_;
        for (std::size_t i = 0; i < p && i < s_.size(); ++i)
            if ((static_cast<unsigned char>(s_[i]) & 0xC0) != 0x80) ++c;
        return c;
    }
    [[noreturn]] void error(const std::string& what, std::size_t at) const {
        throw ParseError(what, line_, column_at(at));
    }
    [[noreturn]] void error(const std::string& what) const { error(what, pos_); }

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

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                Scalar den = unary();
                try {
                    v = v * den.inverse();
                } catch (const Error& e) {
                    error(std::string("division: ") + e.what(), at);
                }
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    long exponent() {
        skip();
        bool paren = eat('(');
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected an integer exponent");
        if (pos_ - start > 6) error("exponent too large", start);
        long k = std::stol(s_.substr(start, pos_ - start));
        if (paren && !eat(')')) error("expected ')'");
        return neg ? -k : k;
    }

    Scalar power() {
        Scalar base = primary();
        if (!eat('^')) return base;
        std::size_t at = pos_;
        long k = exponent();
        Scalar r = chart_.ring.one();
        for (long i = 0; i < (k < 0 ? -k : k); ++i) r = r * base;
        if (k < 0) {
            try {
                r = r.inverse();
            } catch (const Error& e) {
                error(std::string("negative power: ") + e.what(), at);
            }
        }
        return r;
    }

    Scalar number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string digits = s_.substr(start, pos_ - start);
        std::string frac;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            std::size_t f0 = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            frac = s_.substr(f0, pos_ - f0);
        }
        if (digits.empty() && frac.empty()) error("malformed number", start);
        Rational q(mpz_class((digits.empty() ? "0" : digits) + frac, 10));
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        q /= den;
        q.canonicalize();
        return chart_.ring.constant(q);
    }

    Scalar primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of expression");
        unsigned char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(c) || c == '.') return number();
        if (!ident_start(c)) error(std::string("unexpected '") + s_[pos_] + "'");
        std::size_t start = pos_;
        while (pos_ < s_.size() && ident_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string id = s_.substr(start, pos_ - start);
        for (int i = 0; i < chart_.n; ++i)
            if (chart_.names[i] == id) return chart_.ring.var(i);
        if (id == "sin" || id == "cos" || id == "exp" || id == "sqrt") {
            if (!eat('(')) error("expected '(' after " + id);
            Scalar a = expr();
            if (!eat(')')) error("expected ')'");
            try {
                if (id == "sin") return a.sin();
                if (id == "cos") return a.cos();
                if (id == "exp") return a.exp();
                return a.sqrt();
            } catch (const Error& e) {
                error(id + ": " + e.what(), start);
            }
        }
        error("unknown name '" + id + "'", start);
    }
};

}  // namespace

Scalar parse_expression(const std::string& text, const Chart& chart, int line, int column) {
    return Parser(text, chart, line, column).parse();
}

}  // namespace rdga
