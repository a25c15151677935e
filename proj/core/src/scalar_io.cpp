#include "qma/scalar_io.hpp"

#include <cctype>

#include "qma/errors.hpp"

namespace qma {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Scalar parse() {
        Scalar r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return r;
    }

private:
    Scalar expr() {
        Scalar r = term();
        for (;;) {
            skip_ws();
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }

    Scalar term() {
        Scalar r = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) r *= factor();
            else if (accept('/')) {
                Scalar d = factor();
                if (d.is_zero()) throw ArithmeticError("division by zero in scalar expression");
                r /= d;
            } else
                return r;
        }
    }

    Scalar factor() {
        skip_ws();
        if (accept('-')) return -factor();
        Scalar base = atom();
        skip_ws();
        if (accept('^')) return base.pow(exponent());
        return base;
    }

    Scalar atom() {
        skip_ws();
        if (accept('(')) {
            Scalar r = expr();
            skip_ws();
            expect(')');
            return r;
        }
        if (accept('q')) return Scalar::q();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return Scalar(Int(integer_literal()));
        fail("expected integer, q or (");
        return Scalar();
    }

    long exponent() {
        skip_ws();
        if (accept('(')) {
            skip_ws();
            bool neg = accept('-');
            long v = integer_literal();
            skip_ws();
            expect(')');
            return neg ? -v : v;
        }
        bool neg = accept('-');
        return neg ? -integer_literal() : integer_literal();
    }

    long integer_literal() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return std::stol(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& why) {
        throw FormatError("scalar parse error at position " + std::to_string(pos_) + ": " + why);
    }

    const std::string& text_;
    size_t pos_ = 0;
};

std::string monomial_string(const Int& c, int k, bool leading) {
    std::string s;
    Int a = c < 0 ? Int(-c) : c;
    if (!leading) s += (c < 0) ? " - " : " + ";
    else if (c < 0) s += "-";
    if (a != 1 || k == 0) {
        s += a.get_str();
        if (k != 0) s += "*";
    }
    if (k == 1) s += "q";
    else if (k != 0) s += "q^" + std::to_string(k);
    return s;
}

std::string poly_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool leading = true;
    for (int k = p.degree(); k >= 0; --k) {
        Int c = p.coeff(k);
        if (c == 0) continue;
        s += monomial_string(c, k, leading);
        leading = false;
    }
    return s;
}

bool is_single_term(const IntPoly& p) {
    int nz = 0;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) ++nz;
    return nz == 1;
}

// Atoms that bind tighter than '/': an integer, q, or q^k.
bool is_division_safe_atom(const IntPoly& p) {
    return is_single_term(p) && (p.coeff(p.degree()) == 1 || p.degree() == 0);
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return Parser(text).parse(); }

std::string scalar_to_string(const Scalar& x) {
    if (x.is_zero()) return "0";
    IntPoly num = x.num();
    IntPoly den = x.den();
    if (x.shift() > 0)
        num = num * IntPoly::monomial(Int(1), static_cast<int>(x.shift()));
    else if (x.shift() < 0)
        den = den * IntPoly::monomial(Int(1), static_cast<int>(-x.shift()));
    if (den.is_one()) return poly_string(num);
    std::string ns = poly_string(num);
    if (!is_single_term(num)) ns = "(" + ns + ")";
    std::string ds = poly_string(den);
    if (!is_division_safe_atom(den)) ds = "(" + ds + ")";
    return ns + "/" + ds;
}

Rational parse_rational(const std::string& text) {
    Scalar s = parse_scalar(text);
    return scalar_to_rational(s);
}

std::string rational_to_string(const Rational& x) {
    return x.get_str();
}

Rational scalar_to_rational(const Scalar& x) {
    if (!x.is_constant()) throw DomainError("expected a rational constant, got a q-dependent value");
    if (x.is_zero()) return Rational(0);
    Rational r(x.num().coeff(0), x.den().coeff(0));
    r.canonicalize();
    return r;
}

}  // namespace qma
