#include "qma/intpoly.hpp"

#include "qma/errors.hpp"

namespace qma {

IntPoly::IntPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
}

IntPoly IntPoly::monomial(Int c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const Int& IntPoly::leading() const {
    static const Int zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Int IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<size_t>(k)];
}

int IntPoly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::mul_int(const Int& c) const {
    if (c == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::strong_ordering IntPoly::operator<=>(const IntPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size())
        return coeffs_.size() <=> o.coeffs_.size();
    for (size_t i = coeffs_.size(); i-- > 0;) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (leading() < 0) g = -g;
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c /= g;
    return r;
}

IntPoly IntPoly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    IntPoly r;
    r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& d) const {
    if (d.is_zero()) throw ArithmeticError("polynomial division by zero");
    if (is_zero()) return IntPoly();
    IntPoly rem(*this);
    IntPoly quot;
    quot.coeffs_.assign(static_cast<size_t>(degree() - d.degree()) + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        Int c = rem.leading() / d.leading();
        int k = rem.degree() - d.degree();
        quot.coeffs_[static_cast<size_t>(k)] = c;
        rem = rem - d.mul_int(c) * IntPoly::monomial(Int(1), k);
    }
    if (!rem.is_zero()) throw ArithmeticError("inexact polynomial division");
    quot.trim();
    return quot;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + Rational(coeffs_[i]);
    }
    return acc;
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    int steps = a.degree() - b.degree() + 1;
    for (int i = 0; i < steps; ++i) {
        if (a.is_zero() || a.degree() < b.degree()) {
            a = a.mul_int(b.leading());
            continue;
        }
        Int c = a.leading();
        int k = a.degree() - b.degree();
        a = a.mul_int(b.leading()) - b.mul_int(c) * IntPoly::monomial(Int(1), k);
    }
    return a;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly() : b.primitive_part().mul_int(b.content());
    if (b.is_zero()) return a.primitive_part().mul_int(a.content());
    Int c = gcd(a.content(), b.content());
    IntPoly u = a.primitive_part();
    IntPoly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_rem(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return u.primitive_part().mul_int(c);
}

bool poly_sqrt(const IntPoly& f, IntPoly& root) {
    if (f.is_zero()) {
        root = IntPoly();
        return true;
    }
    if (f.degree() % 2 != 0 || f.leading() < 0) return false;
    Int lead_rt;
    mpz_sqrt(lead_rt.get_mpz_t(), f.leading().get_mpz_t());
    if (lead_rt * lead_rt != f.leading()) return false;

    // Match coefficients from the top: g = sum g_i q^i with g_m = lead_rt.
    int m = f.degree() / 2;
    std::vector<Int> g(static_cast<size_t>(m) + 1, Int(0));
    g[static_cast<size_t>(m)] = lead_rt;
    for (int k = m - 1; k >= 0; --k) {
        // Coefficient of q^(k+m) in g^2 is 2 g_m g_k + (known terms).
        Int known(0);
        for (int i = k + 1; i <= m; ++i) {
            int j = k + m - i;
            if (j <= m && j >= k + 1) known += g[static_cast<size_t>(i)] * g[static_cast<size_t>(j)];
        }
        Int target = f.coeff(k + m) - known;
        Int den = 2 * lead_rt;
        if (target % den != 0) return false;
        g[static_cast<size_t>(k)] = target / den;
    }
    IntPoly cand;
    cand = IntPoly();
    for (int i = m; i >= 0; --i)
        cand = cand + IntPoly::monomial(g[static_cast<size_t>(i)], i);
    if (cand * cand == f) {
        root = cand;
        return true;
    }
    return false;
}

}  // namespace qma
