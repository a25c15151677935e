#include "qma/scalar.hpp"

#include "qma/errors.hpp"

namespace qma {

Scalar::Scalar(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    num_ = IntPoly(c.get_num());
    den_ = IntPoly(c.get_den());
}

Scalar::Scalar(IntPoly num, IntPoly den, long shift)
    : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    if (den_.is_zero()) throw ArithmeticError("division by zero in Q(q)");
    reduce();
}

Scalar Scalar::q_pow(long e) {
    Scalar r(1);
    r.shift_ = e;
    return r;
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = IntPoly(Int(1));
        shift_ = 0;
        return;
    }
    int vn = num_.valuation();
    int vd = den_.valuation();
    if (vn > 0) num_ = num_.shifted_down(vn);
    if (vd > 0) den_ = den_.shifted_down(vd);
    shift_ += vn - vd;
    IntPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    long s = std::min(shift_, o.shift_);
    IntPoly a = num_ * IntPoly::monomial(Int(1), static_cast<int>(shift_ - s));
    IntPoly b = o.num_ * IntPoly::monomial(Int(1), static_cast<int>(o.shift_ - s));
    return Scalar(a * o.den_ + b * den_, den_ * o.den_, s);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num_ * o.num_, den_ * o.den_, shift_ + o.shift_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in Q(q)");
    return Scalar(den_, num_, -shift_);
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar(1);
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    if (shift_ != o.shift_) return shift_ <=> o.shift_;
    if (auto c = num_ <=> o.num_; c != std::strong_ordering::equal) return c;
    return den_ <=> o.den_;
}

Rational Scalar::specialize(const Rational& q0) const {
    if (q0 == 0 || q0 == 1 || q0 == -1)
        throw GenericityError("q0 must avoid {0, 1, -1}");
    Rational d = den_.eval(q0);
    if (d == 0) throw ArithmeticError("pole at the requested q0");
    Rational n = num_.eval(q0);
    Rational r = n / d;
    if (shift_ != 0) {
        Rational p(1);
        Rational base = shift_ > 0 ? q0 : Rational(1) / q0;
        long e = shift_ > 0 ? shift_ : -shift_;
        for (long i = 0; i < e; ++i) p *= base;
        r *= p;
    }
    r.canonicalize();
    return r;
}

bool Scalar::try_sqrt(Scalar& root) const {
    if (is_zero()) {
        root = Scalar();
        return true;
    }
    if (shift_ % 2 != 0) return false;
    IntPoly rn, rd;
    // Contents of num and den are coprime, so each factor must be a square
    // on its own.
    if (!poly_sqrt(num_, rn)) return false;
    if (!poly_sqrt(den_, rd)) return false;
    root = Scalar(rn, rd, shift_ / 2);
    return true;
}

Scalar q_number(long k) {
    // (q^k - q^-k)/(q - q^-1) = q^(1-k) (q^2k - 1)/(q^2 - 1) for k > 0.
    if (k == 0) return Scalar();
    bool neg = k < 0;
    long a = neg ? -k : k;
    IntPoly num = IntPoly::monomial(Int(1), static_cast<int>(2 * a)) - IntPoly(Int(1));
    IntPoly den = IntPoly::monomial(Int(1), 2) - IntPoly(Int(1));
    Scalar r(num, den, 1 - a);
    return neg ? -r : r;
}

Scalar q_factorial(long k) {
    if (k < 0) throw DomainError("q-factorial of a negative integer");
    Scalar r(1);
    for (long i = 2; i <= k; ++i) r *= q_number(i);
    return r;
}

void check_generic(const Rational& q0, long bound) {
    if (q0 == 0 || q0 == 1 || q0 == -1)
        throw GenericityError("q0 must avoid {0, 1, -1}");
    for (long k = 2; k <= bound; ++k) {
        if (q_number(k).specialize(q0) == 0)
            throw GenericityError("q0 is a root of a q-number up to the guard bound");
    }
}

}  // namespace qma
