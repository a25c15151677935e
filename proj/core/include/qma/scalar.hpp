#pragma once

#include <compare>
#include <string>

#include "qma/intpoly.hpp"

namespace qma {

/// An element of Q(q) in canonical form: q^shift * num/den where num and den
/// are coprime integer polynomials, neither divisible by q, the denominator
/// has a positive leading coefficient, and the integer contents of num and
/// den are coprime. Equality of canonical forms decides equality in Q(q).
class Scalar {
public:
    Scalar() : den_(Int(1)) {}
    Scalar(long v) : num_(Int(v)), den_(Int(1)) {}
    explicit Scalar(Int v) : num_(std::move(v)), den_(Int(1)) {}
    explicit Scalar(const Rational& v);
    Scalar(IntPoly num, IntPoly den, long shift);

    static Scalar q() { return Scalar(IntPoly::variable(), IntPoly(Int(1)), 0); }
    static Scalar q_pow(long e);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
    /// True when the value lies in Q (no q dependence).
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() <= 0 && shift_ == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Scalar& o) const;

    /// Exact evaluation at q = q0. Throws GenericityError for q0 in {0, 1, -1}
    /// and ArithmeticError on a pole.
    Rational specialize(const Rational& q0) const;

    /// Square root in Q(q) when one exists.
    bool try_sqrt(Scalar& root) const;

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    long shift() const { return shift_; }

private:
    void reduce();
    IntPoly num_;
    IntPoly den_;
    long shift_ = 0;
};

/// k_q = (q^k - q^-k)/(q - q^-1); defined for every integer k.
Scalar q_number(long k);

/// k_q! = 1_q * 2_q * ... * k_q; throws DomainError for negative k.
Scalar q_factorial(long k);

/// Guard used before numeric specialization: rejects q0 in {0, 1, -1} and any
/// q0 with k_q(q0) = 0 for 1 <= k <= bound.
void check_generic(const Rational& q0, long bound);

}  // namespace qma
