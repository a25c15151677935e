#pragma once

#include <gmpxx.h>

#include <compare>
#include <vector>

namespace qma {

using Int = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Z. Coefficients are stored ascending by
/// degree with no trailing zeros; the zero polynomial has an empty vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(Int c);
    explicit IntPoly(long c) : IntPoly(Int(c)) {}
    static IntPoly monomial(Int c, int degree);
    static IntPoly variable() { return monomial(Int(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Int& leading() const;
    Int coeff(int k) const;
    int valuation() const;  // lowest nonzero degree; -1 for zero

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly mul_int(const Int& c) const;

    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    std::strong_ordering operator<=>(const IntPoly& o) const;

    Int content() const;          // gcd of coefficients, >= 0 (0 only for zero)
    IntPoly primitive_part() const;
    IntPoly shifted_down(int k) const;  // divide by q^k; requires valuation >= k

    /// Exact division; the caller guarantees divisibility.
    IntPoly div_exact(const IntPoly& d) const;

    Rational eval(const Rational& x) const;

    const std::vector<Int>& coeffs() const { return coeffs_; }

private:
    void trim();
    std::vector<Int> coeffs_;

    friend IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
};

/// gcd over Z[q]: gcd of contents times primitive-part gcd computed by a
/// fraction-free (primitive pseudo-remainder) sequence. Result has a
/// positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// Square root in Z[q] if one exists.
bool poly_sqrt(const IntPoly& f, IntPoly& root);

}  // namespace qma
