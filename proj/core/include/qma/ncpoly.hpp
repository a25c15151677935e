#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qma/tensor.hpp"

namespace qma {

using GenIdx = std::uint16_t;
using Word = std::vector<GenIdx>;  // a monomial in the free algebra

/// Degree-lex order on words: shorter first, then lexicographic.
struct WordOrder {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Finite Q(q)-linear combination of words over a generator alphabet.
/// Zero coefficients are never stored.
class NCPolynomial {
public:
    NCPolynomial() = default;
    static NCPolynomial constant(Scalar c);
    static NCPolynomial generator(GenIdx g);
    static NCPolynomial monomial(Word w, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    /// Maximal word length; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    NCPolynomial operator-() const;
    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator*(const NCPolynomial& o) const;
    NCPolynomial scaled(const Scalar& c) const;
    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    bool operator==(const NCPolynomial& o) const { return terms_ == o.terms_; }

    NCPolynomial commutator(const NCPolynomial& o) const { return *this * o - o * *this; }
    NCPolynomial homogeneous_part(int d) const;
    std::vector<int> degrees() const;  // sorted distinct word lengths present

    /// Algebra morphism determined by generator images.
    NCPolynomial substituted(const std::vector<NCPolynomial>& images) const;

    const std::map<Word, Scalar, WordOrder>& terms() const { return terms_; }
    void add_term(const Word& w, const Scalar& c);

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<Word, Scalar, WordOrder> terms_;
};

/// Parse an NC expression over named generators; scalar subexpressions use
/// the scalar grammar. Example: "a*b - q*b*a + (q - 1/q)*c^2".
NCPolynomial parse_ncpoly(const std::string& text, const std::vector<std::string>& names);

/// Matrix with NCPolynomial entries (entry products keep operator order).
class NCMatrix {
public:
    NCMatrix() = default;
    NCMatrix(long rows, long cols);
    static NCMatrix promoted(const TensorOperator& op);
    static NCMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const NCPolynomial& at(long r, long c) const { return data_[static_cast<size_t>(r * cols_ + c)]; }
    NCPolynomial& at(long r, long c) { return data_[static_cast<size_t>(r * cols_ + c)]; }

    NCMatrix operator+(const NCMatrix& o) const;
    NCMatrix operator-(const NCMatrix& o) const;
    NCMatrix operator*(const NCMatrix& o) const;
    NCMatrix scaled(const Scalar& c) const;
    NCMatrix scaled_nc(const NCPolynomial& c, bool left) const;
    bool operator==(const NCMatrix& o) const;

    /// Kronecker product with the identity of the given size on the right
    /// or left (used to lift generating matrices onto V^(tensor p)).
    NCMatrix tensor_identity_right(long size) const;
    NCMatrix tensor_identity_left(long size) const;

    NCPolynomial trace() const;

private:
    long rows_ = 0, cols_ = 0;
    std::vector<NCPolynomial> data_;
};

/// Full weighted trace Tr(W M) for a matrix on k sites, W a one-site weight
/// applied on every site (W = C gives Tr_{C(1..k)}).
NCPolynomial nc_weighted_trace(const NCMatrix& m, const TensorOperator& weight, int sites);

/// Weighted partial trace over selected sites of an N^p x N^p NC matrix.
NCMatrix nc_partial_trace(const NCMatrix& m, int dim, int sites, const std::vector<int>& traced,
                          const std::optional<TensorOperator>& weight = std::nullopt);

}  // namespace qma
