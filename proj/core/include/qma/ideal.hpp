#pragma once

#include <mutex>

#include "qma/presentation.hpp"

namespace qma {

struct ReduceResult {
    bool zero = false;
    NCPolynomial residual;  // normal form against the slice basis
};

struct CentralityResult {
    bool central = false;
    int witness_generator = -1;  // first failing generator, -1 when central
    NCPolynomial residual;
};

/// Degree-graded membership oracle for the two-sided ideal of a
/// presentation. For homogeneous quadratic relation sets the degree-d slice
/// is the echelon span of {w1 * rel * w2 : |w1| + 2 + |w2| = d}, built by
/// the recursion I_d = A1 * I_{d-1} + I_{d-1} * A1 on echelon bases. For
/// mixed-degree relation sets (mode algebras with L[0] = I, adjoined
/// inverses) the oracle works in the filtered space of all words of length
/// <= D; membership proofs there are exact, non-membership is reported
/// relative to the degree cap. Slices are memoized behind a mutex.
class IdealOracle {
public:
    explicit IdealOracle(Presentation pres) : pres_(std::move(pres)) {}

    const Presentation& pres() const { return pres_; }

    /// Graded slice basis (homogeneous presentations, d >= 2).
    const EchelonBasis& slice(int d) const;
    int slice_rank(int d) const;

    /// Membership of every homogeneous part (graded) or of the whole
    /// polynomial in the filtered space (mixed-degree presentations).
    /// max_degree overrides the filtered-space cap policy when positive.
    ReduceResult reduce(const NCPolynomial& x, int max_degree = -1) const;
    bool reduces_to_zero(const NCPolynomial& x, int max_degree = -1) const;
    bool equal_mod(const NCPolynomial& x, const NCPolynomial& y, int max_degree = -1) const;

    /// x central iff [x, g] reduces to zero for every generator g.
    CentralityResult centrality(const NCPolynomial& x, int max_degree = -1) const;

    /// Coordinates of a homogeneous degree-d polynomial (exposed for span
    /// comparisons and tests).
    SparseVec graded_coords(const NCPolynomial& x, int d) const;

private:
    const EchelonBasis& filtered(int dmax) const;
    SparseVec filtered_coords(const NCPolynomial& x, int dmax) const;
    NCPolynomial from_filtered(const SparseVec& v, int dmax) const;
    NCPolynomial from_graded(const SparseVec& v, int d) const;

    Presentation pres_;
    mutable std::mutex mu_;
    mutable std::map<int, EchelonBasis> slices_;
    mutable std::map<int, EchelonBasis> filtered_;
};

}  // namespace qma
