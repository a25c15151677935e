#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qma/tensor.hpp"

namespace qma {

/// Sparse vector over Q(q): (column, value) pairs sorted by column, no zeros.
struct SparseVec {
    std::vector<std::pair<std::uint64_t, Scalar>> terms;

    bool is_zero() const { return terms.empty(); }
    std::uint64_t lead() const { return terms.front().first; }
    const Scalar& lead_value() const { return terms.front().second; }

    void set(std::uint64_t col, Scalar v);
    void axpy(const Scalar& c, const SparseVec& o);  // *this += c * o
    void scale(const Scalar& c);
    bool operator==(const SparseVec& o) const { return terms == o.terms; }
};

/// Incremental row echelon basis over Q(q). Rows are monic at their leading
/// (smallest) column; at most one row per leading column. Supports exact
/// reduction, rank queries, and a canonical fully-reduced form for subspace
/// comparison.
class EchelonBasis {
public:
    /// Normal form of v against the current rows.
    SparseVec reduce(SparseVec v) const;

    /// Reduce and absorb; returns true when v added a new pivot.
    bool insert(SparseVec v);

    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    /// Back-substitute so every pivot column appears in exactly one row.
    /// The result is the unique reduced basis of the span.
    void canonicalize();
    bool same_span(const EchelonBasis& o) const;  // canonicalizes both sides' copies

    const std::map<std::uint64_t, SparseVec>& rows() const { return rows_; }

private:
    std::map<std::uint64_t, SparseVec> rows_;  // leading column -> monic row
};

struct RankKernel {
    int rank = 0;
    std::vector<SparseVec> kernel_basis;  // echelonized null-space of the operator
    std::vector<SparseVec> image_basis;   // echelonized basis of the column space
};

/// Exact rank / kernel / image of a tensor operator via fraction-free
/// elimination on its sparse rows.
RankKernel rank_kernel(const TensorOperator& op);

/// Inverse over Q(q); throws ArithmeticError when singular.
TensorOperator inverse(const TensorOperator& op);

/// Solve A x = b requiring a unique solution; returns false when the system
/// is singular or inconsistent. A is given by rows, b as a dense vector.
bool solve_unique(const std::vector<SparseVec>& rows, const std::vector<Scalar>& rhs,
                  std::vector<Scalar>& solution, std::uint64_t ncols);

}  // namespace qma
