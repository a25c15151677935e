#pragma once

#include <optional>
#include <vector>

#include "qma/scalar.hpp"

namespace qma {

/// Number of basis vectors of V^(tensor p), dim V = N.
long tensor_size(int dim, int sites);

/// Big-endian multi-index: (i1,...,ip) -> i1*N^(p-1) + ... + ip, 0-based.
long encode_index(int dim, const std::vector<int>& digits);
std::vector<int> decode_index(int dim, int sites, long index);

/// A linear operator on V^(tensor p) as a dense N^p x N^p matrix over Q(q).
/// Row = output index, column = input index, both big-endian encoded.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(int dim, int sites);
    static TensorOperator identity(int dim, int sites);
    static TensorOperator flip(int dim);  // the usual P on V ⊗ V

    int dim() const { return dim_; }
    int sites() const { return sites_; }
    long size() const { return size_; }

    const Scalar& at(long r, long c) const { return entries_[static_cast<size_t>(r * size_ + c)]; }
    Scalar& at(long r, long c) { return entries_[static_cast<size_t>(r * size_ + c)]; }

    TensorOperator operator+(const TensorOperator& o) const;
    TensorOperator operator-(const TensorOperator& o) const;
    TensorOperator operator*(const TensorOperator& o) const;
    TensorOperator scaled(const Scalar& c) const;
    bool operator==(const TensorOperator& o) const;

    bool is_zero() const;
    Scalar trace() const;
    TensorOperator tensor(const TensorOperator& o) const;  // Kronecker product

    /// Entry-wise specialization at q = q0 (for the numeric screening mode).
    TensorOperator specialized(const Rational& q0) const;

private:
    int dim_ = 0;
    int sites_ = 0;
    long size_ = 0;
    std::vector<Scalar> entries_;
};

/// Embed a two-site operator at positions (k, k+1) of V^(tensor p), 1-based.
TensorOperator place(const TensorOperator& op2, int k, int p);

/// Trace out the given sites (1-based, distinct). With a weight W (an N x N
/// operator) each traced site is contracted against W, which realizes the
/// R-trace when W is the C matrix of a skew-invertible braiding. Tracing all
/// sites yields a sites = 0 operator holding a single scalar.
TensorOperator partial_trace(const TensorOperator& op, const std::vector<int>& sites,
                             const std::optional<TensorOperator>& weight = std::nullopt);

/// Tensor with lower indices (u in the rank-one factorization).
struct CovariantTensor {
    int dim = 0;
    int rank = 0;
    std::vector<Scalar> entries;  // length N^rank, big-endian
};

/// Tensor with upper indices (v in the rank-one factorization).
struct ContravariantTensor {
    int dim = 0;
    int rank = 0;
    std::vector<Scalar> entries;
};

}  // namespace qma
