#include "qma/tensor.hpp"

#include <algorithm>

#include "qma/errors.hpp"

namespace qma {

long tensor_size(int dim, int sites) {
    long s = 1;
    for (int i = 0; i < sites; ++i) s *= dim;
    return s;
}

long encode_index(int dim, const std::vector<int>& digits) {
    long idx = 0;
    for (int d : digits) idx = idx * dim + d;
    return idx;
}

std::vector<int> decode_index(int dim, int sites, long index) {
    std::vector<int> digits(static_cast<size_t>(sites), 0);
    for (int i = sites - 1; i >= 0; --i) {
        digits[static_cast<size_t>(i)] = static_cast<int>(index % dim);
        index /= dim;
    }
    return digits;
}

TensorOperator::TensorOperator(int dim, int sites)
    : dim_(dim), sites_(sites), size_(tensor_size(dim, sites)) {
    if (dim < 1 || sites < 0) throw DomainError("bad tensor operator shape");
    entries_.assign(static_cast<size_t>(size_ * size_), Scalar());
}

TensorOperator TensorOperator::identity(int dim, int sites) {
    TensorOperator t(dim, sites);
    for (long i = 0; i < t.size_; ++i) t.at(i, i) = Scalar(1);
    return t;
}

TensorOperator TensorOperator::flip(int dim) {
    TensorOperator t(dim, 2);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            t.at(j * dim + i, i * dim + j) = Scalar(1);
    return t;
}

TensorOperator TensorOperator::operator+(const TensorOperator& o) const {
    if (size_ != o.size_) throw DomainError("tensor operator shape mismatch");
    TensorOperator r(*this);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
    return r;
}

TensorOperator TensorOperator::operator-(const TensorOperator& o) const {
    if (size_ != o.size_) throw DomainError("tensor operator shape mismatch");
    TensorOperator r(*this);
    for (size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
    return r;
}

TensorOperator TensorOperator::operator*(const TensorOperator& o) const {
    if (size_ != o.size_) throw DomainError("tensor operator shape mismatch");
    TensorOperator r(dim_, sites_);
    for (long i = 0; i < size_; ++i) {
        for (long k = 0; k < size_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (long j = 0; j < size_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    }
    return r;
}

TensorOperator TensorOperator::scaled(const Scalar& c) const {
    TensorOperator r(*this);
    for (auto& e : r.entries_) e *= c;
    return r;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
    return dim_ == o.dim_ && sites_ == o.sites_ && entries_ == o.entries_;
}

bool TensorOperator::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar TensorOperator::trace() const {
    Scalar t;
    for (long i = 0; i < size_; ++i) t += at(i, i);
    return t;
}

TensorOperator TensorOperator::tensor(const TensorOperator& o) const {
    if (dim_ != o.dim_) throw DomainError("tensor factors must share the base dimension");
    TensorOperator r(dim_, sites_ + o.sites_);
    for (long i = 0; i < size_; ++i)
        for (long j = 0; j < size_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (long k = 0; k < o.size_; ++k)
                for (long l = 0; l < o.size_; ++l) {
                    const Scalar& b = o.at(k, l);
                    if (b.is_zero()) continue;
                    r.at(i * o.size_ + k, j * o.size_ + l) = a * b;
                }
        }
    return r;
}

TensorOperator TensorOperator::specialized(const Rational& q0) const {
    TensorOperator r(dim_, sites_);
    for (long i = 0; i < size_; ++i)
        for (long j = 0; j < size_; ++j)
            if (!at(i, j).is_zero()) r.at(i, j) = Scalar(at(i, j).specialize(q0));
    return r;
}

TensorOperator place(const TensorOperator& op2, int k, int p) {
    if (op2.sites() != 2) throw PlacementError("place expects a two-site operator");
    if (k < 1 || k > p - 1) throw PlacementError("placement position out of range");
    int n = op2.dim();
    long left = tensor_size(n, k - 1);
    long right = tensor_size(n, p - k - 1);
    long mid = static_cast<long>(n) * n;
    TensorOperator r(n, p);
    for (long a = 0; a < left; ++a)
        for (long m1 = 0; m1 < mid; ++m1)
            for (long m2 = 0; m2 < mid; ++m2) {
                const Scalar& v = op2.at(m1, m2);
                if (v.is_zero()) continue;
                for (long b = 0; b < right; ++b) {
                    long row = (a * mid + m1) * right + b;
                    long col = (a * mid + m2) * right + b;
                    r.at(row, col) = v;
                }
            }
    return r;
}

TensorOperator partial_trace(const TensorOperator& op, const std::vector<int>& sites,
                             const std::optional<TensorOperator>& weight) {
    int p = op.sites();
    int n = op.dim();
    std::vector<bool> traced(static_cast<size_t>(p), false);
    for (int s : sites) {
        if (s < 1 || s > p) throw DomainError("trace site out of range");
        if (traced[static_cast<size_t>(s - 1)]) throw DomainError("duplicate trace site");
        traced[static_cast<size_t>(s - 1)] = true;
    }
    if (sites.empty()) throw DomainError("empty trace site set");
    if (weight && (weight->dim() != n || weight->sites() != 1))
        throw DomainError("trace weight must be an N x N one-site operator");

    int q = p - static_cast<int>(sites.size());
    TensorOperator r(n, q);
    for (long row = 0; row < op.size(); ++row) {
        std::vector<int> rd = decode_index(n, p, row);
        for (long col = 0; col < op.size(); ++col) {
            const Scalar& v = op.at(row, col);
            if (v.is_zero()) continue;
            std::vector<int> cd = decode_index(n, p, col);
            std::vector<int> kept_r, kept_c;
            Scalar factor(1);
            bool zero = false;
            for (int s = 0; s < p; ++s) {
                if (!traced[static_cast<size_t>(s)]) {
                    kept_r.push_back(rd[static_cast<size_t>(s)]);
                    kept_c.push_back(cd[static_cast<size_t>(s)]);
                    continue;
                }
                if (weight) {
                    // Tr_(s)(W_s X): the weight links the column digit back
                    // to the row digit.
                    const Scalar& w = weight->at(cd[static_cast<size_t>(s)], rd[static_cast<size_t>(s)]);
                    if (w.is_zero()) {
                        zero = true;
                        break;
                    }
                    factor *= w;
                } else if (rd[static_cast<size_t>(s)] != cd[static_cast<size_t>(s)]) {
                    zero = true;
                    break;
                }
            }
            if (zero) continue;
            r.at(encode_index(n, kept_r), encode_index(n, kept_c)) += v * factor;
        }
    }
    return r;
}

}  // namespace qma
