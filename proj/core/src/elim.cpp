#include "qma/elim.hpp"

#include <algorithm>

#include "qma/errors.hpp"

namespace qma {

void SparseVec::set(std::uint64_t col, Scalar v) {
    if (v.is_zero()) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), col,
                               [](const auto& t, std::uint64_t c) { return t.first < c; });
    if (it != terms.end() && it->first == col)
        it->second = std::move(v);
    else
        terms.insert(it, {col, std::move(v)});
}

void SparseVec::axpy(const Scalar& c, const SparseVec& o) {
    if (c.is_zero() || o.terms.empty()) return;
    std::vector<std::pair<std::uint64_t, Scalar>> merged;
    merged.reserve(terms.size() + o.terms.size());
    size_t i = 0, j = 0;
    while (i < terms.size() || j < o.terms.size()) {
        if (j == o.terms.size() || (i < terms.size() && terms[i].first < o.terms[j].first)) {
            merged.push_back(std::move(terms[i++]));
        } else if (i == terms.size() || o.terms[j].first < terms[i].first) {
            merged.emplace_back(o.terms[j].first, c * o.terms[j].second);
            ++j;
        } else {
            Scalar v = terms[i].second + c * o.terms[j].second;
            if (!v.is_zero()) merged.emplace_back(terms[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    terms = std::move(merged);
}

void SparseVec::scale(const Scalar& c) {
    if (c.is_zero()) {
        terms.clear();
        return;
    }
    for (auto& t : terms) t.second *= c;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
    size_t pos = 0;
    while (pos < v.terms.size()) {
        auto it = rows_.find(v.terms[pos].first);
        if (it == rows_.end()) {
            ++pos;
            continue;
        }
        // The pivot row is monic and has no columns below its lead, so the
        // prefix of v before pos is untouched by this step.
        Scalar c = -v.terms[pos].second;
        v.axpy(c, it->second);
    }
    return v;
}

bool EchelonBasis::insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v.scale(v.lead_value().inverse());
    std::uint64_t lead = v.lead();
    rows_.emplace(lead, std::move(v));
    return true;
}

void EchelonBasis::canonicalize() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        SparseVec& row = it->second;
        size_t pos = 1;  // keep the pivot term
        while (pos < row.terms.size()) {
            auto other = rows_.find(row.terms[pos].first);
            if (other == rows_.end() || other->first == it->first) {
                ++pos;
                continue;
            }
            Scalar c = -row.terms[pos].second;
            row.axpy(c, other->second);
        }
    }
}

bool EchelonBasis::same_span(const EchelonBasis& o) const {
    EchelonBasis a(*this), b(o);
    a.canonicalize();
    b.canonicalize();
    return a.rows_ == b.rows_;
}

RankKernel rank_kernel(const TensorOperator& op) {
    long n = op.size();
    EchelonBasis basis;
    for (long i = 0; i < n; ++i) {
        SparseVec row;
        for (long j = 0; j < n; ++j) {
            const Scalar& v = op.at(j, i);  // column i of the operator
            if (!v.is_zero()) row.terms.emplace_back(static_cast<std::uint64_t>(j), v);
        }
        row.terms.emplace_back(static_cast<std::uint64_t>(n + i), Scalar(1));
        basis.insert(std::move(row));
    }
    basis.canonicalize();

    RankKernel rk;
    for (const auto& [lead, row] : basis.rows()) {
        if (lead < static_cast<std::uint64_t>(n)) {
            SparseVec img;
            for (const auto& [col, val] : row.terms)
                if (col < static_cast<std::uint64_t>(n)) img.terms.emplace_back(col, val);
            rk.image_basis.push_back(std::move(img));
            ++rk.rank;
        } else {
            SparseVec ker;
            for (const auto& [col, val] : row.terms)
                ker.terms.emplace_back(col - static_cast<std::uint64_t>(n), val);
            rk.kernel_basis.push_back(std::move(ker));
        }
    }
    return rk;
}

TensorOperator inverse(const TensorOperator& op) {
    long n = op.size();
    EchelonBasis basis;
    for (long i = 0; i < n; ++i) {
        SparseVec row;
        for (long j = 0; j < n; ++j) {
            const Scalar& v = op.at(i, j);
            if (!v.is_zero()) row.terms.emplace_back(static_cast<std::uint64_t>(j), v);
        }
        row.terms.emplace_back(static_cast<std::uint64_t>(n + i), Scalar(1));
        basis.insert(std::move(row));
    }
    long pivots = 0;
    for (const auto& [lead, row] : basis.rows())
        if (lead < static_cast<std::uint64_t>(n)) ++pivots;
    if (pivots != n) throw ArithmeticError("operator is singular over Q(q)");
    basis.canonicalize();

    TensorOperator inv(op.dim(), op.sites());
    for (const auto& [lead, row] : basis.rows()) {
        for (const auto& [col, val] : row.terms)
            if (col >= static_cast<std::uint64_t>(n))
                inv.at(static_cast<long>(lead), static_cast<long>(col) - n) = val;
    }
    return inv;
}

bool solve_unique(const std::vector<SparseVec>& rows, const std::vector<Scalar>& rhs,
                  std::vector<Scalar>& solution, std::uint64_t ncols) {
    EchelonBasis basis;
    for (size_t i = 0; i < rows.size(); ++i) {
        SparseVec row = rows[i];
        if (i < rhs.size() && !rhs[i].is_zero()) row.set(ncols, rhs[i]);
        basis.insert(std::move(row));
    }
    // Unique solvability: every unknown column is a pivot and the augmented
    // column is not.
    if (basis.rows().count(ncols) > 0) return false;
    if (basis.rank() != static_cast<int>(ncols)) return false;
    basis.canonicalize();
    // A reduced row (e_i | beta_i) encodes the equation x_i = beta_i.
    solution.assign(ncols, Scalar());
    for (const auto& [lead, row] : basis.rows()) {
        for (const auto& [col, val] : row.terms)
            if (col == ncols) solution[static_cast<size_t>(lead)] = val;
    }
    return true;
}

}  // namespace qma
