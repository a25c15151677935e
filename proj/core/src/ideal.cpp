#include "qma/ideal.hpp"

#include "qma/errors.hpp"

namespace qma {

namespace {

std::uint64_t word_space(size_t alphabet, int d) {
    std::uint64_t s = 1;
    for (int i = 0; i < d; ++i) s *= alphabet;
    return s;
}

// Cumulative offset of the length-len block in the filtered space.
std::uint64_t filtered_offset(size_t alphabet, int len) {
    std::uint64_t off = 0;
    for (int t = 0; t < len; ++t) off += word_space(alphabet, t);
    return off;
}

std::uint64_t encode_word(const Word& w, size_t alphabet) {
    std::uint64_t e = 0;
    for (GenIdx g : w) e = e * alphabet + g;
    return e;
}

Word decode_word(std::uint64_t e, size_t alphabet, int len) {
    Word w(static_cast<size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<GenIdx>(e % alphabet);
        e /= alphabet;
    }
    return w;
}

void split_filtered_col(std::uint64_t col, size_t alphabet, int& len, std::uint64_t& enc) {
    len = 0;
    enc = col;
    while (enc >= word_space(alphabet, len)) {
        enc -= word_space(alphabet, len);
        ++len;
    }
}

}  // namespace

SparseVec IdealOracle::graded_coords(const NCPolynomial& x, int d) const {
    SparseVec v;
    size_t g = pres_.alphabet_size();
    for (const auto& [w, c] : x.terms()) {
        if (static_cast<int>(w.size()) != d)
            throw DomainError("graded coordinates need a homogeneous polynomial");
        v.set(encode_word(w, g), c);
    }
    return v;
}

NCPolynomial IdealOracle::from_graded(const SparseVec& v, int d) const {
    NCPolynomial p;
    size_t g = pres_.alphabet_size();
    for (const auto& [col, c] : v.terms) p.add_term(decode_word(col, g, d), c);
    return p;
}

SparseVec IdealOracle::filtered_coords(const NCPolynomial& x, int dmax) const {
    SparseVec v;
    size_t g = pres_.alphabet_size();
    for (const auto& [w, c] : x.terms()) {
        int len = static_cast<int>(w.size());
        if (len > dmax) throw DomainError("term beyond the filtered degree bound");
        v.set(filtered_offset(g, len) + encode_word(w, g), c);
    }
    return v;
}

NCPolynomial IdealOracle::from_filtered(const SparseVec& v, int dmax) const {
    NCPolynomial p;
    size_t g = pres_.alphabet_size();
    for (const auto& [col, c] : v.terms) {
        int len;
        std::uint64_t enc;
        split_filtered_col(col, g, len, enc);
        p.add_term(decode_word(enc, g, len), c);
    }
    return p;
}

const EchelonBasis& IdealOracle::slice(int d) const {
    if (!pres_.homogeneous)
        throw DomainError("graded slices need homogeneous quadratic relations");
    if (d < 2) throw DomainError("slices start at degree 2");
    if (d > pres_.degree_cap) throw ResourceError("degree cap exceeded at degree " + std::to_string(d));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = slices_.find(d);
        if (it != slices_.end()) return it->second;
    }

    size_t g = pres_.alphabet_size();
    EchelonBasis basis;
    if (d == 2) {
        for (const NCPolynomial& rel : pres_.relations) basis.insert(graded_coords(rel, 2));
    } else {
        // I_d = A_1 I_{d-1} + I_{d-1} A_1 built on the echelon basis of I_{d-1}.
        const EchelonBasis& prev = slice(d - 1);
        std::uint64_t prev_space = word_space(g, d - 1);
        for (const auto& [lead, row] : prev.rows()) {
            for (std::uint64_t gen = 0; gen < g; ++gen) {
                SparseVec pre, post;
                pre.terms.reserve(row.terms.size());
                post.terms.reserve(row.terms.size());
                for (const auto& [col, c] : row.terms) {
                    pre.terms.emplace_back(gen * prev_space + col, c);
                    post.terms.emplace_back(col * g + gen, c);
                }
                basis.insert(std::move(pre));
                basis.insert(std::move(post));
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return slices_.emplace(d, std::move(basis)).first->second;
}

int IdealOracle::slice_rank(int d) const { return slice(d).rank(); }

const EchelonBasis& IdealOracle::filtered(int dmax) const {
    if (dmax < 2) throw DomainError("filtered bases start at degree 2");
    if (dmax > pres_.degree_cap)
        throw ResourceError("degree cap exceeded at degree " + std::to_string(dmax));
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = filtered_.find(dmax);
        if (it != filtered_.end()) return it->second;
    }

    size_t g = pres_.alphabet_size();
    EchelonBasis basis;
    if (dmax == 2) {
        for (const NCPolynomial& rel : pres_.relations) basis.insert(filtered_coords(rel, 2));
    } else {
        const EchelonBasis& prev = filtered(dmax - 1);
        for (const auto& [lead, row] : prev.rows()) {
            basis.insert(row);
            for (std::uint64_t gen = 0; gen < g; ++gen) {
                SparseVec pre, post;
                for (const auto& [col, c] : row.terms) {
                    int len;
                    std::uint64_t enc;
                    split_filtered_col(col, g, len, enc);
                    pre.set(filtered_offset(g, len + 1) + gen * word_space(g, len) + enc, c);
                    post.set(filtered_offset(g, len + 1) + enc * g + gen, c);
                }
                basis.insert(std::move(pre));
                basis.insert(std::move(post));
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return filtered_.emplace(dmax, std::move(basis)).first->second;
}

ReduceResult IdealOracle::reduce(const NCPolynomial& x, int max_degree) const {
    ReduceResult result;
    if (x.is_zero()) {
        result.zero = true;
        return result;
    }
    if (pres_.homogeneous) {
        NCPolynomial residual;
        for (int d : x.degrees()) {
            NCPolynomial part = x.homogeneous_part(d);
            if (d < 2) {
                residual += part;  // the ideal has no components below degree 2
                continue;
            }
            if (d > pres_.degree_cap)
                throw ResourceError("membership query exceeds the degree cap");
            SparseVec v = slice(d).reduce(graded_coords(part, d));
            residual += from_graded(v, d);
        }
        result.zero = residual.is_zero();
        result.residual = std::move(residual);
        return result;
    }
    int deg = x.degree();
    int dmax = max_degree > 0 ? max_degree : std::min(std::max(deg + 2, 4), pres_.degree_cap);
    if (deg > dmax) throw ResourceError("membership query exceeds the degree cap");
    SparseVec v = filtered(dmax).reduce(filtered_coords(x, dmax));
    result.zero = v.is_zero();
    result.residual = from_filtered(v, dmax);
    return result;
}

bool IdealOracle::reduces_to_zero(const NCPolynomial& x, int max_degree) const {
    return reduce(x, max_degree).zero;
}

bool IdealOracle::equal_mod(const NCPolynomial& x, const NCPolynomial& y, int max_degree) const {
    return reduces_to_zero(x - y, max_degree);
}

CentralityResult IdealOracle::centrality(const NCPolynomial& x, int max_degree) const {
    CentralityResult r;
    for (size_t g = 0; g < pres_.alphabet_size(); ++g) {
        NCPolynomial gen = NCPolynomial::generator(static_cast<GenIdx>(g));
        ReduceResult red = reduce(x * gen - gen * x, max_degree);
        if (!red.zero) {
            r.central = false;
            r.witness_generator = static_cast<int>(g);
            r.residual = std::move(red.residual);
            return r;
        }
    }
    r.central = true;
    return r;
}

}  // namespace qma
