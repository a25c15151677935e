#include "qma/presentation.hpp"

#include "qma/braiding.hpp"
#include "qma/elim.hpp"
#include "qma/errors.hpp"
#include "qma/symmetrizer.hpp"

namespace qma {

std::vector<std::string> generator_names(int dim) {
    if (dim == 2) return {"a", "b", "c", "d"};
    std::vector<std::string> names;
    for (int i = 1; i <= dim; ++i)
        for (int j = 1; j <= dim; ++j)
            names.push_back("l" + std::to_string(i) + std::to_string(j));
    return names;
}

NCMatrix generator_matrix(int dim, const std::vector<std::string>& names) {
    if (names.size() != static_cast<size_t>(dim) * dim)
        throw DomainError("alphabet size must be N^2");
    NCMatrix l(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            l.at(i, j) = NCPolynomial::generator(static_cast<GenIdx>(i * dim + j));
    return l;
}

std::vector<NCMatrix> f_copies(const NCMatrix& l, const TensorOperator& f, int p) {
    if (f.sites() != 2) throw DomainError("F must be a two-site operator");
    if (l.rows() != f.dim()) throw DomainError("generator matrix does not match F");
    TensorOperator finv = inverse(f);  // throws on singular F
    long rest = tensor_size(f.dim(), p - 1);
    std::vector<NCMatrix> copies;
    copies.push_back(l.tensor_identity_right(rest));
    for (int k = 1; k < p; ++k) {
        NCMatrix fk = NCMatrix::promoted(place(f, k, p));
        NCMatrix fkinv = NCMatrix::promoted(place(finv, k, p));
        copies.push_back(fk * copies.back() * fkinv);
    }
    return copies;
}

namespace {

// Degree-2 coordinates: word (g1, g2) -> g1 * G + g2.
SparseVec quadratic_coords(const NCPolynomial& p, size_t alphabet) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != 2) throw DomainError("expected a homogeneous quadratic relation");
        v.set(static_cast<std::uint64_t>(w[0]) * alphabet + w[1], c);
    }
    return v;
}

NCPolynomial quadratic_from_coords(const SparseVec& v, size_t alphabet) {
    NCPolynomial p;
    for (const auto& [col, c] : v.terms) {
        Word w{static_cast<GenIdx>(col / alphabet), static_cast<GenIdx>(col % alphabet)};
        p.add_term(w, c);
    }
    return p;
}

std::vector<NCPolynomial> dedupe_quadratics(const std::vector<NCPolynomial>& raw, size_t alphabet) {
    EchelonBasis basis;
    for (const NCPolynomial& rel : raw)
        if (!rel.is_zero()) basis.insert(quadratic_coords(rel, alphabet));
    basis.canonicalize();
    std::vector<NCPolynomial> out;
    for (const auto& [lead, row] : basis.rows()) out.push_back(quadratic_from_coords(row, alphabet));
    return out;
}

}  // namespace

EchelonBasis degree2_span(const std::vector<NCPolynomial>& relations, size_t alphabet) {
    EchelonBasis basis;
    for (const NCPolynomial& rel : relations)
        if (!rel.is_zero()) basis.insert(quadratic_coords(rel, alphabet));
    basis.canonicalize();
    return basis;
}

Presentation present(const TensorOperator& r, const TensorOperator& f, SystemKind system) {
    if (!check_braid(r) || !check_braid(f) || !check_compatible(r, f))
        throw DomainError("(R, F) is not a compatible couple of braidings");

    int n = r.dim();
    std::vector<std::string> names = generator_names(n);
    NCMatrix l = generator_matrix(n, names);
    std::vector<NCMatrix> copies = f_copies(l, f, 2);
    const NCMatrix& l1 = copies[0];
    const NCMatrix& l2 = copies[1];

    NCMatrix rel_matrix;
    std::string source;
    if (system == SystemKind::QMA) {
        NCMatrix rm = NCMatrix::promoted(r);
        rel_matrix = rm * l1 * l2 - l1 * l2 * rm;
        source = "QMA";
    } else if (system == SystemKind::HQA || system == SystemKind::HQA2) {
        ProjectorTower sym = build_tower(r, TowerKind::Symmetric, 2);
        ProjectorTower skew = build_tower(r, TowerKind::Skew, 2);
        NCMatrix s2 = NCMatrix::promoted(sym.level(2));
        NCMatrix a2 = NCMatrix::promoted(skew.level(2));
        rel_matrix = system == SystemKind::HQA ? s2 * (l1 * l2) * a2 : a2 * (l1 * l2) * s2;
        source = system == SystemKind::HQA ? "HQA" : "HQA2";
    } else {
        throw DomainError("present() builds QMA and HQA systems only");
    }

    std::vector<NCPolynomial> raw;
    for (long i = 0; i < rel_matrix.rows(); ++i)
        for (long j = 0; j < rel_matrix.cols(); ++j)
            if (!rel_matrix.at(i, j).is_zero()) raw.push_back(rel_matrix.at(i, j));

    Presentation pres;
    pres.names = std::move(names);
    pres.relations = dedupe_quadratics(raw, pres.names.size());
    pres.kind = system;
    pres.f_is_flip = f == TensorOperator::flip(n);
    pres.source = source + (pres.f_is_flip ? "(R,P)" : "(R,F)");
    pres.homogeneous = true;
    return pres;
}

Presentation tensor_square(const Presentation& pres) {
    if (pres.kind != SystemKind::QMA || !pres.f_is_flip)
        throw UnsupportedError("tensor square is defined for RTT presentations only");
    size_t g = pres.alphabet_size();

    Presentation out;
    out.names.reserve(2 * g);
    for (const std::string& n : pres.names) out.names.push_back(n + "_1");
    for (const std::string& n : pres.names) out.names.push_back(n + "_2");

    std::vector<NCPolynomial> raw;
    auto shifted = [&](const NCPolynomial& p, GenIdx offset) {
        NCPolynomial r;
        for (const auto& [w, c] : p.terms()) {
            Word sw;
            for (GenIdx x : w) sw.push_back(static_cast<GenIdx>(x + offset));
            r.add_term(sw, c);
        }
        return r;
    };
    for (const NCPolynomial& rel : pres.relations) {
        raw.push_back(shifted(rel, 0));
        raw.push_back(shifted(rel, static_cast<GenIdx>(g)));
    }
    for (size_t x = 0; x < g; ++x)
        for (size_t y = 0; y < g; ++y) {
            Word xy{static_cast<GenIdx>(x), static_cast<GenIdx>(g + y)};
            Word yx{static_cast<GenIdx>(g + y), static_cast<GenIdx>(x)};
            NCPolynomial cross = NCPolynomial::monomial(xy, Scalar(1)) - NCPolynomial::monomial(yx, Scalar(1));
            raw.push_back(cross);
        }

    out.relations = dedupe_quadratics(raw, out.names.size());
    out.kind = SystemKind::TensorSquare;
    out.source = "tensor-square of " + pres.source;
    out.f_is_flip = pres.f_is_flip;
    out.homogeneous = true;
    out.degree_cap = pres.degree_cap;
    return out;
}

}  // namespace qma
