#include "qma/symmetrizer.hpp"

#include <sstream>

#include "qma/elim.hpp"
#include "qma/errors.hpp"

namespace qma {

namespace {

Scalar recursion_scalar(long k, bool hecke, const std::optional<Rational>& q0) {
    Scalar v = hecke ? q_number(k) : Scalar(k);
    if (q0) {
        Rational r = v.specialize(*q0);
        if (r == 0) throw GenericityError("vanishing q-number at the requested q0");
        return Scalar(r);
    }
    return v;
}

Scalar recursion_power(long e, bool hecke, const std::optional<Rational>& q0) {
    Scalar v = hecke ? Scalar::q_pow(e) : Scalar(1);
    if (q0) return Scalar(v.specialize(*q0));
    return v;
}

}  // namespace

ProjectorTower build_tower(const TensorOperator& r, TowerKind kind, int k_max,
                           const std::optional<Rational>& q0) {
    if (r.sites() != 2) throw DomainError("tower construction expects a two-site symmetry");
    if (k_max < 1) throw DomainError("k_max must be at least 1");

    SymmetryProfile profile = classify(r, false);
    if (profile.kind != SymmetryKind::Involutive && profile.kind != SymmetryKind::Hecke)
        throw DomainError("tower construction needs an involutive or Hecke symmetry");
    bool hecke = profile.kind == SymmetryKind::Hecke;

    ProjectorTower tower;
    tower.r = r;
    tower.kind = kind;
    tower.hecke = hecke;
    tower.levels.push_back(TensorOperator::identity(r.dim(), 1));
    for (int k = 2; k <= k_max; ++k) {
        const TensorOperator& prev = tower.levels.back();
        TensorOperator lifted = prev.tensor(TensorOperator::identity(r.dim(), 1));
        TensorOperator rk = place(r, k - 1, k);
        Scalar kq = recursion_scalar(k, hecke, q0);
        Scalar k1q = recursion_scalar(k - 1, hecke, q0);
        TensorOperator middle;
        if (kind == TowerKind::Symmetric) {
            Scalar qp = recursion_power(-(k - 1), hecke, q0);
            middle = TensorOperator::identity(r.dim(), k).scaled(qp) + rk.scaled(k1q);
        } else {
            Scalar qp = recursion_power(k - 1, hecke, q0);
            middle = TensorOperator::identity(r.dim(), k).scaled(qp) - rk.scaled(k1q);
        }
        TensorOperator level = (lifted * middle * lifted).scaled(kq.inverse());
        if (!(level * level == level))
            throw DomainError("projector recursion produced a non-idempotent level");
        tower.levels.push_back(std::move(level));
    }
    return tower;
}

std::vector<int> poincare_dims(const ProjectorTower& tower) {
    std::vector<int> dims;
    dims.reserve(tower.levels.size());
    for (const TensorOperator& level : tower.levels) dims.push_back(rank_kernel(level).rank);
    return dims;
}

EvennessCertificate detect_even(const ProjectorTower& skew_tower) {
    if (skew_tower.kind != TowerKind::Skew)
        throw DomainError("evenness detection needs the skew tower");
    std::vector<int> dims = poincare_dims(skew_tower);
    for (size_t i = 0; i + 1 < dims.size(); ++i) {
        if (dims[i] != 1 || dims[i + 1] != 0) continue;
        int m = static_cast<int>(i) + 1;
        const TensorOperator& a = skew_tower.level(m);
        long size = a.size();

        // First nonzero row, first nonzero entry inside it.
        long i0 = -1, j0 = -1;
        for (long r = 0; r < size && i0 < 0; ++r)
            for (long c = 0; c < size; ++c)
                if (!a.at(r, c).is_zero()) {
                    i0 = r;
                    j0 = c;
                    break;
                }
        if (i0 < 0) throw NotEvenError("rank-one level is identically zero");

        ContravariantTensor v;
        v.dim = a.dim();
        v.rank = m;
        v.entries.resize(static_cast<size_t>(size));
        Scalar norm = a.at(i0, j0).inverse();
        for (long c = 0; c < size; ++c) v.entries[static_cast<size_t>(c)] = a.at(i0, c) * norm;

        CovariantTensor u;
        u.dim = a.dim();
        u.rank = m;
        u.entries.resize(static_cast<size_t>(size));
        for (long r = 0; r < size; ++r) u.entries[static_cast<size_t>(r)] = a.at(r, j0);

        Scalar pairing;
        for (long t = 0; t < size; ++t)
            pairing += v.entries[static_cast<size_t>(t)] * u.entries[static_cast<size_t>(t)];
        if (pairing.is_zero()) throw NotEvenError("degenerate pairing in the rank-one factorization");
        Scalar rescale = pairing.inverse();
        for (auto& e : u.entries) e *= rescale;

        // The outer factorization must reproduce the projector entrywise.
        for (long r = 0; r < size; ++r)
            for (long c = 0; c < size; ++c)
                if (!(a.at(r, c) == u.entries[static_cast<size_t>(r)] * v.entries[static_cast<size_t>(c)]))
                    throw NotEvenError("outer factorization mismatch on a rank-one level");

        EvennessCertificate cert;
        cert.m = m;
        cert.u = std::move(u);
        cert.v = std::move(v);
        cert.pairing = Scalar(1);
        return cert;
    }
    std::ostringstream msg;
    msg << "no rank profile [..,1,0] within k_max; ranks:";
    for (int d : dims) msg << ' ' << d;
    throw NotEvenError(msg.str());
}

Scalar pairing_vfu(const ContravariantTensor& v, const CovariantTensor& u,
                   const TensorOperator& c_f) {
    if (v.rank != u.rank || v.dim != u.dim) throw DomainError("tensor rank mismatch in pairing");
    if (c_f.sites() != 1 || c_f.dim() != v.dim) throw DomainError("C must be an N x N operator");
    int n = v.dim;
    int m = v.rank;
    long size = tensor_size(n, m);
    Scalar acc;
    for (long iu = 0; iu < size; ++iu) {
        if (u.entries[static_cast<size_t>(iu)].is_zero()) continue;
        std::vector<int> idx_u = decode_index(n, m, iu);
        for (long jv = 0; jv < size; ++jv) {
            if (v.entries[static_cast<size_t>(jv)].is_zero()) continue;
            std::vector<int> idx_v = decode_index(n, m, jv);
            Scalar prod(1);
            bool zero = false;
            for (int t = 0; t < m; ++t) {
                const Scalar& c = c_f.at(idx_u[static_cast<size_t>(t)], idx_v[static_cast<size_t>(t)]);
                if (c.is_zero()) {
                    zero = true;
                    break;
                }
                prod *= c;
            }
            if (zero) continue;
            acc += u.entries[static_cast<size_t>(iu)] * prod * v.entries[static_cast<size_t>(jv)];
        }
    }
    return acc;
}

}  // namespace qma
