#include "qma/braiding.hpp"

#include "qma/elim.hpp"
#include "qma/errors.hpp"

namespace qma {

bool check_braid(const TensorOperator& op) {
    if (op.sites() != 2) throw DomainError("braid check expects a two-site operator");
    TensorOperator r12 = place(op, 1, 3);
    TensorOperator r23 = place(op, 2, 3);
    return r12 * r23 * r12 == r23 * r12 * r23;
}

namespace {

// Find the unique (a, b) with R^2 = a R + b I, if any.
bool fit_quadratic(const TensorOperator& r, Scalar& a, Scalar& b) {
    TensorOperator r2 = r * r;
    std::vector<SparseVec> rows;
    std::vector<Scalar> rhs;
    for (long i = 0; i < r.size(); ++i)
        for (long j = 0; j < r.size(); ++j) {
            SparseVec row;
            if (!r.at(i, j).is_zero()) row.set(0, r.at(i, j));
            if (i == j) row.set(1, Scalar(1));
            if (row.is_zero() && r2.at(i, j).is_zero()) continue;
            rows.push_back(std::move(row));
            rhs.push_back(r2.at(i, j));
        }
    std::vector<Scalar> sol;
    if (!solve_unique(rows, rhs, sol, 2)) return false;
    a = sol[0];
    b = sol[1];
    return true;
}

// Solve x - 1/x = a in Q(q). Roots come in pairs (x, -1/x); pick the one of
// larger magnitude at q = 2, positive on a tie, which reproduces the
// parameter q (not -1/q) on the standard Hecke symmetries.
bool hecke_parameter_from_trace(const Scalar& a, Scalar& out) {
    Scalar disc = a * a + Scalar(4);
    Scalar s;
    if (!disc.try_sqrt(s)) return false;
    Scalar half{Rational(1, 2)};
    Scalar x1 = (a + s) * half;
    Scalar x2 = (a - s) * half;
    Rational v1 = abs(x1.specialize(Rational(2)));
    Rational v2 = abs(x2.specialize(Rational(2)));
    if (v1 > v2)
        out = x1;
    else if (v2 > v1)
        out = x2;
    else
        out = x1.specialize(Rational(2)) > 0 ? x1 : x2;
    return true;
}

bool is_forbidden_parameter(const Scalar& x) {
    return x.is_zero() || x == Scalar(1) || x == Scalar(-1);
}

}  // namespace

SymmetryProfile classify(const TensorOperator& op, bool with_skew_inverse) {
    SymmetryProfile p;
    if (!check_braid(op)) return p;

    TensorOperator id = TensorOperator::identity(op.dim(), 2);
    if (op * op == id) {
        p.kind = SymmetryKind::Involutive;
    } else {
        Scalar a, b, param;
        bool hecke = false;
        if (fit_quadratic(op, a, b)) {
            if (b == Scalar(1) && hecke_parameter_from_trace(a, param) && !is_forbidden_parameter(param))
                hecke = true;
        } else {
            // scalar multiples of the identity satisfy a linear relation
            Scalar c = op.at(0, 0);
            if (op == id.scaled(c) && !is_forbidden_parameter(c)) {
                hecke = true;
                param = c;
            }
        }
        if (hecke) {
            p.kind = SymmetryKind::Hecke;
            p.hecke_parameter = param;
        } else {
            p.kind = SymmetryKind::BraidingOnly;
        }
    }

    if (with_skew_inverse) {
        try {
            TensorOperator psi = solve_skew_inverse(op);
            p.skew_invertible = true;
            p.c_matrix = partial_trace(psi, {2});
            p.psi = std::move(psi);
        } catch (const NotSkewInvertibleError&) {
            p.skew_invertible = false;
        }
    }
    return p;
}

bool check_compatible(const TensorOperator& R, const TensorOperator& F) {
    if (R.dim() != F.dim() || R.sites() != 2 || F.sites() != 2)
        throw DomainError("compatibility check expects two-site operators over the same space");
    TensorOperator r12 = place(R, 1, 3), r23 = place(R, 2, 3);
    TensorOperator f12 = place(F, 1, 3), f23 = place(F, 2, 3);
    return r12 * f23 * f12 == f23 * f12 * r23 && r23 * f12 * f23 == f12 * f23 * r12;
}

TensorOperator solve_skew_inverse(const TensorOperator& op) {
    if (op.sites() != 2) throw DomainError("skew inverse expects a two-site operator");
    int n = op.dim();
    long n2 = static_cast<long>(n) * n;
    std::uint64_t unknowns = static_cast<std::uint64_t>(n2) * static_cast<std::uint64_t>(n2);

    // R^{kl}_{ij} Psi^{jn}_{lm} = delta^k_m delta^n_i with Psi unknowns
    // indexed by (row (j,n), column (l,m)).
    std::vector<SparseVec> rows(static_cast<size_t>(unknowns));
    std::vector<Scalar> rhs(static_cast<size_t>(unknowns));
    auto eqn = [&](int k, int i, int m, int nn) {
        return static_cast<size_t>(((static_cast<long>(k) * n + i) * n + m) * n + nn);
    };
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Scalar& rv = op.at(k * n + l, i * n + j);
                    if (rv.is_zero()) continue;
                    for (int m = 0; m < n; ++m)
                        for (int nn = 0; nn < n; ++nn) {
                            std::uint64_t unk =
                                static_cast<std::uint64_t>(j * n + nn) * static_cast<std::uint64_t>(n2) +
                                static_cast<std::uint64_t>(l * n + m);
                            rows[eqn(k, i, m, nn)].set(unk, rv);
                        }
                }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) rhs[eqn(k, i, k, i)] = Scalar(1);

    std::vector<Scalar> sol;
    if (!solve_unique(rows, rhs, sol, unknowns))
        throw NotSkewInvertibleError("the skew-inverse system has no unique solution");

    TensorOperator psi(n, 2);
    for (long r = 0; r < n2; ++r)
        for (long c = 0; c < n2; ++c) psi.at(r, c) = sol[static_cast<size_t>(r) * n2 + c];

    // Re-verify both one-sided contractions.
    auto contraction_holds = [&](bool psi_first) {
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int m = 0; m < n; ++m)
                    for (int nn = 0; nn < n; ++nn) {
                        Scalar acc;
                        for (int j = 0; j < n; ++j)
                            for (int l = 0; l < n; ++l) {
                                if (psi_first)
                                    acc += psi.at(k * n + l, i * n + j) * op.at(j * n + nn, l * n + m);
                                else
                                    acc += op.at(k * n + l, i * n + j) * psi.at(j * n + nn, l * n + m);
                            }
                        Scalar expect = (k == m && nn == i) ? Scalar(1) : Scalar();
                        if (!(acc == expect)) return false;
                    }
        return true;
    };
    if (!contraction_holds(false) || !contraction_holds(true))
        throw NotSkewInvertibleError("skew-inverse candidate fails a defining contraction");
    return psi;
}

bool check_trace_identities(const TensorOperator& R, const TensorOperator& C) {
    int n = R.dim();
    TensorOperator cc = C.tensor(C);
    if (!(R * cc == cc * R)) return false;

    TensorOperator rinv = inverse(R);
    TensorOperator id1 = TensorOperator::identity(n, 1);
    // The identity is linear in X, so the matrix-unit basis settles it for
    // arbitrary X.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            TensorOperator e(n, 1);
            e.at(a, b) = Scalar(1);
            TensorOperator x1 = e.tensor(id1);
            TensorOperator expect = id1.scaled(C.at(b, a));  // Tr_R E_ab = C^b_a
            if (!(partial_trace(R * x1 * rinv, {2}, C) == expect)) return false;
            if (!(partial_trace(rinv * x1 * R, {2}, C) == expect)) return false;
        }
    return true;
}

Scalar r_trace(const TensorOperator& X, const TensorOperator& C) {
    if (X.sites() != 1 || C.sites() != 1 || X.dim() != C.dim())
        throw DomainError("r_trace expects matching one-site operators");
    return (C * X).trace();
}

CompatiblePair make_compatible_pair(const TensorOperator& R, const TensorOperator& F) {
    CompatiblePair pair;
    pair.r_profile = classify(R);
    if (pair.r_profile.kind != SymmetryKind::Involutive && pair.r_profile.kind != SymmetryKind::Hecke)
        throw DomainError("R must be an involutive or Hecke symmetry");
    if (!check_braid(F)) throw DomainError("F must satisfy the braid relation");
    if (!check_compatible(R, F)) throw DomainError("(R, F) fails the compatibility relations");
    pair.R = R;
    pair.F = F;
    try {
        solve_skew_inverse(F);
        pair.f_skew_invertible = true;
    } catch (const NotSkewInvertibleError&) {
        pair.f_skew_invertible = false;
    }
    return pair;
}

}  // namespace qma
