#include "qma/baxter.hpp"

#include <array>
#include <map>

#include "qma/braiding.hpp"
#include "qma/errors.hpp"
#include "qma/symmetrizer.hpp"

namespace qma {

namespace {

struct Mono {
    std::array<int, 3> e{0, 0, 0};  // exponents of u, v, w
    auto operator<=>(const Mono&) const = default;
};

// Polynomial in (u, v, w) with tensor-operator coefficients.
using PolyMatrix = std::map<Mono, TensorOperator>;

void add_term(PolyMatrix& p, const Mono& m, const TensorOperator& t) {
    if (t.is_zero()) return;
    auto it = p.find(m);
    if (it == p.end())
        p.emplace(m, t);
    else {
        it->second = it->second + t;
        if (it->second.is_zero()) p.erase(it);
    }
}

PolyMatrix poly_mul(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r;
    for (const auto& [ma, ta] : a)
        for (const auto& [mb, tb] : b) {
            Mono m;
            for (int i = 0; i < 3; ++i) m.e[static_cast<size_t>(i)] = ma.e[static_cast<size_t>(i)] + mb.e[static_cast<size_t>(i)];
            add_term(r, m, ta * tb);
        }
    return r;
}

bool poly_equal(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [m, t] : a) {
        auto it = b.find(m);
        if (it == b.end() || !(it->second == t)) return false;
    }
    return true;
}

// Denominator-cleared current (x - y) R(x, y) placed at position pos of
// V^(tensor sites); x, y name two of the three parameter slots.
PolyMatrix cleared_current(const CurrentBraiding& cb, int pos, int sites, int x, int y) {
    TensorOperator rp = sites == 2 ? cb.r : place(cb.r, pos, sites);
    TensorOperator id = TensorOperator::identity(cb.r.dim(), sites);
    PolyMatrix p;
    Mono mx, my;
    mx.e[static_cast<size_t>(x)] = 1;
    my.e[static_cast<size_t>(y)] = 1;
    if (cb.flavor == Flavor::Rational) {
        add_term(p, mx, rp);
        add_term(p, my, rp.scaled(Scalar(-1)));
        add_term(p, Mono{}, id.scaled(Scalar(-1)));
    } else {
        add_term(p, mx, rp - id.scaled(cb.lambda));
        add_term(p, my, rp.scaled(Scalar(-1)));
    }
    return p;
}

// Substitute v -> alpha u + beta, collapsing to a polynomial in u alone.
PolyMatrix substitute_v(const PolyMatrix& p, const Scalar& alpha, const Scalar& beta) {
    PolyMatrix r;
    for (const auto& [m, t] : p) {
        int b = m.e[1];
        // binomial expansion of (alpha u + beta)^b
        for (int i = 0; i <= b; ++i) {
            Scalar coeff(1);  // C(b, i) alpha^i beta^(b-i)
            for (int k = 0; k < i; ++k) coeff *= Scalar(b - k) / Scalar(k + 1);
            coeff *= alpha.pow(i) * beta.pow(b - i);
            if (coeff.is_zero()) continue;
            Mono mm;
            mm.e[0] = m.e[0] + i;
            mm.e[2] = m.e[2];
            add_term(r, mm, t.scaled(coeff));
        }
    }
    return r;
}

}  // namespace

TensorOperator CurrentBraiding::eval(const Rational& u, const Rational& v) const {
    if (u == v) throw ArithmeticError("current braiding has a pole at u = v");
    Scalar du{Rational(u - v)};
    Scalar c = flavor == Flavor::Rational ? du.inverse() : lambda * Scalar{Rational(u)} * du.inverse();
    return r - TensorOperator::identity(r.dim(), 2).scaled(c);
}

CurrentBraiding baxterize(const TensorOperator& r, Flavor flavor) {
    SymmetryProfile p = classify(r, false);
    if (flavor == Flavor::Rational && p.kind != SymmetryKind::Involutive)
        throw DomainError("rational Baxterization needs an involutive symmetry");
    if (flavor == Flavor::Trigonometric && p.kind != SymmetryKind::Hecke)
        throw DomainError("trigonometric Baxterization needs a Hecke symmetry");
    CurrentBraiding cb;
    cb.r = r;
    cb.flavor = flavor;
    if (flavor == Flavor::Trigonometric)
        cb.lambda = p.hecke_parameter - p.hecke_parameter.inverse();
    return cb;
}

bool parametric_braid_numeric(const CurrentBraiding& cb, int count, std::uint64_t seed,
                              const std::optional<Rational>& q0) {
    CurrentBraiding local = cb;
    if (q0) {
        check_generic(*q0, 8);
        local.r = cb.r.specialized(*q0);
        if (cb.flavor == Flavor::Trigonometric) local.lambda = Scalar(cb.lambda.specialize(*q0));
    }
    std::uint64_t state = seed * 2654435769u + 12345;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    int done = 0;
    while (done < count) {
        Rational u(static_cast<long>(next() % 41) - 20, 1 + static_cast<long>(next() % 4));
        Rational v(static_cast<long>(next() % 41) - 20, 1 + static_cast<long>(next() % 4));
        Rational w(static_cast<long>(next() % 41) - 20, 1 + static_cast<long>(next() % 4));
        u.canonicalize();
        v.canonicalize();
        w.canonicalize();
        if (u == v || u == w || v == w) continue;
        ++done;
        TensorOperator l = place(local.eval(u, v), 1, 3) * place(local.eval(u, w), 2, 3) *
                           place(local.eval(v, w), 1, 3);
        TensorOperator rr = place(local.eval(v, w), 2, 3) * place(local.eval(u, w), 1, 3) *
                            place(local.eval(u, v), 2, 3);
        if (!(l == rr)) return false;
    }
    return true;
}

bool parametric_braid_symbolic(const CurrentBraiding& cb) {
    // variables: u = 0, v = 1, w = 2
    PolyMatrix lhs = poly_mul(poly_mul(cleared_current(cb, 1, 3, 0, 1), cleared_current(cb, 2, 3, 0, 2)),
                              cleared_current(cb, 1, 3, 1, 2));
    PolyMatrix rhs = poly_mul(poly_mul(cleared_current(cb, 2, 3, 1, 2), cleared_current(cb, 1, 3, 0, 2)),
                              cleared_current(cb, 2, 3, 0, 1));
    return poly_equal(lhs, rhs);
}

bool degeneration_check(const CurrentBraiding& cb, const TensorOperator& a2) {
    PolyMatrix cleared = cleared_current(cb, 1, 2, 0, 1);
    if (cb.flavor == Flavor::Trigonometric) {
        // v = q^-2 u: (u - v) becomes u (1 - q^-2)
        SymmetryProfile p = classify(cb.r, false);
        Scalar qinv2 = p.hecke_parameter.pow(-2);
        PolyMatrix lhs = substitute_v(cleared, qinv2, Scalar());
        PolyMatrix expect;
        Mono mu;
        mu.e[0] = 1;
        Scalar factor = (Scalar(1) - qinv2) * (-(p.hecke_parameter + p.hecke_parameter.inverse()));
        add_term(expect, mu, a2.scaled(factor));
        return poly_equal(lhs, expect);
    }
    // v = u - 1: (u - v) becomes 1
    PolyMatrix lhs = substitute_v(cleared, Scalar(1), Scalar(-1));
    PolyMatrix expect;
    add_term(expect, Mono{}, a2.scaled(Scalar(-2)));
    return poly_equal(lhs, expect);
}

}  // namespace qma
