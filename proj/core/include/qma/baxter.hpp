#pragma once

#include <cstdint>

#include "qma/tensor.hpp"

namespace qma {

enum class Flavor { Rational, Trigonometric };

/// Spectral-parameter braiding produced from a symmetry:
///   rational       R(u,v) = R - I/(u-v)
///   trigonometric  R(u,v) = R - (q - 1/q) u I/(u-v)
struct CurrentBraiding {
    TensorOperator r;
    Flavor flavor = Flavor::Rational;
    Scalar lambda;  // q - 1/q for the trigonometric flavor

    /// Evaluate at exact rational parameters; throws ArithmeticError at u = v.
    TensorOperator eval(const Rational& u, const Rational& v) const;
};

/// Validates the flavor precondition (involutive for rational, Hecke for
/// trigonometric) and wraps the operator.
CurrentBraiding baxterize(const TensorOperator& r, Flavor flavor);

/// Parametric braid relation R12(u,v) R23(u,w) R12(v,w) = R23(v,w) R12(u,w) R23(u,v)
/// at `count` random admissible rational triples (fast screen). The check
/// runs over Q(q) entries unless q0 specializes them first.
bool parametric_braid_numeric(const CurrentBraiding& cb, int count, std::uint64_t seed,
                              const std::optional<Rational>& q0 = std::nullopt);

/// The same relation proved over Q(q, u, v, w): both triple products of the
/// denominator-cleared currents are expanded as polynomials in (u, v, w)
/// with matrix coefficients and compared monomial by monomial.
bool parametric_braid_symbolic(const CurrentBraiding& cb);

/// Exact degeneration onto the skew symmetrizer: R(u, q^-2 u) = -2_q A^(2)
/// (trigonometric) and R(u, u-1) = -2 A^(2) (rational), proved symbolically.
bool degeneration_check(const CurrentBraiding& cb, const TensorOperator& a2);

}  // namespace qma
