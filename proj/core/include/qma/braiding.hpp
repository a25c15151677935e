#pragma once

#include <optional>

#include "qma/tensor.hpp"

namespace qma {

enum class SymmetryKind { Involutive, Hecke, BraidingOnly, NotABraiding };

/// Classification result for a two-site operator: braid status, the
/// involutive/Hecke dichotomy with the recovered Hecke parameter, and the
/// skew-invertibility data (Psi and C = Tr_(2) Psi) when they exist.
struct SymmetryProfile {
    SymmetryKind kind = SymmetryKind::NotABraiding;
    Scalar hecke_parameter;  // set when kind == Hecke
    bool skew_invertible = false;
    std::optional<TensorOperator> psi;
    std::optional<TensorOperator> c_matrix;
};

/// Both triple products of the braid relation agree on V^(tensor 3).
bool check_braid(const TensorOperator& op);

/// Classify a two-site operator. Involutive is detected before Hecke; the
/// Hecke parameter is recovered from the minimal polynomial, which must be
/// (t - q)(t + 1/q) for a unit q outside {0, 1, -1}. When with_skew_inverse
/// is set the skew-inverse solve is attempted and its result recorded.
SymmetryProfile classify(const TensorOperator& op, bool with_skew_inverse = true);

/// The two mixed relations making the ordered couple (R, F) compatible:
/// R12 F23 F12 = F23 F12 R23 and R23 F12 F23 = F12 F23 R12.
bool check_compatible(const TensorOperator& R, const TensorOperator& F);

/// Solve the two-sided contraction system for Psi and verify both defining
/// identities; throws NotSkewInvertibleError when the linear system is not
/// uniquely solvable.
TensorOperator solve_skew_inverse(const TensorOperator& op);

/// Lyubashenko trace identities: R12 C1 C2 = C1 C2 R12 and
/// Tr_R(2) R^(+-1) X1 R^(-+1) = I Tr_R X for arbitrary X (checked on the
/// full basis of matrix units, which settles it for every X by linearity).
bool check_trace_identities(const TensorOperator& R, const TensorOperator& C);

/// Tr_R X = Tr(C X) for a one-site operator.
Scalar r_trace(const TensorOperator& X, const TensorOperator& C);

struct CompatiblePair {
    TensorOperator R;
    TensorOperator F;
    SymmetryProfile r_profile;
    bool f_skew_invertible = false;
};

/// Validate and bundle a couple (R, F); throws DomainError when R is not an
/// involutive or Hecke symmetry or the compatibility relations fail.
CompatiblePair make_compatible_pair(const TensorOperator& R, const TensorOperator& F);

}  // namespace qma
