#pragma once

#include <optional>
#include <vector>

#include "qma/braiding.hpp"
#include "qma/tensor.hpp"

namespace qma {

enum class TowerKind { Symmetric, Skew };

/// Tower of projectors S^(k) or A^(k); level k acts on V^(tensor k) and the
/// recursion coefficients use q for a Hecke symmetry and their q = 1 values
/// for an involutive one. Idempotency is verified level by level.
struct ProjectorTower {
    TensorOperator r;
    TowerKind kind = TowerKind::Skew;
    bool hecke = false;
    std::vector<TensorOperator> levels;  // levels[k-1] = projector on V^(tensor k)

    const TensorOperator& level(int k) const { return levels.at(static_cast<size_t>(k - 1)); }
    int max_level() const { return static_cast<int>(levels.size()); }
};

/// Build the projector tower by the two-term recursion. When q0 is given the
/// recursion coefficients are specialized (numeric screening mode) and a
/// vanishing q-number raises GenericityError.
ProjectorTower build_tower(const TensorOperator& r, TowerKind kind, int k_max,
                           const std::optional<Rational>& q0 = std::nullopt);

/// Ranks of the tower levels = dimensions of the homogeneous components.
std::vector<int> poincare_dims(const ProjectorTower& tower);

/// The rank-one factorization data of the top skew component: m is the top
/// degree, A^(m)[I, J] = u_I v^J entrywise, and <v, u> = 1.
struct EvennessCertificate {
    int m = 0;
    CovariantTensor u;
    ContravariantTensor v;
    Scalar pairing;  // <v, u> after normalization (must be 1)
};

/// Detect evenness of bi-rank (m|0): the first m with rank A^(m) = 1
/// followed by rank A^(m+1) = 0. Normalization fixes the first nonzero
/// coordinate of v (lexicographic order) to 1 and rescales u so <v, u> = 1.
/// Throws NotEvenError with the rank profile when no such m exists within
/// the tower.
EvennessCertificate detect_even(const ProjectorTower& skew_tower);

/// (v ._F u) = v^{j1..jm} C^{i1}_{j1} ... C^{im}_{jm} u_{i1..im}.
Scalar pairing_vfu(const ContravariantTensor& v, const CovariantTensor& u,
                   const TensorOperator& c_f);

}  // namespace qma
