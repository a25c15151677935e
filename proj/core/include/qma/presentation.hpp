#pragma once

#include <string>
#include <vector>

#include "qma/elim.hpp"
#include "qma/ncpoly.hpp"
#include "qma/tensor.hpp"

namespace qma {

enum class SystemKind { QMA, HQA, HQA2, TensorSquare, Custom };

/// Generator alphabet plus the quadratic defining relations obtained from a
/// compatible couple (R, F). Relations are stored echelon-deduplicated in a
/// canonical reduced form.
struct Presentation {
    std::vector<std::string> names;
    std::vector<NCPolynomial> relations;
    SystemKind kind = SystemKind::Custom;
    std::string source;
    bool f_is_flip = false;     // F = P, i.e. an RTT-type presentation
    bool homogeneous = true;    // all relations homogeneous of degree 2
    int degree_cap = 8;

    size_t alphabet_size() const { return names.size(); }
};

/// Generator names: a, b, c, d for N = 2, otherwise l11, l12, ...
std::vector<std::string> generator_names(int dim);

/// The generating matrix L with L[i][j] = l^i_j (row = upper index).
NCMatrix generator_matrix(int dim, const std::vector<std::string>& names);

/// F-copies L_ov1 .. L_ovp on V^(tensor p):
/// L_ov1 = L (x) I, L_ov{k+1} = F_{k,k+1} L_ovk F_{k,k+1}^{-1}.
std::vector<NCMatrix> f_copies(const NCMatrix& l, const TensorOperator& f, int p);

/// Build QMA / HQA / (the mirrored HQA, system A L L S = 0) presentations
/// from a compatible couple. Throws DomainError on incompatible input.
Presentation present(const TensorOperator& r, const TensorOperator& f, SystemKind system);

/// Tensor-square of an RTT presentation: doubled alphabet, both relation
/// copies, and cross-commutativity. Used for coproduct checks.
Presentation tensor_square(const Presentation& pres);

/// Echelon span of a relation list in the degree-2 word space (canonical
/// reduced form), for subspace comparisons.
EchelonBasis degree2_span(const std::vector<NCPolynomial>& relations, size_t alphabet);

}  // namespace qma
