#pragma once

#include "qma/tensor.hpp"

namespace qma::fixtures {

/// The involutive N=2 symmetry: rows/cols ordered 11, 12, 21, 22.
inline TensorOperator involutive_r() {
    TensorOperator r(2, 2);
    r.at(0, 0) = Scalar(1);
    r.at(3, 3) = Scalar(1);
    r.at(1, 2) = Scalar::q();
    r.at(2, 1) = Scalar::q_pow(-1);
    return r;
}

/// The Hecke N=2 symmetry paired with it.
inline TensorOperator hecke_r() {
    TensorOperator r(2, 2);
    r.at(0, 0) = Scalar::q();
    r.at(3, 3) = Scalar::q();
    r.at(1, 1) = Scalar::q() - Scalar::q_pow(-1);
    r.at(1, 2) = Scalar(1);
    r.at(2, 1) = Scalar(1);
    return r;
}

inline TensorOperator flip2() { return TensorOperator::flip(2); }

}  // namespace qma::fixtures
