#include <doctest.h>

#include "fixtures.hpp"
#include "qma/errors.hpp"
#include "qma/symmetrizer.hpp"

using namespace qma;
using namespace qma::fixtures;

TEST_CASE("level-two projectors match the closed forms") {
    TensorOperator id = TensorOperator::identity(2, 2);

    ProjectorTower skew_h = build_tower(hecke_r(), TowerKind::Skew, 2);
    CHECK(skew_h.level(2) == (id.scaled(Scalar::q()) - hecke_r()).scaled(q_number(2).inverse()));

    ProjectorTower skew_i = build_tower(involutive_r(), TowerKind::Skew, 2);
    CHECK(skew_i.level(2) == (id - involutive_r()).scaled(Scalar{Rational(1, 2)}));
}

TEST_CASE("towers are idempotent and orthogonal at level two") {
    for (const TensorOperator& r : {involutive_r(), hecke_r()}) {
        ProjectorTower skew = build_tower(r, TowerKind::Skew, 4);
        ProjectorTower sym = build_tower(r, TowerKind::Symmetric, 4);
        for (int k = 1; k <= 4; ++k) {
            CHECK(skew.level(k) * skew.level(k) == skew.level(k));
            CHECK(sym.level(k) * sym.level(k) == sym.level(k));
        }
        TensorOperator a = skew.level(2), s = sym.level(2);
        CHECK(a + s == TensorOperator::identity(2, 2));
        CHECK((a * s).is_zero());
        CHECK((s * a).is_zero());
    }
}

TEST_CASE("poincare dimensions") {
    CHECK(poincare_dims(build_tower(involutive_r(), TowerKind::Skew, 3)) == std::vector<int>{2, 1, 0});
    CHECK(poincare_dims(build_tower(hecke_r(), TowerKind::Skew, 3)) == std::vector<int>{2, 1, 0});
    CHECK(poincare_dims(build_tower(flip2(), TowerKind::Skew, 3)) == std::vector<int>{2, 1, 0});
    CHECK(poincare_dims(build_tower(hecke_r(), TowerKind::Symmetric, 3)) == std::vector<int>{2, 3, 4});
}

TEST_CASE("evenness certificate for the involutive symmetry") {
    EvennessCertificate cert = detect_even(build_tower(involutive_r(), TowerKind::Skew, 4));
    CHECK(cert.m == 2);
    Scalar half{Rational(1, 2)};
    CHECK(cert.v.entries == std::vector<Scalar>{Scalar(), Scalar(1), -Scalar::q(), Scalar()});
    CHECK(cert.u.entries ==
          std::vector<Scalar>{Scalar(), half, -half * Scalar::q_pow(-1), Scalar()});
    CHECK(cert.pairing == Scalar(1));
}

TEST_CASE("evenness certificate for the Hecke symmetry") {
    EvennessCertificate cert = detect_even(build_tower(hecke_r(), TowerKind::Skew, 4));
    CHECK(cert.m == 2);
    Scalar inv2q = q_number(2).inverse();
    CHECK(cert.v.entries == std::vector<Scalar>{Scalar(), Scalar(1), -Scalar::q(), Scalar()});
    CHECK(cert.u.entries ==
          std::vector<Scalar>{Scalar(), inv2q * Scalar::q_pow(-1), -inv2q, Scalar()});
}

TEST_CASE("evenness certificate for the flip") {
    EvennessCertificate cert = detect_even(build_tower(flip2(), TowerKind::Skew, 4));
    CHECK(cert.m == 2);
    Scalar half{Rational(1, 2)};
    CHECK(cert.v.entries == std::vector<Scalar>{Scalar(), Scalar(1), Scalar(-1), Scalar()});
    CHECK(cert.u.entries == std::vector<Scalar>{Scalar(), half, -half, Scalar()});
}

TEST_CASE("evenness detection needs a [1, 0] tail") {
    ProjectorTower shallow = build_tower(flip2(), TowerKind::Skew, 2);
    CHECK_THROWS_AS(detect_even(shallow), NotEvenError);
    ProjectorTower sym = build_tower(flip2(), TowerKind::Symmetric, 3);
    CHECK_THROWS_AS(detect_even(sym), DomainError);
}

TEST_CASE("pairing against a weight matrix") {
    EvennessCertificate cert = detect_even(build_tower(hecke_r(), TowerKind::Skew, 4));
    CHECK(pairing_vfu(cert.v, cert.u, TensorOperator::identity(2, 1)) == Scalar(1));

    TensorOperator c(2, 1);
    c.at(0, 0) = Scalar::q_pow(-1);
    c.at(1, 1) = Scalar::q_pow(-3);
    CHECK(pairing_vfu(cert.v, cert.u, c) == Scalar::q_pow(-4));  // q^{-m^2} at m = 2

    CovariantTensor zero_u;
    zero_u.dim = 2;
    zero_u.rank = 2;
    zero_u.entries.assign(4, Scalar());
    CHECK(pairing_vfu(cert.v, zero_u, c).is_zero());
}

TEST_CASE("numeric tower specialization guards genericity") {
    CHECK_NOTHROW(build_tower(hecke_r().specialized(Rational(3)), TowerKind::Skew, 3, Rational(3)));
}
