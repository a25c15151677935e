#include <doctest.h>

#include "qma/elim.hpp"
#include "qma/errors.hpp"
#include "qma/matrix_io.hpp"
#include "qma/scalar_io.hpp"
#include "qma/tensor.hpp"
#include "testutil.hpp"

using namespace qma;

namespace {

// The two N=2 symmetries used throughout: the involutive one and the Hecke
// one, as 4x4 matrices on V ⊗ V.
TensorOperator involutive_r() {
    TensorOperator r(2, 2);
    r.at(0, 0) = Scalar(1);
    r.at(3, 3) = Scalar(1);
    r.at(1, 2) = Scalar::q();
    r.at(2, 1) = Scalar::q_pow(-1);
    return r;
}

TensorOperator hecke_r() {
    TensorOperator r(2, 2);
    r.at(0, 0) = Scalar::q();
    r.at(3, 3) = Scalar::q();
    r.at(1, 1) = Scalar::q() - Scalar::q_pow(-1);
    r.at(1, 2) = Scalar(1);
    r.at(2, 1) = Scalar(1);
    return r;
}

}  // namespace

TEST_CASE("index encoding is big-endian") {
    CHECK(encode_index(2, {1, 0}) == 2);
    CHECK(encode_index(3, {1, 2}) == 5);
    CHECK(decode_index(2, 3, 5) == std::vector<int>{1, 0, 1});
}

TEST_CASE("placement basics") {
    TensorOperator p = TensorOperator::flip(2);
    CHECK(place(p, 1, 2) == p);
    TensorOperator id4 = TensorOperator::identity(2, 2);
    CHECK(place(id4, 1, 3) == TensorOperator::identity(2, 3));
    CHECK(place(id4, 2, 3) == TensorOperator::identity(2, 3));
    CHECK_THROWS_AS(place(p, 3, 3), PlacementError);
    CHECK_THROWS_AS(place(p, 0, 3), PlacementError);
}

TEST_CASE("braid relation for the paper symmetries via placement") {
    for (const TensorOperator& r : {involutive_r(), hecke_r(), TensorOperator::flip(2)}) {
        TensorOperator r12 = place(r, 1, 3), r23 = place(r, 2, 3);
        CHECK(r12 * r23 * r12 == r23 * r12 * r23);
    }
}

TEST_CASE("place respects composition") {
    TestRng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        TensorOperator a(2, 2), b(2, 2);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 4; ++j) {
                if (rng.next(2)) a.at(i, j) = Scalar(static_cast<long>(rng.next(5)) - 2);
                if (rng.next(2)) b.at(i, j) = Scalar(static_cast<long>(rng.next(5)) - 2);
            }
        int k = 1 + static_cast<int>(rng.next(3));
        CHECK(place(a, k, 4) * place(b, k, 4) == place(a * b, k, 4));
    }
}

TEST_CASE("partial traces") {
    TensorOperator p = TensorOperator::flip(2);
    TensorOperator full = partial_trace(p, {1, 2});
    CHECK(full.sites() == 0);
    CHECK(full.at(0, 0) == Scalar(2));  // Tr P = N

    TensorOperator id = TensorOperator::identity(2, 2);
    TensorOperator t = partial_trace(id, {2});
    CHECK(t == TensorOperator::identity(2, 1).scaled(Scalar(2)));

    CHECK_THROWS_AS(partial_trace(p, {1, 1}), DomainError);
    CHECK_THROWS_AS(partial_trace(p, {3}), DomainError);
    CHECK_THROWS_AS(partial_trace(p, {}), DomainError);
}

TEST_CASE("partial traces over disjoint site sets commute") {
    TestRng rng(17);
    for (int rep = 0; rep < 20; ++rep) {
        TensorOperator x(2, 3);
        for (long i = 0; i < 8; ++i)
            for (long j = 0; j < 8; ++j)
                if (rng.next(3) == 0) x.at(i, j) = Scalar(static_cast<long>(rng.next(7)) - 3);
        TensorOperator a = partial_trace(partial_trace(x, {3}), {1});
        TensorOperator b = partial_trace(partial_trace(x, {1}), {2});  // site 3 becomes 2 after tracing site 1
        CHECK(a == b);
        CHECK(partial_trace(x, {1, 3}) == a);
    }
}

TEST_CASE("rank, kernel and image") {
    TensorOperator id = TensorOperator::identity(2, 1);
    RankKernel rk = rank_kernel(id);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel_basis.empty());
    CHECK(rk.image_basis.size() == 2);

    // a rank-1 projector
    TensorOperator a(2, 2);
    a.at(1, 1) = Scalar(1);
    a.at(1, 2) = -Scalar::q_pow(-1);
    a.at(2, 1) = -Scalar::q();
    a.at(2, 2) = Scalar(1);
    rk = rank_kernel(a);
    CHECK(rk.rank == 1);
    CHECK(rk.kernel_basis.size() == 3);
}

TEST_CASE("rank-nullity on random sparse operators") {
    TestRng rng(29);
    for (int rep = 0; rep < 100; ++rep) {
        int sites = 1 + static_cast<int>(rng.next(2));
        TensorOperator x(2, sites);
        for (long i = 0; i < x.size(); ++i)
            for (long j = 0; j < x.size(); ++j)
                if (rng.next(3) == 0) x.at(i, j) = Scalar(static_cast<long>(rng.next(9)) - 4);
        RankKernel rk = rank_kernel(x);
        CHECK(rk.rank + static_cast<int>(rk.kernel_basis.size()) == static_cast<int>(x.size()));
        // kernel vectors really annihilate the operator
        for (const SparseVec& v : rk.kernel_basis) {
            for (long r = 0; r < x.size(); ++r) {
                Scalar acc;
                for (const auto& [c, val] : v.terms) acc += x.at(r, static_cast<long>(c)) * val;
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("inverse over Q(q)") {
    TensorOperator r = hecke_r();
    TensorOperator rinv = inverse(r);
    CHECK(r * rinv == TensorOperator::identity(2, 2));
    // Hecke relation: R^-1 = R - (q - 1/q) I
    TensorOperator expect = r - TensorOperator::identity(2, 2).scaled(Scalar::q() - Scalar::q_pow(-1));
    CHECK(rinv == expect);

    TensorOperator sing(2, 1);
    sing.at(0, 0) = Scalar(1);
    CHECK_THROWS_AS(inverse(sing), ArithmeticError);
}

TEST_CASE("matrix JSON round-trip") {
    TensorOperator r = hecke_r();
    std::string text = matrix_to_json(r);
    TensorOperator back = matrix_from_json(text);
    CHECK(back == r);
    CHECK_THROWS_AS(matrix_from_json("{\"dim\": 2}"), FormatError);
    CHECK_THROWS_AS(matrix_from_json("not json"), FormatError);
    CHECK_THROWS_AS(matrix_from_json("{\"dim\":2,\"sites\":1,\"entries\":[[\"1\"],[\"0\"]]}"), FormatError);
}
