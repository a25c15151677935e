#include <doctest.h>

#include "qma/errors.hpp"
#include "qma/scalar.hpp"
#include "qma/scalar_io.hpp"
#include "testutil.hpp"

using namespace qma;

TEST_CASE("field operations reach canonical form") {
    Scalar q = Scalar::q();
    Scalar qinv = q.inverse();

    CHECK((q - qinv) + qinv == q);
    CHECK((q * q - Scalar(1)) / (q - Scalar(1)) == q + Scalar(1));
    Scalar s = q + qinv;
    CHECK(s.inverse() * s == Scalar(1));
    CHECK_THROWS_AS(Scalar().inverse(), ArithmeticError);
    CHECK_THROWS_AS(q / Scalar(), ArithmeticError);
}

TEST_CASE("q-numbers") {
    CHECK(q_number(1) == Scalar(1));
    CHECK(q_number(0) == Scalar());
    CHECK(q_number(2) == Scalar::q() + Scalar::q_pow(-1));
    for (long k : {-5L, -2L, 1L, 3L, 7L}) CHECK(q_number(-k) == -q_number(k));
    // explicit form of 3_q
    Scalar expect = Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2);
    CHECK(q_number(3) == expect);
}

TEST_CASE("q-factorials") {
    CHECK(q_factorial(0) == Scalar(1));
    CHECK(q_factorial(2) == q_number(2));
    CHECK(q_factorial(3) == q_number(2) * q_number(3));
    CHECK_THROWS_AS(q_factorial(-1), DomainError);
}

TEST_CASE("specialization") {
    CHECK(q_number(2).specialize(Rational(2)) == Rational(5, 2));
    CHECK_THROWS_AS(q_number(2).specialize(Rational(1)), GenericityError);
    Scalar pole = Scalar(1) / (Scalar::q() - Scalar(1));
    CHECK_THROWS_AS(pole.specialize(Rational(1)), GenericityError);
    CHECK_THROWS_AS((Scalar(1) / (Scalar::q() - Scalar(2))).specialize(Rational(2)), ArithmeticError);
    check_generic(Rational(7, 5), 8);
    CHECK_THROWS_AS(check_generic(Rational(-1), 8), GenericityError);
}

TEST_CASE("q-number specialization identity") {
    TestRng rng(11);
    for (int i = 0; i < 100; ++i) {
        long k = static_cast<long>(rng.next(13)) - 6;
        Rational q0(static_cast<long>(rng.next(20)) + 2, static_cast<long>(rng.next(5)) + 1);
        q0.canonicalize();
        if (q0 == 1 || q0 == 0 || q0 == -1) continue;
        Rational lhs = q_number(k).specialize(q0);
        Rational qk(1), qmk(1);
        for (long t = 0; t < (k < 0 ? -k : k); ++t) qk *= q0;
        if (k < 0) qk = 1 / qk;
        qmk = 1 / qk;
        Rational rhs = (qk - qmk) / (q0 - 1 / q0);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field axioms on random expressions") {
    TestRng rng(7);
    auto rand_scalar = [&rng]() {
        Scalar acc = q_number(static_cast<long>(rng.next(7)) - 3);
        for (int step = 0; step < 4; ++step) {
            Scalar other = q_number(static_cast<long>(rng.next(9)) - 4) + Scalar(static_cast<long>(rng.next(5)) - 2);
            switch (rng.next(4)) {
                case 0: acc += other; break;
                case 1: acc -= other; break;
                case 2: acc *= other; break;
                default:
                    if (!other.is_zero()) acc /= other;
                    break;
            }
        }
        return acc;
    };
    for (int i = 0; i < 100; ++i) {
        Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        // canonical equality: a - b == 0 iff a == b
        CHECK(((a - b).is_zero()) == (a == b));
    }
}

TEST_CASE("scalar grammar round-trips") {
    for (const char* text : {"q - 1/q", "(q^2-1)/(q+1)", "0", "-3", "2*q^3 - 7",
                             "1/(q+1)", "q^-2", "q^(-2)", "(q - 1/q)^3 / (q^2 + 1)"}) {
        Scalar x = parse_scalar(text);
        CHECK(parse_scalar(scalar_to_string(x)) == x);
    }
    CHECK(parse_scalar("q - 1/q") == Scalar::q() - Scalar::q_pow(-1));
    CHECK(parse_scalar("(q^2-1)/(q+1)") == Scalar::q() - Scalar(1));
    CHECK_THROWS_AS(parse_scalar("q +"), FormatError);
    CHECK_THROWS_AS(parse_scalar("2x"), FormatError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ArithmeticError);

    TestRng rng(23);
    for (int i = 0; i < 100; ++i) {
        Scalar x = q_number(static_cast<long>(rng.next(9)) - 4) * Scalar::q_pow(static_cast<long>(rng.next(7)) - 3) +
                   Scalar(Rational(static_cast<long>(rng.next(11)) - 5, 1 + static_cast<long>(rng.next(4))));
        CHECK(parse_scalar(scalar_to_string(x)) == x);
    }
}

TEST_CASE("square roots in Q(q)") {
    Scalar s = (Scalar::q() + Scalar(1)) * (Scalar::q() + Scalar(1)) * Scalar::q_pow(-4);
    Scalar r;
    CHECK(s.try_sqrt(r));
    CHECK(r * r == s);
    CHECK_FALSE(Scalar::q_pow(3).try_sqrt(r));
    CHECK_FALSE((Scalar::q() + Scalar(1)).try_sqrt(r));
}
