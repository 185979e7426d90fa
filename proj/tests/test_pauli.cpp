#include "rstab/pauli.hpp"

#include "doctest.h"
#include "rstab/exact.hpp"
#include "test_helpers.hpp"

using namespace rstab;

TEST_CASE("letter products") {
    auto [s1, l1] = letter_mul(kX, kZ);
    CHECK(s1 == +1);
    CHECK(l1 == kXZ);
    auto [s2, l2] = letter_mul(kZ, kX);
    CHECK(s2 == -1);
    CHECK(l2 == kXZ);
    auto [s3, l3] = letter_mul(kXZ, kXZ);
    CHECK(s3 == -1);
    CHECK(l3 == kI);
}

TEST_CASE("word products") {
    PauliOperator x = PauliOperator::parse("X");
    CHECK(x * x == PauliOperator::parse("I"));

    PauliOperator a = PauliOperator::parse("X.Z");
    PauliOperator b = PauliOperator::parse("Z.X");
    CHECK(a * b == PauliOperator::parse("-XZ.XZ"));

    PauliOperator mi = PauliOperator::parse("-I");
    CHECK(mi * mi == PauliOperator::parse("I"));

    CHECK_THROWS_AS(void(x * a), std::invalid_argument);
}

TEST_CASE("squares and commutation") {
    CHECK(PauliOperator::parse("XZ.XZ").squares_to_identity());
    CHECK_FALSE(PauliOperator::parse("XZ").squares_to_identity());
    CHECK(PauliOperator::parse("-I.I.I").squares_to_identity());

    CHECK_FALSE(PauliOperator::commutes(PauliOperator::parse("Z.I"), PauliOperator::parse("X.I")));
    CHECK(PauliOperator::commutes(PauliOperator::parse("Z.Z"), PauliOperator::parse("X.X")));
    CHECK(PauliOperator::commutes(PauliOperator::parse("I"), PauliOperator::parse("XZ")));
}

TEST_CASE("tensor and text format") {
    CHECK(PauliOperator::parse("Z").tensor(PauliOperator::parse("-X")) ==
          PauliOperator::parse("-Z.X"));
    CHECK(PauliOperator::parse("-Z.XZ.I").str() == "-Z.XZ.I");
    CHECK_THROWS_AS(PauliOperator::parse("Q"), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(PauliOperator::parse("Z..X"), std::invalid_argument);

    for (const PauliOperator& p : testing::all_paulis(3)) {
        CHECK(PauliOperator::parse(p.str()) == p);
    }
}

TEST_CASE("word algebra agrees with the matrix oracle exhaustively") {
    for (int n = 1; n <= 2; ++n) {
        auto ps = testing::all_paulis(n);
        for (const PauliOperator& p : ps) {
            // p*p = +I iff the XZ count is even.
            PauliOperator sq = p * p;
            CHECK(sq.is_identity_word());
            CHECK((sq.sign() == +1) == p.squares_to_identity());
            for (const PauliOperator& q : ps) {
                CHECK(pauli_matrix(p) * pauli_matrix(q) == pauli_matrix(p * q));
                CHECK(PauliOperator::commutes(p, q) == (p * q == q * p));
            }
        }
    }
}
