#include "rstab/exact.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace rstab;

TEST_CASE("scalar canonical arithmetic") {
    RootTwoScalar half_sqrt = RootTwoScalar::inv_sqrt2();
    RootTwoScalar sum = half_sqrt + half_sqrt;  // 2/r^1; no reduction at k = 1
    CHECK(sum.numerator() == 2);
    CHECK(sum.half_power() == 1);

    RootTwoScalar half = half_sqrt * half_sqrt;
    CHECK(half == RootTwoScalar::make(1, 2));

    CHECK(RootTwoScalar(3) * RootTwoScalar(0) == RootTwoScalar::zero());
    CHECK(RootTwoScalar::make(0, 5) == RootTwoScalar::zero());
    CHECK(RootTwoScalar::make(4, 4) == RootTwoScalar(1));
    CHECK(RootTwoScalar::make(6, 3) == RootTwoScalar::make(3, 1));

    CHECK(RootTwoScalar::make(-1, 3).str() == "-1/r^3");
    CHECK(RootTwoScalar(7).str() == "7");

    // Canonicalization is idempotent and injective on values.
    std::mt19937 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        RootTwoScalar s = RootTwoScalar::make(static_cast<int64_t>(rng() % 4096) - 2048,
                                              static_cast<int>(rng() % 10));
        CHECK(RootTwoScalar::make(s.numerator(), s.half_power()) == s);
        CHECK(s.half_power() >= 0);
        if (s.half_power() >= 2) CHECK(s.numerator() % 2 != 0);
    }
}

TEST_CASE("gate matrices") {
    ExactMatrix h = gate_matrix(Gate{GateKind::H, 0});
    RootTwoScalar r = RootTwoScalar::inv_sqrt2();
    CHECK(h.at(0, 0) == r);
    CHECK(h.at(0, 1) == r);
    CHECK(h.at(1, 0) == r);
    CHECK(h.at(1, 1) == -r);

    ExactMatrix cz = gate_matrix(Gate{GateKind::CZ, 0, 1});
    CHECK(cz.dim() == 4);
    for (size_t i = 0; i < 4; ++i) {
        CHECK(cz.at(i, i) == RootTwoScalar(i == 3 ? -1 : 1));
    }

    ExactMatrix x = gate_matrix(Gate{GateKind::X, 0});
    CHECK(x.at(0, 1) == RootTwoScalar(1));
    CHECK(x.at(1, 0) == RootTwoScalar(1));
    CHECK(x.at(0, 0).is_zero());
}

TEST_CASE("circuit matrices") {
    Circuit empty2;
    empty2.n_qubits = 2;
    CHECK(circuit_matrix(empty2) == ExactMatrix::identity(4));

    Circuit hh = parse_circuit("qubits 1\nH 0\nH 0\n");
    CHECK(circuit_matrix(hh) == ExactMatrix::identity(2));

    Circuit zh4 = parse_circuit("qubits 1\nZ 0\nH 0\nZ 0\nH 0\nZ 0\nH 0\nZ 0\nH 0\n");
    CHECK(circuit_matrix(zh4) == -ExactMatrix::identity(2));

    Circuit big;
    big.n_qubits = 12;
    CHECK_THROWS_AS(circuit_matrix(big), std::invalid_argument);
}

TEST_CASE("conjugation") {
    ExactMatrix h = gate_matrix(Gate{GateKind::H, 0});
    ExactMatrix z = pauli_matrix(PauliOperator::parse("Z"));
    CHECK(conjugate(h, z) == pauli_matrix(PauliOperator::parse("X")));
    CHECK(conjugate(ExactMatrix::identity(2), h) == h);

    ExactMatrix cz = gate_matrix(Gate{GateKind::CZ, 0, 1});
    CHECK(conjugate(cz, pauli_matrix(PauliOperator::parse("X.I"))) ==
          pauli_matrix(PauliOperator::parse("X.Z")));

    ExactMatrix not_orth(2);
    not_orth.at(0, 0) = RootTwoScalar(2);
    CHECK_THROWS_AS(conjugate(not_orth, z), std::invalid_argument);
}

TEST_CASE("pauli recognition") {
    CHECK(*matrix_to_signed_pauli(pauli_matrix(PauliOperator::parse("Z"))) ==
          PauliOperator::parse("Z"));
    CHECK(*matrix_to_signed_pauli(pauli_matrix(PauliOperator::parse("X.Z"))) ==
          PauliOperator::parse("X.Z"));
    CHECK(!matrix_to_signed_pauli(gate_matrix(Gate{GateKind::H, 0})));
    for (const PauliOperator& p : testing::all_paulis(2)) {
        CHECK(*matrix_to_signed_pauli(pauli_matrix(p)) == p);
    }
}

TEST_CASE("basis states") {
    Circuit empty1 = parse_circuit("qubits 1\n");
    ExactVector e0 = apply_to_basis_state(empty1, 0);
    CHECK(e0[0] == RootTwoScalar(1));
    CHECK(e0[1].is_zero());

    Circuit h = parse_circuit("qubits 1\nH 0\n");
    ExactVector plus = apply_to_basis_state(h, 0);
    CHECK(plus[0] == RootTwoScalar::inv_sqrt2());
    CHECK(plus[1] == RootTwoScalar::inv_sqrt2());

    Circuit m1 = parse_circuit("qubits 1\nMINUS1\n");
    CHECK(apply_to_basis_state(m1, 0)[0] == RootTwoScalar(-1));
    CHECK_THROWS_AS(apply_to_basis_state(h, 2), std::invalid_argument);
}

TEST_CASE("random circuits stay exactly orthogonal") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 20);
            CHECK(circuit_matrix(c).is_orthogonal());
        }
    }
}

TEST_CASE("generators normalize the Pauli group") {
    for (int n = 1; n <= 2; ++n) {
        std::vector<Gate> gens{Gate{GateKind::MinusOne}, Gate{GateKind::H, 0},
                               Gate{GateKind::Z, 0}};
        if (n == 2) gens.push_back(Gate{GateKind::CZ, 0, 1});
        for (const Gate& g : gens) {
            Circuit c;
            c.n_qubits = n;
            c.push(g);
            ExactMatrix gm = circuit_matrix(c);
            for (const PauliOperator& p : testing::all_paulis(n)) {
                CHECK(matrix_to_signed_pauli(conjugate(gm, pauli_matrix(p))).has_value());
            }
        }
    }
}
