#include "rstab/circuit.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rstab/exact.hpp"
#include "rstab/normal_form.hpp"
#include "test_helpers.hpp"

using namespace rstab;

TEST_CASE("derived expansions") {
    CHECK(expand(Gate{GateKind::A2, 0}) == std::vector<Gate>{Gate{GateKind::H, 0}});
    CHECK(expand(Gate{GateKind::B2, 0}) ==
          std::vector<Gate>{Gate{GateKind::CZ, 0, 1}, Gate{GateKind::H, 0}, Gate{GateKind::H, 1},
                            Gate{GateKind::CZ, 0, 1}});
    CHECK(expand(Gate{GateKind::E1, 0}).empty());
    CHECK(expand(Gate{GateKind::X, 3}) ==
          std::vector<Gate>{Gate{GateKind::H, 3}, Gate{GateKind::Z, 3}, Gate{GateKind::H, 3}});
    CHECK(expand(Gate{GateKind::CXZ, 1, 0}) ==
          std::vector<Gate>{Gate{GateKind::H, 1}, Gate{GateKind::CZ, 1, 0}, Gate{GateKind::H, 1},
                            Gate{GateKind::CZ, 1, 0}});
}

TEST_CASE("signatures") {
    GateSignature a3 = signature(GateKind::A3);
    CHECK(a3.in == std::vector<WireColor>{WireColor::Plain});
    CHECK(a3.out == std::vector<WireColor>{WireColor::DoubleT});

    GateSignature b8 = signature(GateKind::B8);
    CHECK(b8.in == std::vector<WireColor>{WireColor::Plain, WireColor::DoubleT});
    CHECK(b8.out == std::vector<WireColor>{WireColor::SimpleT, WireColor::Plain});

    GateSignature h = signature(GateKind::H);
    CHECK(h.in == std::vector<WireColor>{WireColor::Plain});
    CHECK(h.out == std::vector<WireColor>{WireColor::Plain});
}

TEST_CASE("type checking") {
    Circuit ok = parse_circuit("qubits 1\nA1 0\nC1 0\n");
    CHECK(try_type_check(ok).has_value());

    Circuit bad = parse_circuit("qubits 1\nA3 0\nC1 0\n");
    TypeError err(0, 0, WireColor::Plain, WireColor::Plain);
    CHECK_FALSE(try_type_check(bad, &err).has_value());
    CHECK(err.gate_index == 1);
    CHECK(err.wire == 0);
    CHECK(err.expected == WireColor::SimpleT);
    CHECK(err.found == WireColor::DoubleT);
    CHECK_THROWS_AS(type_check(bad), TypeError);

    Circuit empty = parse_circuit("qubits 3\n");
    TypedCircuit typed = type_check(empty);
    CHECK(typed.colors.back() ==
          std::vector<WireColor>(3, WireColor::Plain));
}

TEST_CASE("text format") {
    Circuit c = parse_circuit("qubits 2\nH 0\nCZ 0 1\n");
    CHECK(c.n_qubits == 2);
    CHECK(c.gates == std::vector<Gate>{Gate{GateKind::H, 0}, Gate{GateKind::CZ, 0, 1}});

    Circuit scalar = parse_circuit("qubits 1\nMINUS1\n");
    CHECK(scalar.gates == std::vector<Gate>{Gate{GateKind::MinusOne}});

    Circuit pair = parse_circuit("qubits 2\nB4 0\n");
    CHECK(pair.gates == std::vector<Gate>{Gate{GateKind::B4, 0}});

    CHECK_THROWS_WITH_AS(parse_circuit("qubits 1\nQ 0\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("H 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 5\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nCZ 1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nH 0 1\n"), std::invalid_argument);

    std::string file = std::string(RSTAB_TEST_DATA_DIR) + "/mixed3.rsc";
    Circuit mixed = read_circuit_file(file);
    CHECK(mixed.gates.size() == 7);
    // Round trip on the canonical rendering.
    CHECK(parse_circuit(format_circuit(mixed)) == mixed);
}

TEST_CASE("expansion preserves semantics") {
    std::mt19937 rng(11);
    for (int n = 2; n <= 3; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 10);
            // Sprinkle generator gates in.
            c.push(Gate{GateKind::B4, 0});
            c.push(Gate{GateKind::D2, n - 2});
            c.push(Gate{GateKind::A3, n - 1});
            CHECK(circuit_matrix(expand_all(c)) == circuit_matrix(c));
        }
    }
}

TEST_CASE("generator expansions reproduce the action table by exact conjugation") {
    struct Row {
        GateKind gate;
        const char* from;
        const char* to;
    };
    const Row rows[] = {
        {GateKind::A1, "Z", "Z"},         {GateKind::A2, "X", "Z"},
        {GateKind::A3, "XZ", "XZ"},       {GateKind::B1, "I.Z", "Z.I"},
        {GateKind::B2, "X.Z", "Z.I"},     {GateKind::B3, "Z.Z", "Z.I"},
        {GateKind::B4, "XZ.Z", "XZ.I"},   {GateKind::B5, "I.XZ", "XZ.I"},
        {GateKind::B6, "X.XZ", "XZ.I"},   {GateKind::B7, "Z.XZ", "XZ.I"},
        {GateKind::B8, "XZ.XZ", "Z.I"},   {GateKind::C1, "Z", "Z"},
        {GateKind::C2, "-Z", "Z"},        {GateKind::D1, "X.I", "I.X"},
        {GateKind::D1, "XZ.I", "I.XZ"},   {GateKind::D1, "Z.I", "I.Z"},
        {GateKind::D2, "X.X", "I.X"},     {GateKind::D2, "XZ.X", "I.XZ"},
        {GateKind::D2, "Z.I", "I.Z"},     {GateKind::D3, "X.Z", "I.X"},
        {GateKind::D3, "XZ.Z", "I.XZ"},   {GateKind::D3, "Z.I", "I.Z"},
        {GateKind::D4, "X.XZ", "I.XZ"},   {GateKind::D4, "XZ.XZ", "I.X"},
        {GateKind::D4, "Z.I", "I.Z"},     {GateKind::E1, "X", "X"},
        {GateKind::E1, "Z", "Z"},         {GateKind::E2, "-X", "X"},
        {GateKind::E2, "Z", "Z"},
    };
    for (const Row& row : rows) {
        Circuit c;
        c.n_qubits = gate_arity(row.gate);
        c.push(Gate{row.gate, 0});
        auto image = matrix_to_signed_pauli(
            conjugate(circuit_matrix(expand_all(c)), pauli_matrix(PauliOperator::parse(row.from))));
        REQUIRE(image.has_value());
        CHECK(*image == PauliOperator::parse(row.to));
    }
}

TEST_CASE("synthesized normal forms type-check") {
    std::mt19937 rng(3);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 12);
            NormalForm nf = synthesize(Tableau::of_circuit(c), &c);
            CHECK(try_type_check(nf_to_circuit(nf)).has_value());
        }
    }
}
