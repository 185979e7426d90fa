#include "rstab/normal_form.hpp"

#include "doctest.h"
#include "rstab/counting.hpp"
#include "test_helpers.hpp"

using namespace rstab;

TEST_CASE("generator selection") {
    CHECK(select_generator('A', {WireColor::Plain}, PauliOperator::parse("X"),
                           PauliOperator::parse("Z")) == GateKind::A2);
    CHECK(select_generator('C', {WireColor::SimpleT}, PauliOperator::parse("-Z"),
                           PauliOperator::parse("Z")) == GateKind::C2);
    CHECK(select_generator('B', {WireColor::Plain, WireColor::SimpleT},
                           PauliOperator::parse("XZ.Z"),
                           PauliOperator::parse("XZ.I")) == GateKind::B4);
    CHECK_THROWS_AS(select_generator('A', {WireColor::Plain}, PauliOperator::parse("X"),
                                     PauliOperator::parse("X")),
                    std::logic_error);
}

TEST_CASE("z-circuit construction") {
    ZCircuit z1 = build_z_circuit(PauliOperator::parse("Z"));
    CHECK(z1 == ZCircuit{0, GateKind::A1, {}, GateKind::C1});

    ZCircuit z2 = build_z_circuit(PauliOperator::parse("-X"));
    CHECK(z2 == ZCircuit{0, GateKind::A2, {}, GateKind::C2});

    ZCircuit z3 = build_z_circuit(PauliOperator::parse("XZ.XZ"));
    CHECK(z3 == ZCircuit{1, GateKind::A3, {GateKind::B8}, GateKind::C1});

    CHECK_THROWS_AS(build_z_circuit(PauliOperator::parse("XZ")), std::invalid_argument);
    CHECK_THROWS_AS(build_z_circuit(PauliOperator::parse("-I.I")), std::invalid_argument);

    // The defining property, for every admissible operand at n <= 3.
    for (int n = 1; n <= 3; ++n) {
        PauliOperator top_z = PauliOperator::single(n, 0, kZ);
        for (const PauliOperator& p : testing::all_paulis(n)) {
            if (!p.squares_to_identity() || p.is_identity_word()) continue;
            ZCircuit z = build_z_circuit(p);
            Tableau t = Tableau::of_circuit(z_circuit_to_circuit(z, n));
            CHECK(t.apply(p) == top_z);
        }
    }
}

TEST_CASE("x-circuit construction") {
    CHECK(build_x_circuit(PauliOperator::parse("X")) == XCircuit{{}, GateKind::E1});
    CHECK(build_x_circuit(PauliOperator::parse("-X")) == XCircuit{{}, GateKind::E2});
    XCircuit x3 = build_x_circuit(PauliOperator::parse("XZ.XZ"));
    CHECK(x3.ds == std::vector<GateKind>{GateKind::D4});

    CHECK_THROWS_AS(build_x_circuit(PauliOperator::parse("Z.X")), std::invalid_argument);

    for (int n = 1; n <= 3; ++n) {
        PauliOperator bottom_x = PauliOperator::single(n, n - 1, kX);
        for (const PauliOperator& q : testing::all_paulis(n)) {
            if (!q.squares_to_identity() || q.is_identity_word() || !q.letter(0).x) continue;
            XCircuit x = build_x_circuit(q);
            Tableau t = Tableau::of_circuit(x_circuit_to_circuit(x, n));
            CHECK(t.apply(q) == bottom_x);
        }
    }
}

TEST_CASE("stage construction") {
    Stage trivial = build_stage(PauliOperator::parse("Z"), PauliOperator::parse("X"));
    CHECK(trivial.z == ZCircuit{0, GateKind::A1, {}, GateKind::C1});
    CHECK(trivial.x == XCircuit{{}, GateKind::E1});

    CHECK_THROWS_AS(build_stage(PauliOperator::parse("Z.Z"), PauliOperator::parse("Z.I")),
                    std::invalid_argument);

    for (int n = 2; n <= 3; ++n) {
        PauliOperator bottom_z = PauliOperator::single(n, n - 1, kZ);
        PauliOperator bottom_x = PauliOperator::single(n, n - 1, kX);
        auto ps = testing::all_paulis(n);
        int checked = 0;
        for (const PauliOperator& p : ps) {
            if (!p.squares_to_identity() || p.is_identity_word()) continue;
            for (const PauliOperator& q : ps) {
                if (!q.squares_to_identity() || q.is_identity_word()) continue;
                if (PauliOperator::commutes(p, q)) continue;
                if (++checked % 7) continue;  // sample; the acceptance suite is exhaustive
                Stage st = build_stage(p, q);
                Tableau t = Tableau::of_circuit(stage_to_circuit(st, n));
                CHECK(t.apply(p) == bottom_z);
                CHECK(t.apply(q) == bottom_x);
            }
        }
    }
}

TEST_CASE("identity normal form and flattening") {
    NormalForm id1 = identity_normal_form(1);
    Circuit flat = nf_to_circuit(id1);
    CHECK(flat.gates == std::vector<Gate>{Gate{GateKind::A1, 0}, Gate{GateKind::C1, 0},
                                          Gate{GateKind::E1, 0}});
    CHECK(is_normal(flat));
    CHECK_FALSE(is_normal(parse_circuit("qubits 1\nH 0\n")));

    NormalForm id3 = identity_normal_form(3);
    validate_normal_form(id3);
    CHECK(fingerprint(nf_to_circuit(id3)) == fingerprint(parse_circuit("qubits 3\n")));

    // Recognizer round trip on random synthesized forms.
    std::mt19937 rng(41);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 14);
            NormalForm nf = synthesize(Tableau::of_circuit(c), &c);
            auto parsed = parse_normal(nf_to_circuit(nf));
            REQUIRE(parsed.has_value());
            CHECK(*parsed == nf);
        }
    }
}

TEST_CASE("synthesis") {
    NormalForm id = synthesize(Tableau::identity(1));
    CHECK(id == identity_normal_form(1));

    Circuit mh = parse_circuit("qubits 1\nMINUS1\nH 0\n");
    NormalForm nf = synthesize(Tableau::of_circuit(mh), &mh);
    CHECK(nf.sign == -1);
    CHECK(fingerprint(nf_to_circuit(nf)) == fingerprint(mh));

    // n = 0: only the scalars.
    Circuit scalar0;
    scalar0.n_qubits = 0;
    scalar0.push(Gate{GateKind::MinusOne});
    NormalForm nf0 = synthesize(Tableau::of_circuit(scalar0), &scalar0);
    CHECK(nf0.n == 0);
    CHECK(nf0.sign == -1);

    CHECK_THROWS_AS(
        synthesize(Tableau::from_images({PauliOperator::parse("XZ")}, {PauliOperator::parse("X")})),
        std::invalid_argument);
}

TEST_CASE("synthesis is correct and idempotent") {
    // Exhaustive over single-gate circuits at n <= 2.
    for (int n = 1; n <= 2; ++n) {
        std::vector<Gate> gens{Gate{GateKind::MinusOne}, Gate{GateKind::H, 0},
                               Gate{GateKind::Z, 0}, Gate{GateKind::X, 0}};
        if (n == 2) {
            for (GateKind k : {GateKind::H, GateKind::Z, GateKind::X}) gens.push_back(Gate{k, 1});
            gens.push_back(Gate{GateKind::CZ, 0, 1});
            gens.push_back(Gate{GateKind::CZ, 1, 0});
            gens.push_back(Gate{GateKind::CXZ, 0, 1});
            gens.push_back(Gate{GateKind::CXZ, 1, 0});
        }
        for (const Gate& g : gens) {
            Circuit c;
            c.n_qubits = n;
            c.push(g);
            NormalForm nf = synthesize(Tableau::of_circuit(c), &c);
            CHECK(fingerprint(nf_to_circuit(nf)) == fingerprint(c));
        }
    }
    // Randomized up to n = 4, with idempotence.
    std::mt19937 rng(43);
    for (int n = 1; n <= 4; ++n) {
        for (int rep = 0; rep < 25; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 20);
            NormalForm nf = synthesize(Tableau::of_circuit(c), &c);
            Circuit flat = nf_to_circuit(nf);
            CHECK(fingerprint(flat) == fingerprint(c));
            NormalForm again = synthesize(Tableau::of_circuit(flat), &flat);
            CHECK(again == nf);
        }
    }
}

TEST_CASE("idempotence over sampled enumerated forms") {
    // Deterministically sample the n = 2 stream instead of drawing random
    // stage tuples.
    uint64_t ordinal = 0;
    enumerate_normal_forms(2, [&](const NormalForm& nf) {
        if (ordinal++ % 97) return;
        Circuit flat = nf_to_circuit(nf);
        CHECK(synthesize(Tableau::of_circuit(flat), &flat) == nf);
    });
}

namespace {

// Uniform random valid normal form, by rejection on the ladder-end color.
NormalForm random_normal_form(std::mt19937& rng, int n) {
    NormalForm nf;
    nf.n = n;
    nf.sign = rng() % 2 ? +1 : -1;
    for (int k = n; k >= 1; --k) {
        Stage st;
        while (true) {
            st.z.bs.clear();
            st.z.start_wire = static_cast<int>(rng() % k);
            st.z.a = std::array{GateKind::A1, GateKind::A2, GateKind::A3}[rng() % 3];
            WireColor track = signature(st.z.a).out[0];
            for (int j = 0; j < st.z.start_wire; ++j) {
                GateKind b = track == WireColor::SimpleT
                                 ? std::array{GateKind::B1, GateKind::B2, GateKind::B3,
                                              GateKind::B4}[rng() % 4]
                                 : std::array{GateKind::B5, GateKind::B6, GateKind::B7,
                                              GateKind::B8}[rng() % 4];
                st.z.bs.push_back(b);
                track = signature(b).out[0];
            }
            if (track == WireColor::SimpleT) break;
        }
        st.z.c = rng() % 2 ? GateKind::C1 : GateKind::C2;
        st.x.ds.clear();
        for (int j = 0; j + 1 < k; ++j) {
            st.x.ds.push_back(
                std::array{GateKind::D1, GateKind::D2, GateKind::D3, GateKind::D4}[rng() % 4]);
        }
        st.x.e = rng() % 2 ? GateKind::E1 : GateKind::E2;
        nf.stages.push_back(std::move(st));
    }
    validate_normal_form(nf);
    return nf;
}

}  // namespace

TEST_CASE("idempotence over 1000 random normal forms up to n = 4") {
    std::mt19937 rng(107);
    for (int rep = 0; rep < 1000; ++rep) {
        int n = 1 + static_cast<int>(rng() % 4);
        NormalForm nf = random_normal_form(rng, n);
        Circuit flat = nf_to_circuit(nf);
        CHECK(synthesize(Tableau::of_circuit(flat), &flat) == nf);
    }
}

TEST_CASE("every enumerated form at n = 2 type-checks") {
    enumerate_normal_forms(2, [&](const NormalForm& nf) {
        CHECK(try_type_check(nf_to_circuit(nf)).has_value());
    });
}

TEST_CASE("json rendering") {
    CHECK(normal_form_to_json(identity_normal_form(1)) ==
          R"({"n":1,"sign":1,"stages":[{"x":{"ds":[],"e":"E1"},"z":{"a":"A1","bs":[],"c":"C1","m":0}}]})");
    NormalForm nf = identity_normal_form(2);
    nf.sign = -1;
    CHECK(normal_form_to_json(nf) ==
          R"({"n":2,"sign":-1,"stages":[{"x":{"ds":["D1"],"e":"E1"},"z":{"a":"A1","bs":["B1"],"c":"C1","m":1}},{"x":{"ds":[],"e":"E1"},"z":{"a":"A1","bs":[],"c":"C1","m":0}}]})");
}
