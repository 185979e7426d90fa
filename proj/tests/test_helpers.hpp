#ifndef RSTAB_TEST_HELPERS_HPP
#define RSTAB_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "rstab/circuit.hpp"
#include "rstab/pauli.hpp"

namespace rstab::testing {

/// All 2 * 4^n signed Pauli words on n wires.
inline std::vector<PauliOperator> all_paulis(int n) {
    std::vector<PauliOperator> out;
    size_t words = size_t{1} << (2 * n);
    for (int sign : {+1, -1}) {
        for (size_t code = 0; code < words; ++code) {
            std::vector<PauliLetter> letters(n);
            for (int w = 0; w < n; ++w) {
                letters[w].x = (code >> (2 * w)) & 1;
                letters[w].z = (code >> (2 * w + 1)) & 1;
            }
            out.emplace_back(sign, std::move(letters));
        }
    }
    return out;
}

/// Uniform random circuit over the primitive and derived alphabet;
/// two-wire gates may land on distant wires.
inline Circuit random_circuit(std::mt19937& rng, int n, int length,
                              bool include_derived = true) {
    Circuit c;
    c.n_qubits = n;
    std::uniform_int_distribution<int> wire(0, n - 1);
    std::uniform_int_distribution<int> pick(0, include_derived && n >= 2 ? 5 : 3);
    while (static_cast<int>(c.gates.size()) < length) {
        switch (pick(rng)) {
            case 0:
                c.push(Gate{GateKind::H, wire(rng)});
                break;
            case 1:
                c.push(Gate{GateKind::Z, wire(rng)});
                break;
            case 2:
                c.push(Gate{GateKind::MinusOne});
                break;
            case 3: {
                if (n < 2) {
                    c.push(Gate{GateKind::X, wire(rng)});
                    break;
                }
                int q = wire(rng), r = wire(rng);
                if (q == r) r = (q + 1) % n;
                c.push(Gate{GateKind::CZ, q, r});
                break;
            }
            case 4:
                c.push(Gate{GateKind::X, wire(rng)});
                break;
            default: {
                int q = wire(rng), r = wire(rng);
                if (q == r) r = (q + 1) % n;
                c.push(Gate{GateKind::CXZ, q, r});
                break;
            }
        }
    }
    return c;
}

}  // namespace rstab::testing

#endif
