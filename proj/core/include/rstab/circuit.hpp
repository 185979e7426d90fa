// Copyright 2026 The rstab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSTAB_CIRCUIT_HPP
#define RSTAB_CIRCUIT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rstab/gates.hpp"

namespace rstab {

/// An ordered gate list; gates listed first are applied first to states.
struct Circuit {
    int n_qubits = 0;
    std::vector<Gate> gates;

    void push(Gate g) { gates.push_back(g); }
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Checks wire bounds, distinctness of CZ/CXZ legs and adjacency of pair
/// gates. Throws std::invalid_argument on violation.
void validate_circuit(const Circuit& c);

/// Expands derived and generator gates into primitives (recursively; the
/// output contains only MINUS1/H/Z/CZ).
Circuit expand_all(const Circuit& c);

struct TypeError : std::runtime_error {
    TypeError(size_t gate_index, int wire, WireColor expected, WireColor found);
    size_t gate_index;
    int wire;
    WireColor expected;
    WireColor found;
};

/// A circuit together with the wire coloring between consecutive gates.
/// colors[k] is the coloring before gate k; colors[gates.size()] is the
/// output coloring. Wires start Plain.
struct TypedCircuit {
    Circuit circuit;
    std::vector<std::vector<WireColor>> colors;
};

/// Forward color pass from all-Plain inputs; fails at the first signature
/// mismatch. The non-throwing variant reports the error instead.
TypedCircuit type_check(const Circuit& c);
std::optional<TypedCircuit> try_type_check(const Circuit& c, TypeError* error = nullptr);

/// Circuit text format (.rsc): '#' comments, first line "qubits N", then one
/// gate per line ("H 0", "CZ 0 1", "B4 2", "MINUS1", ...). Throws
/// std::invalid_argument with line information on malformed input.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& c);

Circuit read_circuit_file(const std::string& path);
void write_circuit_file(const std::string& path, const Circuit& c);

}  // namespace rstab

#endif
