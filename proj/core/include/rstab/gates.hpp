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

#ifndef RSTAB_GATES_HPP
#define RSTAB_GATES_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rstab {

// Gate alphabet. MinusOne/H/Z/CZ are the primitives; X and CXZ are derived
// shorthands; A..E are the generator gates normal forms are built from.
// Generator pair gates (B*, D*) act on adjacent wires (q, q+1), q the top wire.
enum class GateKind : uint8_t {
    MinusOne,
    H,
    Z,
    CZ,
    X,
    CXZ,
    A1,
    A2,
    A3,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    C1,
    C2,
    D1,
    D2,
    D3,
    D4,
    E1,
    E2,
};

struct Gate {
    GateKind kind;
    int q = -1;  // first wire (-1 for MinusOne)
    int r = -1;  // second wire for CZ/CXZ; implied q+1 for B/D pair gates

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Number of distinct wires the gate touches (0 for MinusOne).
int gate_arity(GateKind kind);
bool is_generator_gate(GateKind kind);     // A..E
bool is_primitive_gate(GateKind kind);     // MinusOne, H, Z, CZ
/// Wires the gate acts on, top wire first.
std::vector<int> gate_wires(const Gate& g);

std::string gate_kind_name(GateKind kind);
/// Parses a gate token such as "H", "CZ", "B4". Throws std::invalid_argument.
GateKind parse_gate_kind(std::string_view token);

/// One-step expansion into primitive gates, read left to right (first gate is
/// applied first to states). Primitives expand to themselves; A1/A3/C1/E1 are
/// empty wires. X(q) = [H q, Z q, H q]; CXZ(t,c) = [H t, CZ t c, H t, CZ t c].
std::vector<Gate> expand(const Gate& g);

enum class WireColor : uint8_t { Plain, SimpleT, DoubleT };

char wire_color_code(WireColor c);  // 'P' / 'S' / 'D'
WireColor parse_wire_color(char c);

/// Input/output wire colors of a typed gate, top wire first. Primitive and
/// derived gates are Plain throughout; the generator signatures are fixed data.
struct GateSignature {
    std::vector<WireColor> in;
    std::vector<WireColor> out;
};

GateSignature signature(GateKind kind);

}  // namespace rstab

#endif
