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

#include "rstab/gates.hpp"

#include <array>
#include <stdexcept>

namespace rstab {

namespace {

constexpr std::array<std::string_view, 25> kKindNames = {
    "MINUS1", "H",  "Z",  "CZ", "X",  "CXZ", "A1", "A2", "A3", "B1", "B2", "B3", "B4",
    "B5",     "B6", "B7", "B8", "C1", "C2",  "D1", "D2", "D3", "D4", "E1", "E2",
};

}  // namespace

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::MinusOne:
            return 0;
        case GateKind::H:
        case GateKind::Z:
        case GateKind::X:
        case GateKind::A1:
        case GateKind::A2:
        case GateKind::A3:
        case GateKind::C1:
        case GateKind::C2:
        case GateKind::E1:
        case GateKind::E2:
            return 1;
        default:
            return 2;
    }
}

bool is_generator_gate(GateKind kind) {
    return static_cast<uint8_t>(kind) >= static_cast<uint8_t>(GateKind::A1);
}

bool is_primitive_gate(GateKind kind) {
    return kind == GateKind::MinusOne || kind == GateKind::H || kind == GateKind::Z ||
           kind == GateKind::CZ;
}

std::vector<int> gate_wires(const Gate& g) {
    switch (gate_arity(g.kind)) {
        case 0:
            return {};
        case 1:
            return {g.q};
        default:
            if (g.kind == GateKind::CZ || g.kind == GateKind::CXZ) return {g.q, g.r};
            return {g.q, g.q + 1};
    }
}

std::string gate_kind_name(GateKind kind) {
    return std::string(kKindNames[static_cast<uint8_t>(kind)]);
}

GateKind parse_gate_kind(std::string_view token) {
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == token) return static_cast<GateKind>(i);
    }
    throw std::invalid_argument("unknown gate token: '" + std::string(token) + "'");
}

std::vector<Gate> expand(const Gate& g) {
    const int q = g.q;
    const int b = q + 1;  // bottom wire of a pair gate
    auto h = [](int w) { return Gate{GateKind::H, w}; };
    auto z = [](int w) { return Gate{GateKind::Z, w}; };
    auto cz = [](int a, int c) { return Gate{GateKind::CZ, a, c}; };
    switch (g.kind) {
        case GateKind::MinusOne:
        case GateKind::H:
        case GateKind::Z:
        case GateKind::CZ:
            return {g};
        case GateKind::X:
            return {h(q), z(q), h(q)};
        case GateKind::CXZ:
            return {h(q), cz(q, g.r), h(q), cz(q, g.r)};
        case GateKind::A1:
        case GateKind::A3:
        case GateKind::C1:
        case GateKind::E1:
            return {};
        case GateKind::A2:
            return {h(q)};
        case GateKind::C2:
            return {h(q), z(q), h(q)};
        case GateKind::E2:
            return {z(q)};
        case GateKind::B1:
        case GateKind::B5:
            return {h(b), cz(q, b), h(q), h(b), cz(q, b), h(q), h(b), cz(q, b)};
        case GateKind::B2:
        case GateKind::B6:
            return {cz(q, b), h(q), h(b), cz(q, b)};
        case GateKind::B3:
        case GateKind::B7:
            return {h(q), cz(q, b), h(q), h(b), cz(q, b)};
        case GateKind::B4:
        case GateKind::B8:
            return {h(b), cz(q, b), h(b), cz(q, b), h(q), h(b), cz(q, b)};
        case GateKind::D1:
            return {cz(q, b), h(q), h(b), cz(q, b), h(q), h(b), cz(q, b), h(b)};
        case GateKind::D2:
            return {h(q), cz(q, b), h(q), h(b), cz(q, b), h(b)};
        case GateKind::D3:
            return {h(q), h(b), cz(q, b), h(q), h(b), cz(q, b), h(b)};
        case GateKind::D4:
            return {h(q), cz(q, b), h(q), h(b), cz(q, b), h(b), cz(q, b)};
    }
    throw std::logic_error("unreachable");
}

char wire_color_code(WireColor c) {
    switch (c) {
        case WireColor::Plain:
            return 'P';
        case WireColor::SimpleT:
            return 'S';
        case WireColor::DoubleT:
            return 'D';
    }
    throw std::logic_error("unreachable");
}

WireColor parse_wire_color(char c) {
    switch (c) {
        case 'P':
            return WireColor::Plain;
        case 'S':
            return WireColor::SimpleT;
        case 'D':
            return WireColor::DoubleT;
        default:
            throw std::invalid_argument(std::string("bad wire color code: ") + c);
    }
}

GateSignature signature(GateKind kind) {
    using C = WireColor;
    auto sig1 = [](C in, C out) { return GateSignature{{in}, {out}}; };
    auto sig2 = [](C ti, C bi, C to, C bo) {
        return GateSignature{{ti, bi}, {to, bo}};
    };
    switch (kind) {
        case GateKind::A1:
        case GateKind::A2:
            return sig1(C::Plain, C::SimpleT);
        case GateKind::A3:
            return sig1(C::Plain, C::DoubleT);
        case GateKind::B1:
        case GateKind::B2:
        case GateKind::B3:
            return sig2(C::Plain, C::SimpleT, C::SimpleT, C::Plain);
        case GateKind::B4:
            return sig2(C::Plain, C::SimpleT, C::DoubleT, C::Plain);
        case GateKind::B5:
        case GateKind::B6:
        case GateKind::B7:
            return sig2(C::Plain, C::DoubleT, C::DoubleT, C::Plain);
        case GateKind::B8:
            return sig2(C::Plain, C::DoubleT, C::SimpleT, C::Plain);
        case GateKind::C1:
        case GateKind::C2:
            return sig1(C::SimpleT, C::Plain);
        default: {
            int a = gate_arity(kind);
            return GateSignature{std::vector<C>(a, C::Plain), std::vector<C>(a, C::Plain)};
        }
    }
}

}  // namespace rstab
