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

#include "rstab/circuit.hpp"

#include <fstream>
#include <sstream>

namespace rstab {

void validate_circuit(const Circuit& c) {
    if (c.n_qubits < 0) throw std::invalid_argument("negative qubit count");
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        for (int w : gate_wires(g)) {
            if (w < 0 || w >= c.n_qubits) {
                throw std::invalid_argument("gate " + std::to_string(i) + " (" +
                                            gate_kind_name(g.kind) + ") wire " +
                                            std::to_string(w) + " out of range");
            }
        }
        if ((g.kind == GateKind::CZ || g.kind == GateKind::CXZ) && g.q == g.r) {
            throw std::invalid_argument("gate " + std::to_string(i) + ": wires must be distinct");
        }
    }
}

Circuit expand_all(const Circuit& c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    for (const Gate& g : c.gates) {
        if (is_primitive_gate(g.kind)) {
            out.push(g);
            continue;
        }
        for (const Gate& e : expand(g)) {
            // X and CXZ expand via H/Z/CZ directly; generator gates too.
            if (is_primitive_gate(e.kind)) {
                out.push(e);
            } else {
                for (const Gate& ee : expand(e)) out.push(ee);
            }
        }
    }
    return out;
}

TypeError::TypeError(size_t gate_index, int wire, WireColor expected, WireColor found)
    : std::runtime_error("type error at gate " + std::to_string(gate_index) + ", wire " +
                         std::to_string(wire) + ": expected " +
                         std::string(1, wire_color_code(expected)) + ", found " +
                         std::string(1, wire_color_code(found))),
      gate_index(gate_index),
      wire(wire),
      expected(expected),
      found(found) {}

std::optional<TypedCircuit> try_type_check(const Circuit& c, TypeError* error) {
    validate_circuit(c);
    TypedCircuit out;
    out.circuit = c;
    std::vector<WireColor> cur(c.n_qubits, WireColor::Plain);
    out.colors.push_back(cur);
    for (size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        GateSignature sig = signature(g.kind);
        std::vector<int> wires = gate_wires(g);
        for (size_t j = 0; j < wires.size(); ++j) {
            if (cur[wires[j]] != sig.in[j]) {
                if (error) *error = TypeError(i, wires[j], sig.in[j], cur[wires[j]]);
                return std::nullopt;
            }
        }
        for (size_t j = 0; j < wires.size(); ++j) cur[wires[j]] = sig.out[j];
        out.colors.push_back(cur);
    }
    return out;
}

TypedCircuit type_check(const Circuit& c) {
    TypeError err(0, 0, WireColor::Plain, WireColor::Plain);
    auto r = try_type_check(c, &err);
    if (!r) throw err;
    return std::move(*r);
}

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_header = false;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (!have_header) {
            if (tok != "qubits") fail("expected 'qubits N' header, got '" + tok + "'");
            if (!(ls >> c.n_qubits) || c.n_qubits < 0) fail("bad qubit count");
            have_header = true;
            continue;
        }
        Gate g{};
        try {
            g.kind = parse_gate_kind(tok);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        int arity = gate_arity(g.kind);
        int args_needed = (g.kind == GateKind::CZ || g.kind == GateKind::CXZ) ? 2
                          : arity == 0                                        ? 0
                                                                              : 1;
        if (args_needed >= 1 && !(ls >> g.q)) fail("missing wire for " + tok);
        if (args_needed == 2 && !(ls >> g.r)) fail("missing second wire for " + tok);
        std::string extra;
        if (ls >> extra) fail("trailing token '" + extra + "'");
        c.push(g);
    }
    if (!have_header) throw std::invalid_argument("missing 'qubits N' header");
    validate_circuit(c);
    return c;
}

std::string format_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.n_qubits) + "\n";
    for (const Gate& g : c.gates) {
        out += gate_kind_name(g.kind);
        int args = (g.kind == GateKind::CZ || g.kind == GateKind::CXZ) ? 2
                   : gate_arity(g.kind) == 0                           ? 0
                                                                       : 1;
        if (args >= 1) out += " " + std::to_string(g.q);
        if (args == 2) out += " " + std::to_string(g.r);
        out += "\n";
    }
    return out;
}

Circuit read_circuit_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_circuit(ss.str());
}

void write_circuit_file(const std::string& path, const Circuit& c) {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    f << format_circuit(c);
}

}  // namespace rstab
