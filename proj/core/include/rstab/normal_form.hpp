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

#ifndef RSTAB_NORMAL_FORM_HPP
#define RSTAB_NORMAL_FORM_HPP

#include <optional>
#include <vector>

#include "rstab/circuit.hpp"
#include "rstab/pauli.hpp"
#include "rstab/tableau.hpp"

namespace rstab {

/// The ladder that moves a Pauli to Z on the top wire: an A gate on
/// start_wire, one B rung per pair from (start_wire-1, start_wire) up to
/// (0, 1), and a C gate on wire 0. bs[0] is the lowest rung.
struct ZCircuit {
    int start_wire = 0;
    GateKind a = GateKind::A1;
    std::vector<GateKind> bs;
    GateKind c = GateKind::C1;

    friend bool operator==(const ZCircuit&, const ZCircuit&) = default;
};

/// The ladder that moves a Pauli to X on the bottom wire: one D rung per
/// pair (0,1) ... (k-2, k-1) and an E gate on the bottom wire.
struct XCircuit {
    std::vector<GateKind> ds;
    GateKind e = GateKind::E1;

    friend bool operator==(const XCircuit&, const XCircuit&) = default;
};

struct Stage {
    ZCircuit z;
    XCircuit x;

    friend bool operator==(const Stage&, const Stage&) = default;
};

/// Staged canonical circuit: stages[s] acts on the top (n - s) wires, so
/// stages[0] spans all wires and stages[n-1] only the top wire; the scalar
/// sign trails the gates.
struct NormalForm {
    int n = 0;
    std::vector<Stage> stages;
    int sign = +1;

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Structural validation: stage sizes, gate kinds, the color chain through
/// each Z ladder (even {B4,B8} count for A1/A2 starts, odd for A3). Throws
/// std::invalid_argument.
void validate_normal_form(const NormalForm& nf);

NormalForm identity_normal_form(int n);

Circuit z_circuit_to_circuit(const ZCircuit& z, int n_wires);
Circuit x_circuit_to_circuit(const XCircuit& x, int n_wires);
Circuit stage_to_circuit(const Stage& st, int n_wires);
Circuit nf_to_circuit(const NormalForm& nf);

/// Strict recognizer for flattened normal forms (stage grammar, wire
/// placement, typing, at most one trailing MINUS1).
std::optional<NormalForm> parse_normal(const Circuit& c);
bool is_normal(const Circuit& c);

/// The unique generator gate of the given kind ('A'..'E') and input colors
/// whose conjugation action maps `from` to `to` exactly (signs included).
/// Throws std::logic_error when zero or several candidates match.
GateKind select_generator(char kind, const std::vector<WireColor>& in_colors,
                          const PauliOperator& from, const PauliOperator& to);

/// Builds the unique Z-circuit with L * p = +(Z x I x ... x I).
/// Requires p*p = I and p != +-I.
ZCircuit build_z_circuit(const PauliOperator& p);

/// Builds the unique X-circuit with M * q = +(I x ... x I x X).
/// Requires q*q = I, q != +-I, and q anticommuting with Z x I x ... x I.
XCircuit build_x_circuit(const PauliOperator& q);

/// The unique stage with (ML) * p = I...I x Z and (ML) * q = I...I x X.
Stage build_stage(const PauliOperator& p, const PauliOperator& q);

/// Synthesizes the normal form realizing the automorphism t. When a
/// reference circuit is given the global sign is fixed so the fingerprints
/// agree; otherwise it defaults to +1.
NormalForm synthesize(const Tableau& t, const Circuit* reference = nullptr);

/// Canonically ordered JSON rendering of a normal form.
std::string normal_form_to_json(const NormalForm& nf);

}  // namespace rstab

#endif
