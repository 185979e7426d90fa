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

#include "rstab/rewrite.hpp"

namespace rstab {

namespace {

struct Builder {
    Circuit c;
    explicit Builder(int n) { c.n_qubits = n; }
    Builder& m1() {
        c.push(Gate{GateKind::MinusOne});
        return *this;
    }
    Builder& h(int q) {
        c.push(Gate{GateKind::H, q});
        return *this;
    }
    Builder& z(int q) {
        c.push(Gate{GateKind::Z, q});
        return *this;
    }
    Builder& x(int q) {
        c.push(Gate{GateKind::X, q});
        return *this;
    }
    Builder& cz(int a, int b) {
        c.push(Gate{GateKind::CZ, a, b});
        return *this;
    }
    // Controlled-X over the primitive alphabet (H on the target leg).
    Builder& cx(int control, int target) {
        return h(target).cz(control, target).h(target);
    }
};

RelationPair rel(std::string name, Builder lhs, Builder rhs) {
    return RelationPair{std::move(name), std::move(lhs.c), std::move(rhs.c)};
}

}  // namespace

std::vector<RelationPair> reduced_relations() {
    std::vector<RelationPair> rels;
    rels.push_back(rel("R1", Builder(1).m1().m1(), Builder(1)));
    rels.push_back(rel("R2", Builder(1).z(0).z(0), Builder(1)));
    rels.push_back(rel("R3", Builder(1).h(0).h(0), Builder(1)));
    rels.push_back(
        rel("R4", Builder(1).z(0).h(0).z(0).h(0).z(0).h(0).z(0).h(0), Builder(1).m1()));
    rels.push_back(rel("R5", Builder(2).cz(0, 1).cz(0, 1), Builder(2)));
    rels.push_back(rel("R6", Builder(2).z(0).cz(0, 1), Builder(2).cz(0, 1).z(0)));
    rels.push_back(rel("R7", Builder(2).z(1).cz(0, 1), Builder(2).cz(0, 1).z(1)));
    rels.push_back(rel("R8", Builder(2).h(0).z(0).h(0).cz(0, 1),
                       Builder(2).cz(0, 1).h(0).z(0).z(1).h(0)));
    rels.push_back(rel("R9", Builder(2).h(1).z(1).h(1).cz(0, 1),
                       Builder(2).cz(0, 1).h(1).z(0).z(1).h(1)));
    rels.push_back(rel("R10", Builder(2).h(0).cz(0, 1).h(0).cz(0, 1),
                       Builder(2).cz(0, 1).h(0).cz(0, 1).h(0).z(1)));
    rels.push_back(rel("R11", Builder(2).h(1).cz(0, 1).h(1).cz(0, 1),
                       Builder(2).cz(0, 1).h(1).cz(0, 1).h(1).z(0)));
    rels.push_back(rel("R12",
                       Builder(2).h(1).cz(0, 1).h(0).h(1).cz(0, 1).h(0).h(1).cz(0, 1),
                       Builder(2).cz(0, 1).h(0).h(1).cz(0, 1).h(0).h(1).cz(0, 1).h(0)));
    rels.push_back(rel("R13", Builder(3).cz(0, 1).cz(1, 2), Builder(3).cz(1, 2).cz(0, 1)));
    rels.push_back(rel(
        "R14",
        Builder(3).h(2).cz(1, 2).h(1).h(2).cz(1, 2).h(1).cz(0, 1).h(1).cz(1, 2).h(1).h(2).cz(1, 2).h(
            2),
        Builder(3).h(0).cz(0, 1).h(0).h(1).cz(0, 1).h(1).cz(1, 2).h(1).cz(0, 1).h(0).h(1).cz(0, 1).h(
            0)));
    rels.push_back(
        rel("R15",
            Builder(3).cz(0, 1).h(0).h(1).cz(0, 1).h(0).h(1).cz(1, 2).cz(0, 1).h(0).h(1).cz(0, 1).h(
                0).h(1).cz(1, 2),
            Builder(3).cz(1, 2).h(0).h(1).cz(0, 1).h(0).h(1).cz(0, 1)));
    rels.push_back(
        rel("R16",
            Builder(3).cz(1, 2).h(1).h(2).cz(1, 2).h(1).h(2).cz(0, 1).cz(1, 2).h(1).h(2).cz(1, 2).h(
                1).h(2).cz(0, 1),
            Builder(3).cz(0, 1).h(1).h(2).cz(1, 2).h(1).h(2).cz(1, 2)));
    return rels;
}

std::vector<RelationPair> alternative_relations() {
    std::vector<RelationPair> rels;
    rels.push_back(rel("S1", Builder(1).m1().m1(), Builder(1)));
    rels.push_back(rel("S2", Builder(1).z(0).z(0), Builder(1)));
    rels.push_back(rel("S3", Builder(1).h(0).h(0), Builder(1)));
    rels.push_back(rel("S4", Builder(1).x(0), Builder(1).h(0).z(0).h(0)));
    rels.push_back(rel("S5", Builder(1).z(0).x(0).z(0).x(0), Builder(1).m1()));
    rels.push_back(rel("S6", Builder(2).cz(0, 1).cz(0, 1), Builder(2)));
    rels.push_back(rel("S7", Builder(2).cx(0, 1), Builder(2).h(1).cz(0, 1).h(1)));
    rels.push_back(rel("S8", Builder(2).cx(1, 0), Builder(2).h(0).cz(0, 1).h(0)));
    rels.push_back(rel("S9", Builder(2).z(0).cz(0, 1), Builder(2).cz(0, 1).z(0)));
    rels.push_back(rel("S10", Builder(2).z(1).cz(0, 1), Builder(2).cz(0, 1).z(1)));
    rels.push_back(rel("S11", Builder(2).x(0).cz(0, 1), Builder(2).cz(0, 1).x(0).z(1)));
    rels.push_back(rel("S12", Builder(2).x(1).cz(0, 1), Builder(2).cz(0, 1).x(1).z(0)));
    rels.push_back(
        rel("S13", Builder(2).cx(1, 0).cz(0, 1), Builder(2).cz(0, 1).cx(1, 0).z(1)));
    rels.push_back(rel("S14", Builder(3).cz(0, 1).cz(1, 2), Builder(3).cz(1, 2).cz(0, 1)));
    rels.push_back(
        rel("S15", Builder(2).cx(0, 1).cz(0, 1), Builder(2).cz(0, 1).cx(0, 1).z(0)));
    rels.push_back(rel("S16", Builder(2).h(1).cx(1, 0).cx(0, 1).cx(1, 0),
                       Builder(2).cx(0, 1).cx(1, 0).cx(0, 1).h(0)));
    rels.push_back(rel("S17",
                       Builder(3).cx(1, 2).cx(2, 1).cz(0, 1).cx(2, 1).cx(1, 2),
                       Builder(3).cx(1, 0).cx(0, 1).cz(1, 2).cx(0, 1).cx(1, 0)));
    rels.push_back(rel("S18",
                       Builder(3).cx(1, 0).cx(0, 1).cz(1, 2).cx(0, 1).cx(1, 0).cz(1, 2),
                       Builder(3).cx(0, 1).cz(1, 2).cx(0, 1)));
    rels.push_back(rel("S19",
                       Builder(3).cx(1, 2).cx(2, 1).cz(0, 1).cx(2, 1).cx(1, 2).cz(0, 1),
                       Builder(3).cx(2, 1).cz(0, 1).cx(2, 1)));
    return rels;
}

}  // namespace rstab
