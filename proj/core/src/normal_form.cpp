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

#include "rstab/normal_form.hpp"

#include <array>
#include <stdexcept>

#include "json.hpp"

namespace rstab {

namespace {

constexpr std::array<GateKind, 3> kAKinds = {GateKind::A1, GateKind::A2, GateKind::A3};
constexpr std::array<GateKind, 4> kBGreen = {GateKind::B1, GateKind::B2, GateKind::B3,
                                             GateKind::B4};
constexpr std::array<GateKind, 4> kBRed = {GateKind::B5, GateKind::B6, GateKind::B7, GateKind::B8};
constexpr std::array<GateKind, 2> kCKinds = {GateKind::C1, GateKind::C2};
constexpr std::array<GateKind, 4> kDKinds = {GateKind::D1, GateKind::D2, GateKind::D3,
                                             GateKind::D4};
constexpr std::array<GateKind, 2> kEKinds = {GateKind::E1, GateKind::E2};

bool in_range(GateKind k, GateKind lo, GateKind hi) {
    return static_cast<uint8_t>(k) >= static_cast<uint8_t>(lo) &&
           static_cast<uint8_t>(k) <= static_cast<uint8_t>(hi);
}

// The conjugation action of a lone generator gate on its own wires (1 or 2).
const Tableau& local_tableau(GateKind kind) {
    static std::array<std::optional<Tableau>, 25> cache;
    auto& slot = cache[static_cast<uint8_t>(kind)];
    if (!slot) {
        slot = Tableau::of_gate(Gate{kind, 0, 1}, gate_arity(kind));
    }
    return *slot;
}

PauliLetter track_letter(WireColor c) {
    if (c == WireColor::SimpleT) return kZ;
    if (c == WireColor::DoubleT) return kXZ;
    throw std::logic_error("track_letter: plain wire carries no track");
}

// Unsigned-letter selection: the unique candidate mapping `from`'s letters to
// an image accepted by `target_ok`.
template <typename Candidates, typename Pred>
GateKind select_by_letters(const Candidates& candidates, const PauliOperator& from,
                           Pred target_ok, const char* what) {
    std::optional<GateKind> found;
    for (GateKind cand : candidates) {
        PauliOperator img = local_tableau(cand).apply(from);
        if (!target_ok(cand, img.letters())) continue;
        if (found) {
            throw std::logic_error(std::string("select_generator: multiple matches for ") + what);
        }
        found = cand;
    }
    if (!found) {
        throw std::logic_error(std::string("select_generator: no match for ") + what);
    }
    return *found;
}

}  // namespace

void validate_normal_form(const NormalForm& nf) {
    if (nf.n < 0) throw std::invalid_argument("normal form: negative n");
    if (nf.sign != 1 && nf.sign != -1) throw std::invalid_argument("normal form: bad sign");
    if (nf.stages.size() != static_cast<size_t>(nf.n)) {
        throw std::invalid_argument("normal form: stage count must equal n");
    }
    for (size_t s = 0; s < nf.stages.size(); ++s) {
        int k = nf.n - static_cast<int>(s);  // wires of this stage
        const Stage& st = nf.stages[s];
        if (st.z.start_wire < 0 || st.z.start_wire >= k) {
            throw std::invalid_argument("normal form: start_wire out of range");
        }
        if (!in_range(st.z.a, GateKind::A1, GateKind::A3) ||
            !in_range(st.z.c, GateKind::C1, GateKind::C2) ||
            !in_range(st.x.e, GateKind::E1, GateKind::E2)) {
            throw std::invalid_argument("normal form: bad generator kind");
        }
        if (st.z.bs.size() != static_cast<size_t>(st.z.start_wire)) {
            throw std::invalid_argument("normal form: B rung count must equal start_wire");
        }
        if (st.x.ds.size() != static_cast<size_t>(k - 1)) {
            throw std::invalid_argument("normal form: D rung count must equal stage wires - 1");
        }
        WireColor track = signature(st.z.a).out[0];
        int swaps = 0;
        for (GateKind b : st.z.bs) {
            if (!in_range(b, GateKind::B1, GateKind::B8)) {
                throw std::invalid_argument("normal form: bad B kind");
            }
            if (signature(b).in[1] != track) {
                throw std::invalid_argument("normal form: B rung input color mismatch");
            }
            if (b == GateKind::B4 || b == GateKind::B8) ++swaps;
            track = signature(b).out[0];
        }
        if (track != WireColor::SimpleT) {
            throw std::invalid_argument("normal form: ladder must end on a simple wire");
        }
        bool a3 = st.z.a == GateKind::A3;
        if ((swaps % 2 == 0) == a3) {
            throw std::invalid_argument("normal form: color-swap parity violated");
        }
        for (GateKind d : st.x.ds) {
            if (!in_range(d, GateKind::D1, GateKind::D4)) {
                throw std::invalid_argument("normal form: bad D kind");
            }
        }
    }
}

NormalForm identity_normal_form(int n) {
    NormalForm nf;
    nf.n = n;
    nf.sign = +1;
    for (int k = n; k >= 1; --k) {
        Stage st;
        st.z.start_wire = k - 1;
        st.z.a = GateKind::A1;
        st.z.bs.assign(k - 1, GateKind::B1);
        st.z.c = GateKind::C1;
        st.x.ds.assign(k - 1, GateKind::D1);
        st.x.e = GateKind::E1;
        nf.stages.push_back(std::move(st));
    }
    return nf;
}

Circuit z_circuit_to_circuit(const ZCircuit& z, int n_wires) {
    Circuit c;
    c.n_qubits = n_wires;
    c.push(Gate{z.a, z.start_wire});
    for (size_t j = 0; j < z.bs.size(); ++j) {
        c.push(Gate{z.bs[j], z.start_wire - 1 - static_cast<int>(j)});
    }
    c.push(Gate{z.c, 0});
    return c;
}

Circuit x_circuit_to_circuit(const XCircuit& x, int n_wires) {
    Circuit c;
    c.n_qubits = n_wires;
    for (size_t t = 0; t < x.ds.size(); ++t) c.push(Gate{x.ds[t], static_cast<int>(t)});
    c.push(Gate{x.e, static_cast<int>(x.ds.size())});
    return c;
}

Circuit stage_to_circuit(const Stage& st, int n_wires) {
    Circuit c = z_circuit_to_circuit(st.z, n_wires);
    for (const Gate& g : x_circuit_to_circuit(st.x, n_wires).gates) c.push(g);
    return c;
}

Circuit nf_to_circuit(const NormalForm& nf) {
    validate_normal_form(nf);
    Circuit c;
    c.n_qubits = nf.n;
    for (const Stage& st : nf.stages) {
        int k = nf.n - static_cast<int>(&st - nf.stages.data());
        for (const Gate& g : stage_to_circuit(st, k).gates) c.push(g);
    }
    if (nf.sign < 0) c.push(Gate{GateKind::MinusOne});
    return c;
}

std::optional<NormalForm> parse_normal(const Circuit& c) {
    NormalForm nf;
    nf.n = c.n_qubits;
    size_t pos = 0;
    const auto& gs = c.gates;
    auto next_is = [&](GateKind lo, GateKind hi) {
        return pos < gs.size() && in_range(gs[pos].kind, lo, hi);
    };
    for (int k = c.n_qubits; k >= 1; --k) {
        Stage st;
        if (!next_is(GateKind::A1, GateKind::A3)) return std::nullopt;
        st.z.a = gs[pos].kind;
        st.z.start_wire = gs[pos].q;
        if (st.z.start_wire < 0 || st.z.start_wire >= k) return std::nullopt;
        ++pos;
        for (int w = st.z.start_wire - 1; w >= 0; --w) {
            if (!next_is(GateKind::B1, GateKind::B8) || gs[pos].q != w) return std::nullopt;
            st.z.bs.push_back(gs[pos].kind);
            ++pos;
        }
        if (!next_is(GateKind::C1, GateKind::C2) || gs[pos].q != 0) return std::nullopt;
        st.z.c = gs[pos].kind;
        ++pos;
        for (int t = 0; t < k - 1; ++t) {
            if (!next_is(GateKind::D1, GateKind::D4) || gs[pos].q != t) return std::nullopt;
            st.x.ds.push_back(gs[pos].kind);
            ++pos;
        }
        if (!next_is(GateKind::E1, GateKind::E2) || gs[pos].q != k - 1) return std::nullopt;
        st.x.e = gs[pos].kind;
        ++pos;
        nf.stages.push_back(std::move(st));
    }
    if (pos < gs.size() && gs[pos].kind == GateKind::MinusOne) {
        nf.sign = -1;
        ++pos;
    }
    if (pos != gs.size()) return std::nullopt;
    try {
        validate_normal_form(nf);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    if (!try_type_check(nf_to_circuit(nf))) return std::nullopt;
    return nf;
}

bool is_normal(const Circuit& c) {
    return parse_normal(c).has_value();
}

GateKind select_generator(char kind, const std::vector<WireColor>& in_colors,
                          const PauliOperator& from, const PauliOperator& to) {
    std::vector<GateKind> candidates;
    switch (kind) {
        case 'A':
            candidates.assign(kAKinds.begin(), kAKinds.end());
            break;
        case 'B':
            candidates.assign(kBGreen.begin(), kBGreen.end());
            candidates.insert(candidates.end(), kBRed.begin(), kBRed.end());
            break;
        case 'C':
            candidates.assign(kCKinds.begin(), kCKinds.end());
            break;
        case 'D':
            candidates.assign(kDKinds.begin(), kDKinds.end());
            break;
        case 'E':
            candidates.assign(kEKinds.begin(), kEKinds.end());
            break;
        default:
            throw std::invalid_argument("select_generator: kind must be one of A..E");
    }
    std::optional<GateKind> found;
    for (GateKind cand : candidates) {
        if (signature(cand).in != in_colors) continue;
        if (!(local_tableau(cand).apply(from) == to)) continue;
        if (found) throw std::logic_error("select_generator: multiple matches");
        found = cand;
    }
    if (!found) throw std::logic_error("select_generator: no match");
    return *found;
}

ZCircuit build_z_circuit(const PauliOperator& p) {
    if (!p.squares_to_identity()) {
        throw std::invalid_argument("build_z_circuit: operand must square to +I");
    }
    if (p.is_identity_word()) {
        throw std::invalid_argument("build_z_circuit: operand must differ from +-I");
    }
    const size_t n = p.size();
    size_t m = 0;
    for (size_t i = 0; i < n; ++i) {
        if (!(p.letter(i) == kI)) m = i;
    }

    ZCircuit z;
    z.start_wire = static_cast<int>(m);
    PauliOperator start(+1, {p.letter(m)});
    z.a = select_by_letters(
        kAKinds, start,
        [&](GateKind cand, const std::vector<PauliLetter>& img) {
            return img[0] == track_letter(signature(cand).out[0]);
        },
        "A");
    WireColor track = signature(z.a).out[0];

    for (int w = static_cast<int>(m) - 1; w >= 0; --w) {
        PauliOperator window(+1, {p.letter(w), track_letter(track)});
        const auto& candidates = track == WireColor::SimpleT ? kBGreen : kBRed;
        GateKind b = select_by_letters(
            candidates, window,
            [&](GateKind cand, const std::vector<PauliLetter>& img) {
                return img[0] == track_letter(signature(cand).out[0]) && img[1] == kI;
            },
            "B");
        z.bs.push_back(b);
        track = signature(b).out[0];
    }
    if (track != WireColor::SimpleT) {
        throw std::logic_error("build_z_circuit: ladder ended on a double wire");
    }

    // The letter walk above ignored signs; the C gate absorbs the actual one.
    Circuit prefix;
    prefix.n_qubits = static_cast<int>(n);
    prefix.push(Gate{z.a, z.start_wire});
    for (size_t j = 0; j < z.bs.size(); ++j) {
        prefix.push(Gate{z.bs[j], z.start_wire - 1 - static_cast<int>(j)});
    }
    PauliOperator img = Tableau::of_circuit(prefix).apply(p);
    if (!(img.letters() == PauliOperator::single(n, 0, kZ).letters())) {
        throw std::logic_error("build_z_circuit: ladder image is not Z on the top wire");
    }
    z.c = img.sign() > 0 ? GateKind::C1 : GateKind::C2;
    return z;
}

XCircuit build_x_circuit(const PauliOperator& q) {
    if (!q.squares_to_identity()) {
        throw std::invalid_argument("build_x_circuit: operand must square to +I");
    }
    if (q.is_identity_word()) {
        throw std::invalid_argument("build_x_circuit: operand must differ from +-I");
    }
    const size_t n = q.size();
    if (!q.letter(0).x) {
        throw std::invalid_argument(
            "build_x_circuit: operand must anticommute with Z on the top wire");
    }

    XCircuit x;
    PauliLetter track = q.letter(0);
    for (size_t t = 0; t + 1 < n; ++t) {
        PauliOperator window(+1, {track, q.letter(t + 1)});
        PauliLetter next{};
        GateKind d = select_by_letters(
            kDKinds, window,
            [&](GateKind, const std::vector<PauliLetter>& img) {
                if (!(img[0] == kI)) return false;
                if (!(img[1] == kX) && !(img[1] == kXZ)) return false;
                next = img[1];
                return true;
            },
            "D");
        x.ds.push_back(d);
        track = next;
    }
    if (!(track == kX)) {
        throw std::logic_error("build_x_circuit: ladder ended off the X track");
    }

    Circuit prefix;
    prefix.n_qubits = static_cast<int>(n);
    for (size_t t = 0; t < x.ds.size(); ++t) prefix.push(Gate{x.ds[t], static_cast<int>(t)});
    PauliOperator img = Tableau::of_circuit(prefix).apply(q);
    if (!(img.letters() == PauliOperator::single(n, n - 1, kX).letters())) {
        throw std::logic_error("build_x_circuit: ladder image is not X on the bottom wire");
    }
    x.e = img.sign() > 0 ? GateKind::E1 : GateKind::E2;
    return x;
}

Stage build_stage(const PauliOperator& p, const PauliOperator& q) {
    if (PauliOperator::commutes(p, q)) {
        throw std::invalid_argument("build_stage: operands must anticommute");
    }
    Stage st;
    st.z = build_z_circuit(p);
    Circuit lc = z_circuit_to_circuit(st.z, static_cast<int>(p.size()));
    PauliOperator q2 = Tableau::of_circuit(lc).apply(q);
    st.x = build_x_circuit(q2);
    return st;
}

namespace {

// Drops the bottom wire of an automorphism that fixes it and acts trivially
// on it from above.
Tableau restrict_to_top(const Tableau& t) {
    const size_t n = t.n();
    const size_t last = n - 1;
    if (!(t.z_image(last) == PauliOperator::single(n, last, kZ)) ||
        !(t.x_image(last) == PauliOperator::single(n, last, kX))) {
        throw std::logic_error("synthesize: stage did not fix the bottom wire");
    }
    auto truncate = [&](const PauliOperator& p) {
        if (!(p.letter(last) == kI)) {
            throw std::logic_error("synthesize: residual action touches the bottom wire");
        }
        std::vector<PauliLetter> ls(p.letters().begin(), p.letters().end() - 1);
        return PauliOperator(p.sign(), std::move(ls));
    };
    std::vector<PauliOperator> zs, xs;
    for (size_t w = 0; w + 1 < n; ++w) {
        zs.push_back(truncate(t.z_image(w)));
        xs.push_back(truncate(t.x_image(w)));
    }
    return Tableau::from_images(std::move(zs), std::move(xs));
}

}  // namespace

NormalForm synthesize(const Tableau& t, const Circuit* reference) {
    if (!t.is_pauli_automorphism()) {
        throw std::invalid_argument("synthesize: tableau is not a Pauli automorphism");
    }
    NormalForm nf;
    nf.n = static_cast<int>(t.n());
    nf.sign = +1;
    Tableau phi = t;
    for (size_t k = t.n(); k >= 1; --k) {
        Tableau phi_inv = phi.inverse();
        PauliOperator p = phi_inv.apply(PauliOperator::single(k, k - 1, kZ));
        PauliOperator q = phi_inv.apply(PauliOperator::single(k, k - 1, kX));
        Stage st = build_stage(p, q);
        Circuit ml = stage_to_circuit(st, static_cast<int>(k));
        phi = phi.compose(Tableau::of_circuit(ml).inverse());
        nf.stages.push_back(std::move(st));
        if (k > 1) phi = restrict_to_top(phi);
    }
    if (reference) {
        ExactVector want = apply_to_basis_state(*reference, 0);
        ExactVector got = apply_to_basis_state(nf_to_circuit(nf), 0);
        if (got != want) {
            bool negated = true;
            for (size_t i = 0; i < want.size(); ++i) {
                if (!(got[i] == -want[i])) {
                    negated = false;
                    break;
                }
            }
            if (!negated) {
                throw std::invalid_argument(
                    "synthesize: reference circuit does not realize the tableau");
            }
            nf.sign = -1;
        }
    }
    return nf;
}

std::string normal_form_to_json(const NormalForm& nf) {
    validate_normal_form(nf);
    nlohmann::json j;
    j["n"] = nf.n;
    j["sign"] = nf.sign;
    j["stages"] = nlohmann::json::array();
    for (const Stage& st : nf.stages) {
        nlohmann::json js;
        js["z"]["m"] = st.z.start_wire;
        js["z"]["a"] = gate_kind_name(st.z.a);
        js["z"]["bs"] = nlohmann::json::array();
        for (GateKind b : st.z.bs) js["z"]["bs"].push_back(gate_kind_name(b));
        js["z"]["c"] = gate_kind_name(st.z.c);
        js["x"]["ds"] = nlohmann::json::array();
        for (GateKind d : st.x.ds) js["x"]["ds"].push_back(gate_kind_name(d));
        js["x"]["e"] = gate_kind_name(st.x.e);
        j["stages"].push_back(std::move(js));
    }
    return j.dump();
}

}  // namespace rstab
