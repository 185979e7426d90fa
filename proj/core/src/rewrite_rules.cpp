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
//
// Rule derivation. Every left-hand side is a dirty gate about to cross the
// clean generator gate(s) ahead of it; the right-hand side is found by
// searching, for each admissible clean prefix, the shortest word of legally
// placed dirty gates whose product matches the remaining operator. The search
// runs as a breadth-first walk over bit-packed tableaux of the subgroup the
// legal dirty gates generate, so even the longest tails are found quickly and
// the result is the unique minimal candidate of the bounded grammar.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include "rstab/exact.hpp"
#include "rstab/rewrite.hpp"

namespace rstab {

namespace {

constexpr std::array<GateKind, 3> kA = {GateKind::A1, GateKind::A2, GateKind::A3};
constexpr std::array<GateKind, 4> kBGreen = {GateKind::B1, GateKind::B2, GateKind::B3,
                                             GateKind::B4};
constexpr std::array<GateKind, 4> kBRed = {GateKind::B5, GateKind::B6, GateKind::B7, GateKind::B8};
constexpr std::array<GateKind, 2> kC = {GateKind::C1, GateKind::C2};
constexpr std::array<GateKind, 4> kD = {GateKind::D1, GateKind::D2, GateKind::D3, GateKind::D4};
constexpr std::array<GateKind, 2> kE = {GateKind::E1, GateKind::E2};

WireColor a_out(GateKind a) {
    return signature(a).out[0];
}
WireColor b_in(GateKind b) {
    return signature(b).in[1];
}
WireColor b_out(GateKind b) {
    return signature(b).out[0];
}
const std::array<GateKind, 4>& b_group(WireColor in) {
    return in == WireColor::SimpleT ? kBGreen : kBRed;
}

// --- packed-tableau breadth-first tail search -------------------------------

// A tableau on w <= 3 wires packs into (2w)(2w+1) <= 42 bits: for each of the
// 2w generator images, 2 letter bits per wire then a sign bit.
struct PackedCodec {
    int w;
    int image_bits;  // 2w + 1

    uint64_t pack(const Tableau& t) const {
        uint64_t out = 0;
        int pos = 0;
        auto put = [&](const PauliOperator& p) {
            for (int i = 0; i < w; ++i) {
                out |= uint64_t{p.letter(i).x} << pos++;
                out |= uint64_t{p.letter(i).z} << pos++;
            }
            out |= uint64_t{p.sign() < 0} << pos++;
        };
        for (int i = 0; i < w; ++i) {
            put(t.z_image(i));
            put(t.x_image(i));
        }
        return out;
    }

    uint32_t pack_image(const PauliOperator& p) const {
        uint32_t out = 0;
        int pos = 0;
        for (int i = 0; i < w; ++i) {
            out |= uint32_t{p.letter(i).x} << pos++;
            out |= uint32_t{p.letter(i).z} << pos++;
        }
        out |= uint32_t{p.sign() < 0} << pos;
        return out;
    }

    PauliOperator unpack_image(uint32_t bits) const {
        std::vector<PauliLetter> letters(w);
        for (int i = 0; i < w; ++i) {
            letters[i].x = (bits >> (2 * i)) & 1;
            letters[i].z = (bits >> (2 * i + 1)) & 1;
        }
        return PauliOperator((bits >> (2 * w)) & 1 ? -1 : +1, std::move(letters));
    }
};

class TailSearcher {
  public:
    TailSearcher(int wires, std::vector<Gate> alphabet, size_t state_cap = 4'000'000)
        : codec_{wires, 2 * wires + 1}, alphabet_(std::move(alphabet)) {
        // Per-generator action table on packed single images.
        const uint32_t image_count = uint32_t{1} << codec_.image_bits;
        tables_.resize(alphabet_.size());
        for (size_t gi = 0; gi < alphabet_.size(); ++gi) {
            Tableau gt = Tableau::of_gate(alphabet_[gi], wires);
            tables_[gi].resize(image_count);
            for (uint32_t img = 0; img < image_count; ++img) {
                tables_[gi][img] = codec_.pack_image(gt.apply(codec_.unpack_image(img)));
            }
        }

        uint64_t start = codec_.pack(Tableau::identity(wires));
        index_.reserve(1 << 16);
        index_.emplace(start, 0);
        nodes_.push_back(Node{start, 0, 0});
        size_t head = 0;
        while (head < nodes_.size()) {
            uint64_t state = nodes_[head].state;
            for (size_t gi = 0; gi < alphabet_.size(); ++gi) {
                uint64_t next = transition(state, gi);
                if (index_.emplace(next, static_cast<uint32_t>(nodes_.size())).second) {
                    nodes_.push_back(
                        Node{next, static_cast<uint32_t>(head), static_cast<uint8_t>(gi)});
                    if (nodes_.size() > state_cap) {
                        throw NoCandidateError("tail search exceeded the state cap");
                    }
                }
            }
            ++head;
        }
    }

    /// Shortest word whose tableau equals the target's (up to the global
    /// scalar, which the caller resolves separately).
    std::optional<std::vector<Gate>> find(const Tableau& target) const {
        auto it = index_.find(codec_.pack(target));
        if (it == index_.end()) return std::nullopt;
        std::vector<Gate> word;
        uint32_t at = it->second;
        while (at != 0) {
            word.push_back(alphabet_[nodes_[at].gate]);
            at = nodes_[at].parent;
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

  private:
    struct Node {
        uint64_t state;
        uint32_t parent;
        uint8_t gate;
    };

    uint64_t transition(uint64_t state, size_t gi) const {
        uint64_t out = 0;
        const uint64_t mask = (uint64_t{1} << codec_.image_bits) - 1;
        for (int img = 0; img < 2 * codec_.w; ++img) {
            uint64_t bits = (state >> (img * codec_.image_bits)) & mask;
            out |= uint64_t{tables_[gi][bits]} << (img * codec_.image_bits);
        }
        return out;
    }

    PackedCodec codec_;
    std::vector<Gate> alphabet_;
    std::vector<std::vector<uint32_t>> tables_;
    std::unordered_map<uint64_t, uint32_t> index_;
    std::vector<Node> nodes_;
};

std::string alphabet_key(int wires, const std::vector<Gate>& alphabet) {
    std::string key = std::to_string(wires);
    for (const Gate& g : alphabet) {
        key += '|';
        key += gate_kind_name(g.kind) + std::to_string(g.q) + "," + std::to_string(g.r);
    }
    return key;
}

TailSearcher& searcher_for(int wires, const std::vector<Gate>& alphabet) {
    static std::map<std::string, std::unique_ptr<TailSearcher>> cache;
    std::string key = alphabet_key(wires, alphabet);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<TailSearcher>(wires, alphabet)).first;
    }
    return *it->second;
}

// --- window catalog ----------------------------------------------------------

struct WindowSpec {
    int wires = 1;
    std::vector<WireColor> colors;       // entering colors
    std::vector<int> labels;             // entering labels
    std::vector<Gate> lhs;               // dirty gate first, then clean gate(s)
    std::vector<std::vector<Gate>> prefixes;
    bool empty_tail_only = false;
    std::string family;
};

/// Legal dirty gates at the given labels/colors. X is emitted only on
/// label-2 wires and CZ tops only on label 1/3/simple-2 so that every gate a
/// tail can produce lands on a window the catalog covers.
std::vector<Gate> dirty_alphabet(const std::vector<int>& labels,
                                 const std::vector<WireColor>& colors) {
    std::vector<Gate> out;
    const int w = static_cast<int>(labels.size());
    for (int q = 0; q < w; ++q) {
        switch (labels[q]) {
            case 1:
                out.push_back(Gate{GateKind::H, q});
                out.push_back(Gate{GateKind::Z, q});
                break;
            case 2:
                out.push_back(Gate{GateKind::Z, q});
                out.push_back(Gate{GateKind::X, q});
                if (colors[q] == WireColor::DoubleT) out.push_back(Gate{GateKind::H, q});
                break;
            default:
                out.push_back(Gate{GateKind::Z, q});
                break;
        }
    }
    for (int q = 0; q + 1 < w; ++q) {
        if (labels[q + 1] != 1) continue;
        if (labels[q] == 1 || labels[q] == 3 ||
            (labels[q] == 2 && colors[q] == WireColor::SimpleT)) {
            out.push_back(Gate{GateKind::CZ, q, q + 1});
        }
        if (labels[q] == 2 && colors[q] == WireColor::DoubleT) {
            out.push_back(Gate{GateKind::CXZ, q, q + 1});
        }
    }
    return out;
}

bool is_b_kind(GateKind k) {
    return static_cast<uint8_t>(k) >= static_cast<uint8_t>(GateKind::B1) &&
           static_cast<uint8_t>(k) <= static_cast<uint8_t>(GateKind::B8);
}

void post_prefix_context(const WindowSpec& spec, const std::vector<Gate>& prefix,
                         std::vector<int>& labels, std::vector<WireColor>& colors) {
    labels = spec.labels;
    colors = spec.colors;
    for (const Gate& g : prefix) {
        switch (g.kind) {
            case GateKind::A1:
            case GateKind::A2:
            case GateKind::A3:
                labels[g.q] = 2;
                break;
            case GateKind::C1:
            case GateKind::C2:
                labels[g.q] = 3;
                break;
            case GateKind::E1:
            case GateKind::E2:
                labels[g.q] = 1;
                break;
            default:
                if (is_b_kind(g.kind)) {
                    labels[g.q] = 2;
                    labels[g.q + 1] = 1;
                } else {
                    labels[g.q] = 1;
                    labels[g.q + 1] = 4;
                }
                break;
        }
        GateSignature sig = signature(g.kind);
        std::vector<int> ws = gate_wires(g);
        for (size_t j = 0; j < ws.size(); ++j) colors[ws[j]] = sig.out[j];
    }
}

std::vector<WindowSpec> build_catalog() {
    std::vector<WindowSpec> catalog;
    auto add = [&](WindowSpec spec) { catalog.push_back(std::move(spec)); };

    // Dirty Z or H in front of an A gate.
    for (GateKind dirty : {GateKind::Z, GateKind::H}) {
        for (GateKind ak : kA) {
            WindowSpec s;
            s.wires = 1;
            s.colors = {WireColor::Plain};
            s.labels = {1};
            s.lhs = {Gate{dirty, 0}, Gate{ak, 0}};
            s.family = "a";
            for (GateKind aj : kA) {
                if (a_out(aj) == a_out(ak)) s.prefixes.push_back({Gate{aj, 0}});
            }
            add(std::move(s));
        }
    }
    // Dirty CZ whose top leg carries the A gate.
    for (GateKind ak : kA) {
        WindowSpec s;
        s.wires = 2;
        s.colors = {WireColor::Plain, WireColor::Plain};
        s.labels = {1, 1};
        s.lhs = {Gate{GateKind::CZ, 0, 1}, Gate{ak, 0}};
        s.family = "a-cz";
        for (GateKind aj : kA) {
            if (a_out(aj) == a_out(ak)) s.prefixes.push_back({Gate{aj, 0}});
        }
        for (GateKind aj : kA) {
            for (GateKind bl : b_group(a_out(aj))) {
                if (b_out(bl) == a_out(ak)) s.prefixes.push_back({Gate{aj, 1}, Gate{bl, 0}});
            }
        }
        add(std::move(s));
    }
    // Dirty CZ in front of the A gate plus the first rung above it.
    for (GateKind ak : kA) {
        for (GateKind bl : b_group(a_out(ak))) {
            WindowSpec s;
            s.wires = 2;
            s.colors = {WireColor::Plain, WireColor::Plain};
            s.labels = {1, 1};
            s.lhs = {Gate{GateKind::CZ, 0, 1}, Gate{ak, 1}, Gate{bl, 0}};
            s.family = "ab-cz";
            for (GateKind aj : kA) {
                for (GateKind bm : b_group(a_out(aj))) {
                    if (b_out(bm) == b_out(bl)) s.prefixes.push_back({Gate{aj, 1}, Gate{bm, 0}});
                }
            }
            // The rung may also collapse into an A rooted one wire higher.
            for (GateKind aj : kA) {
                if (a_out(aj) == b_out(bl)) s.prefixes.push_back({Gate{aj, 0}});
            }
            add(std::move(s));
        }
    }
    // Single dirty gates in front of a B rung.
    struct BDirty {
        GateKind kind;
        int wire;  // 0 = top (plain label-1), 1 = bottom (the coloured track)
        bool red_only;
        const char* family;
    };
    for (const BDirty& bd : {BDirty{GateKind::H, 1, true, "b-h-bottom"},
                             BDirty{GateKind::X, 1, false, "b-x-bottom"},
                             BDirty{GateKind::H, 0, false, "b-h-top"},
                             BDirty{GateKind::Z, 0, false, "b-z-top"},
                             BDirty{GateKind::Z, 1, false, "b-z-bottom"}}) {
        for (GateKind bl : {GateKind::B1, GateKind::B2, GateKind::B3, GateKind::B4, GateKind::B5,
                            GateKind::B6, GateKind::B7, GateKind::B8}) {
            if (bd.red_only && b_in(bl) != WireColor::DoubleT) continue;
            WindowSpec s;
            s.wires = 2;
            s.colors = {WireColor::Plain, b_in(bl)};
            s.labels = {1, 2};
            s.lhs = {Gate{bd.kind, bd.wire}, Gate{bl, 0}};
            s.family = bd.family;
            for (GateKind bm : b_group(b_in(bl))) {
                if (b_out(bm) == b_out(bl)) s.prefixes.push_back({Gate{bm, 0}});
            }
            add(std::move(s));
        }
    }
    // Dirty Z or X in front of a C gate.
    for (GateKind dirty : {GateKind::Z, GateKind::X}) {
        for (GateKind ck : kC) {
            WindowSpec s;
            s.wires = 1;
            s.colors = {WireColor::SimpleT};
            s.labels = {2};
            s.lhs = {Gate{dirty, 0}, Gate{ck, 0}};
            s.family = "c";
            for (GateKind cj : kC) s.prefixes.push_back({Gate{cj, 0}});
            add(std::move(s));
        }
    }
    // Dirty CZ whose top leg enters a C gate.
    for (GateKind ck : kC) {
        WindowSpec s;
        s.wires = 2;
        s.colors = {WireColor::SimpleT, WireColor::Plain};
        s.labels = {2, 1};
        s.lhs = {Gate{GateKind::CZ, 0, 1}, Gate{ck, 0}};
        s.family = "c-cz";
        for (GateKind cj : kC) s.prefixes.push_back({Gate{cj, 0}});
        add(std::move(s));
    }
    // Dirty CZ / CXZ hanging below a B rung's coloured input.
    for (GateKind bl : kBGreen) {
        WindowSpec s;
        s.wires = 3;
        s.colors = {WireColor::Plain, WireColor::SimpleT, WireColor::Plain};
        s.labels = {1, 2, 1};
        s.lhs = {Gate{GateKind::CZ, 1, 2}, Gate{bl, 0}};
        s.family = "b-cz-below";
        for (GateKind bm : kBGreen) {
            if (b_out(bm) == b_out(bl)) s.prefixes.push_back({Gate{bm, 0}});
        }
        add(std::move(s));
    }
    for (GateKind bl : kBRed) {
        WindowSpec s;
        s.wires = 3;
        s.colors = {WireColor::Plain, WireColor::DoubleT, WireColor::Plain};
        s.labels = {1, 2, 1};
        s.lhs = {Gate{GateKind::CXZ, 1, 2}, Gate{bl, 0}};
        s.family = "b-cxz-below";
        for (GateKind bm : kBRed) {
            if (b_out(bm) == b_out(bl)) s.prefixes.push_back({Gate{bm, 0}});
        }
        add(std::move(s));
    }
    // Dirty CZ spanning two consecutive B rungs.
    for (WireColor root : {WireColor::SimpleT, WireColor::DoubleT}) {
        for (GateKind ba : b_group(root)) {
            for (GateKind bb : b_group(b_out(ba))) {
                WindowSpec s;
                s.wires = 3;
                s.colors = {WireColor::Plain, WireColor::Plain, root};
                s.labels = {1, 1, 2};
                s.lhs = {Gate{GateKind::CZ, 0, 1}, Gate{ba, 1}, Gate{bb, 0}};
                s.family = "bb-cz";
                for (GateKind bA : b_group(root)) {
                    for (GateKind bB : b_group(b_out(bA))) {
                        if (b_out(bB) == b_out(bb)) {
                            s.prefixes.push_back({Gate{bA, 1}, Gate{bB, 0}});
                        }
                    }
                }
                add(std::move(s));
            }
        }
    }
    // Single dirty gates in front of a D rung.
    struct DDirty {
        GateKind kind;
        int wire;
        const char* family;
    };
    for (const DDirty& dd : {DDirty{GateKind::Z, 0, "d-z-top"}, DDirty{GateKind::Z, 1, "d-z-bottom"},
                             DDirty{GateKind::H, 1, "d-h-bottom"}}) {
        for (GateKind dk : kD) {
            WindowSpec s;
            s.wires = 2;
            s.colors = {WireColor::Plain, WireColor::Plain};
            s.labels = {3, 1};
            s.lhs = {Gate{dd.kind, dd.wire}, Gate{dk, 0}};
            s.family = dd.family;
            for (GateKind dj : kD) s.prefixes.push_back({Gate{dj, 0}});
            add(std::move(s));
        }
    }
    for (GateKind dk : kD) {
        WindowSpec s;
        s.wires = 2;
        s.colors = {WireColor::Plain, WireColor::Plain};
        s.labels = {3, 1};
        s.lhs = {Gate{GateKind::CZ, 0, 1}, Gate{dk, 0}};
        s.family = "d-cz";
        for (GateKind dj : kD) s.prefixes.push_back({Gate{dj, 0}});
        add(std::move(s));
    }
    // Dirty CZ spanning two consecutive D rungs.
    for (GateKind da : kD) {
        for (GateKind db : kD) {
            WindowSpec s;
            s.wires = 3;
            s.colors = {WireColor::Plain, WireColor::Plain, WireColor::Plain};
            s.labels = {3, 1, 1};
            s.lhs = {Gate{GateKind::CZ, 1, 2}, Gate{da, 0}, Gate{db, 1}};
            s.family = "dd-cz";
            for (GateKind dA : kD) {
                for (GateKind dB : kD) s.prefixes.push_back({Gate{dA, 0}, Gate{dB, 1}});
            }
            add(std::move(s));
        }
    }
    // Dirty Z in front of an E gate (tails would trail the stage, so none).
    for (GateKind ek : kE) {
        WindowSpec s;
        s.wires = 1;
        s.colors = {WireColor::Plain};
        s.labels = {4};
        s.lhs = {Gate{GateKind::Z, 0}, Gate{ek, 0}};
        s.family = "e";
        s.empty_tail_only = true;
        for (GateKind ej : kE) s.prefixes.push_back({Gate{ej, 0}});
        add(std::move(s));
    }
    // Structural seeds: the empty wire as a one-wire stage, and a C gate
    // climbing one wire by growing a rung and a D.
    {
        WindowSpec s;
        s.wires = 1;
        s.colors = {WireColor::Plain};
        s.labels = {1};
        s.family = "identity-seed";
        s.empty_tail_only = true;
        for (GateKind aj : {GateKind::A1, GateKind::A2}) {
            for (GateKind ck : kC) {
                for (GateKind eh : kE) {
                    s.prefixes.push_back({Gate{aj, 0}, Gate{ck, 0}, Gate{eh, 0}});
                }
            }
        }
        add(std::move(s));
    }
    {
        WindowSpec s;
        s.wires = 2;
        s.colors = {WireColor::Plain, WireColor::SimpleT};
        s.labels = {1, 2};
        s.lhs = {Gate{GateKind::C1, 1}};
        s.family = "identity-seed";
        for (GateKind bm : {GateKind::B1, GateKind::B2, GateKind::B3}) {
            for (GateKind ck : kC) {
                for (GateKind dj : kD) {
                    s.prefixes.push_back({Gate{bm, 0}, Gate{ck, 0}, Gate{dj, 0}});
                }
            }
        }
        add(std::move(s));
    }
    return catalog;
}

RewriteRule derive_spec(const WindowSpec& spec) {
    Circuit lhs_circ;
    lhs_circ.n_qubits = spec.wires;
    lhs_circ.gates = spec.lhs;
    Tableau lhs_tab = Tableau::of_circuit(lhs_circ);
    ExactVector lhs_col0 = apply_to_basis_state(lhs_circ, 0);

    struct Candidate {
        std::vector<Gate> prefix;
        std::vector<Gate> tail;
        bool minus = false;
        size_t total() const { return prefix.size() + tail.size(); }
    };
    std::optional<Candidate> best;
    bool tie = false;

    for (const auto& prefix : spec.prefixes) {
        Circuit pc;
        pc.n_qubits = spec.wires;
        pc.gates = prefix;
        Tableau remainder = lhs_tab.compose(Tableau::of_circuit(pc).inverse());

        std::optional<std::vector<Gate>> tail;
        if (spec.empty_tail_only) {
            if (remainder == Tableau::identity(spec.wires)) tail = std::vector<Gate>{};
        } else {
            std::vector<int> labels;
            std::vector<WireColor> colors;
            post_prefix_context(spec, prefix, labels, colors);
            tail = searcher_for(spec.wires, dirty_alphabet(labels, colors)).find(remainder);
        }
        if (!tail) continue;

        Candidate cand{prefix, *tail, false};
        // Resolve the scalar by comparing exact first columns.
        ExactVector col(size_t{1} << spec.wires);
        col[0] = RootTwoScalar::one();
        for (const Gate& g : prefix) apply_gate_to_vector(g, spec.wires, col);
        for (const Gate& g : *tail) apply_gate_to_vector(g, spec.wires, col);
        if (!(col == lhs_col0)) {
            bool negated = true;
            for (size_t i = 0; i < col.size(); ++i) {
                if (!(col[i] == -lhs_col0[i])) {
                    negated = false;
                    break;
                }
            }
            if (!negated) {
                throw std::logic_error("derive_rule: tail matches tableau but not the operator");
            }
            cand.minus = true;
        }

        if (!best || cand.total() < best->total()) {
            best = std::move(cand);
            tie = false;
        } else if (cand.total() == best->total() &&
                   !(cand.prefix == best->prefix && cand.tail == best->tail)) {
            tie = true;
        }
    }
    std::string key;
    {
        RewriteRule probe;
        probe.wires = spec.wires;
        probe.colors = spec.colors;
        probe.lhs = spec.lhs;
        key = probe.lhs_key();
    }
    if (!best) throw NoCandidateError("derive_rule: no candidate for window " + key);
    if (tie) throw AmbiguousRuleError("derive_rule: ambiguous candidates for window " + key);

    RewriteRule rule;
    rule.wires = spec.wires;
    rule.colors = spec.colors;
    rule.lhs = spec.lhs;
    rule.rhs_clean = best->prefix;
    rule.rhs_dirty = best->tail;
    rule.rhs_minus = best->minus;
    rule.family = spec.family;
    return rule;
}

}  // namespace

RewriteRule derive_rule(int wires, const std::vector<WireColor>& colors,
                        const std::vector<Gate>& lhs, const std::string& family) {
    static const std::vector<WindowSpec> catalog = build_catalog();
    for (const WindowSpec& spec : catalog) {
        if (spec.wires == wires && spec.colors == colors && spec.lhs == lhs) {
            WindowSpec tagged = spec;
            if (!family.empty()) tagged.family = family;
            return derive_spec(tagged);
        }
    }
    throw NoCandidateError("derive_rule: window is not in the catalog");
}

const RuleDatabase& RuleDatabase::derived() {
    static const RuleDatabase db = [] {
        RuleDatabase out;
        for (const WindowSpec& spec : build_catalog()) out.add(derive_spec(spec));
        return out;
    }();
    return db;
}

}  // namespace rstab
