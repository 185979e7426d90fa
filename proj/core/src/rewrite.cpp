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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rstab/exact.hpp"

namespace rstab {

Circuit RewriteRule::lhs_circuit() const {
    Circuit c;
    c.n_qubits = wires;
    c.gates = lhs;
    return c;
}

Circuit RewriteRule::rhs_circuit() const {
    Circuit c;
    c.n_qubits = wires;
    c.gates = rhs_clean;
    c.gates.insert(c.gates.end(), rhs_dirty.begin(), rhs_dirty.end());
    if (rhs_minus) c.push(Gate{GateKind::MinusOne});
    return c;
}

namespace {

std::string gate_token(const Gate& g) {
    std::string s = gate_kind_name(g.kind);
    int args = (g.kind == GateKind::CZ || g.kind == GateKind::CXZ) ? 2
               : gate_arity(g.kind) == 0                           ? 0
                                                                   : 1;
    if (args >= 1) s += " " + std::to_string(g.q);
    if (args == 2) s += " " + std::to_string(g.r);
    return s;
}

std::string make_lhs_key(const std::vector<Gate>& gates, const std::vector<WireColor>& colors) {
    std::string key;
    for (size_t i = 0; i < gates.size(); ++i) {
        if (i) key += ';';
        key += gate_token(gates[i]);
    }
    key += '@';
    for (WireColor c : colors) key += wire_color_code(c);
    return key;
}

}  // namespace

std::string RewriteRule::lhs_key() const {
    return make_lhs_key(lhs, colors);
}

void RuleDatabase::add(RewriteRule rule) {
    std::string key = rule.lhs_key();
    if (!rule.lhs.empty() && index_.count(key)) {
        throw std::logic_error("duplicate rule for window " + key);
    }
    if (!rule.lhs.empty()) index_[key] = rules_.size();
    rules_.push_back(std::move(rule));
}

const RewriteRule* RuleDatabase::find(const std::string& lhs_key) const {
    auto it = index_.find(lhs_key);
    return it == index_.end() ? nullptr : &rules_[it->second];
}

std::string RuleDatabase::save() const {
    std::string out;
    for (const RewriteRule& r : rules_) {
        out += "# " + r.family + "\n";
        for (size_t i = 0; i < r.lhs.size(); ++i) {
            if (i) out += "; ";
            out += gate_token(r.lhs[i]);
        }
        out += " @colors ";
        for (WireColor c : r.colors) out += wire_color_code(c);
        out += " -> ";
        bool first = true;
        for (const Gate& g : r.rhs_clean) {
            if (!first) out += "; ";
            out += gate_token(g);
            first = false;
        }
        for (const Gate& g : r.rhs_dirty) {
            if (!first) out += "; ";
            out += gate_token(g);
            first = false;
        }
        if (r.rhs_minus) {
            if (!first) out += "; ";
            out += "SCALAR -1";
            first = false;
        }
        if (first) out += "NOP";
        out += "\n";
    }
    return out;
}

void RuleDatabase::save_file(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    f << save();
}

RuleDatabase RuleDatabase::parse(const std::string& text) {
    RuleDatabase db;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    std::string family = "unknown";
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("rules line " + std::to_string(lineno) + ": " + msg);
    };
    auto parse_gate = [&](std::istringstream& ls, const std::string& tok) {
        Gate g{};
        g.kind = parse_gate_kind(tok);
        int args = (g.kind == GateKind::CZ || g.kind == GateKind::CXZ) ? 2
                   : gate_arity(g.kind) == 0                           ? 0
                                                                       : 1;
        if (args >= 1 && !(ls >> g.q)) fail("missing wire for " + tok);
        if (args == 2 && !(ls >> g.r)) fail("missing second wire for " + tok);
        return g;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') {
            family = line.substr(1);
            if (!family.empty() && family[0] == ' ') family.erase(0, 1);
            continue;
        }
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty()) continue;
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) fail("missing '->'");
        std::string lhs_text = line.substr(0, arrow);
        std::string rhs_text = line.substr(arrow + 2);

        RewriteRule r;
        r.family = family;
        size_t at = lhs_text.find("@colors");
        if (at == std::string::npos) fail("missing '@colors'");
        std::string colors_text = lhs_text.substr(at + 7);
        lhs_text.resize(at);
        {
            std::istringstream cs(colors_text);
            std::string ctok;
            if (!(cs >> ctok)) fail("missing color string");
            for (char c : ctok) r.colors.push_back(parse_wire_color(c));
            r.wires = static_cast<int>(r.colors.size());
        }
        // LHS gates.
        {
            std::istringstream segs(lhs_text);
            std::string seg;
            while (std::getline(segs, seg, ';')) {
                std::istringstream ls(seg);
                std::string tok;
                if (!(ls >> tok)) continue;
                r.lhs.push_back(parse_gate(ls, tok));
            }
        }
        // RHS gates: leading generator gates are the clean prefix.
        {
            std::istringstream segs(rhs_text);
            std::string seg;
            bool in_dirty = false;
            while (std::getline(segs, seg, ';')) {
                std::istringstream ls(seg);
                std::string tok;
                if (!(ls >> tok)) continue;
                if (tok == "NOP") continue;
                if (tok == "SCALAR") {
                    std::string v;
                    if (!(ls >> v) || v != "-1") fail("bad SCALAR value");
                    r.rhs_minus = true;
                    continue;
                }
                Gate g = parse_gate(ls, tok);
                if (is_generator_gate(g.kind)) {
                    if (in_dirty) fail("clean gate after dirty gates on the RHS");
                    r.rhs_clean.push_back(g);
                } else {
                    in_dirty = true;
                    r.rhs_dirty.push_back(g);
                }
            }
        }
        db.add(std::move(r));
    }
    return db;
}

RuleDatabase RuleDatabase::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    RuleDatabase db = parse(ss.str());
    db.check_sound();  // a rule file is trusted only after it verifies
    return db;
}

void RuleDatabase::check_sound() const {
    for (const RewriteRule& r : rules_) {
        ExactMatrix lhs = circuit_matrix(r.lhs_circuit());
        ExactMatrix rhs = circuit_matrix(r.rhs_circuit());
        if (!(lhs == rhs)) {
            throw std::logic_error("unsound rule " + r.lhs_key() + " (" + r.family +
                                   ")\nlhs:\n" + lhs.str() + "rhs:\n" + rhs.str());
        }
    }
}

// --- dirty state ------------------------------------------------------------

std::string DirtyState::str() const {
    std::string out = "qubits " + std::to_string(n) + "\n";
    if (sign < 0) out += "MINUS1\n";
    for (const Entry& e : seq) {
        out += gate_token(e.gate);
        out += e.clean ? "\n" : "   # dirty\n";
    }
    return out;
}

namespace {

// Labels evolve only at clean generator gates; wires start at 1.
void update_labels(const Gate& g, std::vector<int>& label) {
    switch (g.kind) {
        case GateKind::A1:
        case GateKind::A2:
        case GateKind::A3:
            label[g.q] = 2;
            break;
        case GateKind::C1:
        case GateKind::C2:
            label[g.q] = 3;
            break;
        case GateKind::E1:
        case GateKind::E2:
            label[g.q] = 1;
            break;
        case GateKind::B1:
        case GateKind::B2:
        case GateKind::B3:
        case GateKind::B4:
        case GateKind::B5:
        case GateKind::B6:
        case GateKind::B7:
        case GateKind::B8:
            label[g.q] = 2;
            label[g.q + 1] = 1;
            break;
        case GateKind::D1:
        case GateKind::D2:
        case GateKind::D3:
        case GateKind::D4:
            label[g.q] = 1;
            label[g.q + 1] = 4;
            break;
        default:
            break;  // dirty gates leave labels unchanged
    }
}

void update_colors(const Gate& g, std::vector<WireColor>& color) {
    if (!is_generator_gate(g.kind)) return;
    GateSignature sig = signature(g.kind);
    std::vector<int> wires = gate_wires(g);
    for (size_t j = 0; j < wires.size(); ++j) color[wires[j]] = sig.out[j];
}

}  // namespace

std::vector<std::vector<int>> wire_labels(const DirtyState& s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(s.n, 1);
    out.push_back(cur);
    for (const auto& e : s.seq) {
        if (e.clean) update_labels(e.gate, cur);
        out.push_back(cur);
    }
    return out;
}

std::vector<std::vector<int>> wire_labels(const Circuit& clean_circuit) {
    DirtyState s;
    s.n = clean_circuit.n_qubits;
    for (const Gate& g : clean_circuit.gates) s.seq.push_back({g, is_generator_gate(g.kind)});
    return wire_labels(s);
}

std::vector<std::vector<int>> wire_labels(const NormalForm& nf) {
    return wire_labels(nf_to_circuit(nf));
}

std::vector<std::vector<WireColor>> wire_colors(const DirtyState& s) {
    std::vector<std::vector<WireColor>> out;
    std::vector<WireColor> cur(s.n, WireColor::Plain);
    out.push_back(cur);
    for (const auto& e : s.seq) {
        if (e.clean) update_colors(e.gate, cur);
        out.push_back(cur);
    }
    return out;
}

bool is_dirty_placement_legal(const Gate& g, const std::vector<int>& labels,
                              const std::vector<WireColor>& colors) {
    auto adjacent = [](int a, int b) { return a + 1 == b || b + 1 == a; };
    switch (g.kind) {
        case GateKind::MinusOne:
            return true;
        case GateKind::H:
            return labels[g.q] == 1 ||
                   (labels[g.q] == 2 && colors[g.q] == WireColor::DoubleT);
        case GateKind::Z:
            return labels[g.q] >= 1 && labels[g.q] <= 4;
        case GateKind::X:
            return labels[g.q] == 1 || labels[g.q] == 2;
        case GateKind::CZ: {
            if (!adjacent(g.q, g.r)) return false;
            int top = std::min(g.q, g.r), bottom = std::max(g.q, g.r);
            if (labels[bottom] != 1) return false;
            return labels[top] == 1 || labels[top] == 3 ||
                   (labels[top] == 2 && colors[top] == WireColor::SimpleT);
        }
        case GateKind::CXZ: {
            // The XZ-carrying leg (q) must be the upper wire.
            if (g.q + 1 != g.r) return false;
            return labels[g.r] == 1 && labels[g.q] == 2 && colors[g.q] == WireColor::DoubleT;
        }
        default:
            return false;  // generator gates are not dirty gates
    }
}

TerminationMeasure measure(const DirtyState& s) {
    TerminationMeasure m;
    uint32_t dirt = 0;
    for (const auto& e : s.seq) {
        if (e.clean) {
            m.push_back(dirt);
        } else {
            ++dirt;
        }
    }
    return m;
}

bool lex_less(const TerminationMeasure& a, const TerminationMeasure& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

StuckRewriteError::StuckRewriteError(std::string message, std::string repro)
    : std::runtime_error(message + "\n--- reproducer ---\n" + repro),
      reproducer(std::move(repro)) {}

namespace {

bool wires_overlap(const Gate& a, const Gate& b) {
    for (int wa : gate_wires(a)) {
        for (int wb : gate_wires(b)) {
            if (wa == wb) return true;
        }
    }
    return false;
}

bool gate_on_wires(const Gate& g, int lo, int hi) {
    for (int w : gate_wires(g)) {
        if (w >= lo && w <= hi) return true;
    }
    return false;
}

Gate to_local(const Gate& g, int lo) {
    Gate out = g;
    if (out.q >= 0) out.q -= lo;
    if (out.r >= 0) out.r -= lo;
    return out;
}

Gate to_global(const Gate& g, int lo) {
    Gate out = g;
    if (out.q >= 0) out.q += lo;
    if (out.r >= 0) out.r += lo;
    return out;
}

// Route distant CZ/CXZ legs together with adjacent swap chains so every
// two-wire dirty gate acts on neighbouring wires.
void push_adjacent_swap(Circuit& out, int a) {
    // SWAP(a, a+1) over the primitive alphabet.
    auto cx_lower_target = [&](Circuit& c) {
        c.push(Gate{GateKind::H, a + 1});
        c.push(Gate{GateKind::CZ, a, a + 1});
        c.push(Gate{GateKind::H, a + 1});
    };
    auto cx_upper_target = [&](Circuit& c) {
        c.push(Gate{GateKind::H, a});
        c.push(Gate{GateKind::CZ, a, a + 1});
        c.push(Gate{GateKind::H, a});
    };
    cx_lower_target(out);
    cx_upper_target(out);
    cx_lower_target(out);
}

Circuit adjacentize(const Circuit& c) {
    Circuit out;
    out.n_qubits = c.n_qubits;
    for (const Gate& g : c.gates) {
        if ((g.kind != GateKind::CZ && g.kind != GateKind::CXZ) || std::abs(g.q - g.r) <= 1) {
            out.push(g);
            continue;
        }
        int lo = std::min(g.q, g.r), hi = std::max(g.q, g.r);
        for (int a = lo; a < hi - 1; ++a) push_adjacent_swap(out, a);
        Gate local = g;
        local.q = g.q == lo ? hi - 1 : g.q;
        local.r = g.r == lo ? hi - 1 : g.r;
        out.push(local);
        for (int a = hi - 2; a >= lo; --a) push_adjacent_swap(out, a);
    }
    return out;
}

}  // namespace

NormalForm normalize_by_rewriting(const Circuit& c, const RuleDatabase& db,
                                  const RewriteOptions& opts) {
    validate_circuit(c);
    DirtyState st;
    st.n = c.n_qubits;
    st.sign = +1;
    for (Gate g : expand_all(adjacentize(c)).gates) {
        if (g.kind == GateKind::MinusOne) {
            st.sign = -st.sign;
            continue;
        }
        // CZ is symmetric; keep its legs in ascending order so windows match.
        if (g.kind == GateKind::CZ && g.q > g.r) std::swap(g.q, g.r);
        st.seq.push_back({g, false});
    }
    for (const Gate& g : nf_to_circuit(identity_normal_form(c.n_qubits)).gates) {
        st.seq.push_back({g, true});
    }

    const size_t clean_cap = static_cast<size_t>(c.n_qubits) * c.n_qubits + 2 * c.n_qubits;
    TerminationMeasure prev = measure(st);

    auto check_state = [&]() {
        auto labels = wire_labels(st);
        auto colors = wire_colors(st);
        size_t cleans = 0;
        for (size_t i = 0; i < st.seq.size(); ++i) {
            if (st.seq[i].clean) {
                ++cleans;
            } else if (!is_dirty_placement_legal(st.seq[i].gate, labels[i], colors[i])) {
                throw StuckRewriteError(
                    "illegal dirty placement of " + gate_token(st.seq[i].gate) + " at index " +
                        std::to_string(i),
                    st.str());
            }
        }
        if (cleans > clean_cap) {
            throw StuckRewriteError("clean gate count exceeds the n^2+2n bound", st.str());
        }
    };
    if (opts.check_invariants) check_state();

    size_t steps = 0;
    std::vector<WireColor> cur_colors, window_colors;
    while (true) {
        // Find the leftmost dirty gate with a matchable window. Colors are
        // maintained by a single forward pass as the scan advances.
        bool any_dirty = false;
        bool applied = false;
        cur_colors.assign(st.n, WireColor::Plain);
        for (size_t i = 0; i < st.seq.size() && !applied; ++i) {
            if (st.seq[i].clean) {
                update_colors(st.seq[i].gate, cur_colors);
                continue;
            }
            any_dirty = true;
            const Gate& dirty = st.seq[i].gate;
            size_t j = st.seq.size();
            for (size_t t = i + 1; t < st.seq.size(); ++t) {
                if (wires_overlap(dirty, st.seq[t].gate)) {
                    j = t;
                    break;
                }
            }
            if (j == st.seq.size()) {
                throw StuckRewriteError("dirty gate " + gate_token(dirty) +
                                            " has no following clean gate",
                                        st.str());
            }
            if (!st.seq[j].clean) continue;  // nearer dirt goes first

            // The window's entering colors are those just before its first
            // clean gate; clean gates between the dirt and the window on
            // other wires contribute to them.
            window_colors = cur_colors;
            for (size_t t = i + 1; t < j; ++t) {
                if (st.seq[t].clean) update_colors(st.seq[t].gate, window_colors);
            }

            auto window_of = [&](const std::vector<Gate>& gates) {
                int lo = st.n, hi = -1;
                for (const Gate& g : gates) {
                    for (int w : gate_wires(g)) {
                        lo = std::min(lo, w);
                        hi = std::max(hi, w);
                    }
                }
                return std::pair<int, int>(lo, hi);
            };

            auto try_match = [&](const std::vector<Gate>& lhs_gates)
                -> std::pair<const RewriteRule*, int> {
                auto [lo, hi] = window_of(lhs_gates);
                std::vector<Gate> local;
                for (const Gate& g : lhs_gates) local.push_back(to_local(g, lo));
                std::vector<WireColor> colors(window_colors.begin() + lo,
                                              window_colors.begin() + hi + 1);
                return {db.find(make_lhs_key(local, colors)), lo};
            };

            std::vector<Gate> lhs_gates{dirty, st.seq[j].gate};
            auto [rule, lo] = try_match(lhs_gates);
            size_t k2 = st.seq.size();
            if (!rule) {
                // Extend the window with the next clean gate overlapping it.
                auto [wlo, whi] = window_of(lhs_gates);
                for (size_t t = j + 1; t < st.seq.size(); ++t) {
                    if (!gate_on_wires(st.seq[t].gate, wlo, whi)) continue;
                    if (!st.seq[t].clean) break;  // blocked by dirt; retry later
                    k2 = t;
                    break;
                }
                if (k2 != st.seq.size()) {
                    lhs_gates.push_back(st.seq[k2].gate);
                    std::tie(rule, lo) = try_match(lhs_gates);
                }
                if (!rule) continue;
            }

            // Splice: erase the window, insert the replacement where the
            // first clean gate stood.
            if (rule->rhs_minus) st.sign = -st.sign;
            std::vector<DirtyState::Entry> repl;
            for (const Gate& g : rule->rhs_clean) repl.push_back({to_global(g, lo), true});
            for (const Gate& g : rule->rhs_dirty) repl.push_back({to_global(g, lo), false});
            if (k2 != st.seq.size()) st.seq.erase(st.seq.begin() + k2);
            st.seq.erase(st.seq.begin() + j);
            st.seq.erase(st.seq.begin() + i);
            st.seq.insert(st.seq.begin() + (j - 1), repl.begin(), repl.end());

            if (opts.trace) {
                RewriteStep step;
                step.family = rule->family;
                step.lhs_key = rule->lhs_key();
                step.position = i;
                step.measure_after = measure(st);
                opts.trace->steps.push_back(std::move(step));
            }
            if (opts.check_invariants) {
                TerminationMeasure now = measure(st);
                if (!lex_less(now, prev)) {
                    throw StuckRewriteError("termination measure did not decrease", st.str());
                }
                prev = std::move(now);
                check_state();
            }
            applied = true;
        }
        if (!any_dirty) break;
        if (!applied) {
            throw StuckRewriteError("no rule applies to any active dirty window", st.str());
        }
        if (++steps > opts.max_steps) {
            throw StuckRewriteError("rewrite step limit exceeded", st.str());
        }
    }

    Circuit clean;
    clean.n_qubits = st.n;
    for (const auto& e : st.seq) clean.push(e.gate);
    auto nf = parse_normal(clean);
    if (!nf) {
        throw StuckRewriteError("rewriting terminated on a non-normal residue", st.str());
    }
    nf->sign = st.sign;
    return *nf;
}

VerifyReport verify_relations(RelationSet set, const RuleDatabase* db) {
    VerifyReport rep;
    auto check_pair = [&](const std::string& name, const Circuit& lhs, const Circuit& rhs) {
        ++rep.checked;
        if (!(circuit_matrix(lhs) == circuit_matrix(rhs))) rep.failures.push_back(name);
    };
    switch (set) {
        case RelationSet::Reduced:
            for (const RelationPair& p : reduced_relations()) check_pair(p.name, p.lhs, p.rhs);
            break;
        case RelationSet::Alternative:
            for (const RelationPair& p : alternative_relations()) check_pair(p.name, p.lhs, p.rhs);
            break;
        case RelationSet::Typed: {
            const RuleDatabase& d = db ? *db : RuleDatabase::derived();
            for (const RewriteRule& r : d.rules()) {
                check_pair(r.lhs_key() + " (" + r.family + ")", r.lhs_circuit(), r.rhs_circuit());
            }
            break;
        }
    }
    return rep;
}

}  // namespace rstab
