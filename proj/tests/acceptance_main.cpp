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
// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "rstab/counting.hpp"
#include "rstab/exact.hpp"
#include "rstab/normal_form.hpp"
#include "rstab/rewrite.hpp"
#include "rstab/tableau.hpp"
#include "test_helpers.hpp"

using namespace rstab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << what << "  ("
              << seconds << " s)" << std::endl;
    if (!ok) ++g_failures;
}

template <typename F>
void criterion(int number, const std::string& what, F&& body) {
    auto start = Clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(number, what + (note.empty() ? "" : " [" + note + "]"), ok, secs);
}

// Shared state between criteria 6 and 7.
struct AgreementStats {
    bool agreement_ok = true;
    bool instrumentation_ok = true;
    bool within_time = true;
    double worst_seconds = 0;
    size_t circuits = 0;
    size_t steps = 0;
};

AgreementStats run_agreement() {
    AgreementStats stats;
    const RuleDatabase& db = RuleDatabase::derived();
    std::mt19937 rng(20260810);
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 1000; ++rep) {
            Circuit c = testing::random_circuit(rng, n, 1 + static_cast<int>(rng() % 40));
            auto t0 = Clock::now();
            RewriteTrace trace;
            RewriteOptions opts;
            opts.check_invariants = true;  // legality + lex-descent + clean bound per step
            opts.trace = &trace;
            NormalForm via_rules;
            try {
                via_rules = normalize_by_rewriting(c, db, opts);
            } catch (const StuckRewriteError&) {
                stats.instrumentation_ok = false;
                stats.agreement_ok = false;
                continue;
            }
            double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            stats.worst_seconds = std::max(stats.worst_seconds, secs);
            if (secs >= 1.0) stats.within_time = false;
            NormalForm via_synth = synthesize(Tableau::of_circuit(c), &c);
            if (!(via_rules == via_synth)) stats.agreement_ok = false;
            if (!(fingerprint(nf_to_circuit(via_rules)) == fingerprint(c))) {
                stats.agreement_ok = false;
            }
            ++stats.circuits;
            stats.steps += trace.steps.size();
        }
    }
    return stats;
}

}  // namespace

int main() {
    criterion(1, "group orders match BFS closure (n<=2) and the enumerated forms (n=3)", [] {
        bool ok = clifford_order(1) == 16 && bfs_closure_order(1) == 16;
        ok = ok && clifford_order(2) == 2304 && bfs_closure_order(2) == 2304;
        BijectionReport r3 = verify_bijection(3);
        ok = ok && clifford_order(3) == 5160960 && r3.ok() && r3.distinct == 5160960;
        return ok;
    });

    criterion(2, "16 reduced + 19 alternative relations and the 139-rule database are exact", [] {
        VerifyReport red = verify_relations(RelationSet::Reduced);
        VerifyReport alt = verify_relations(RelationSet::Alternative);
        const RuleDatabase& db = RuleDatabase::derived();
        VerifyReport typed = verify_relations(RelationSet::Typed, &db);
        return red.checked == 16 && red.ok() && alt.checked == 19 && alt.ok() &&
               db.size() == 139 && typed.checked == 139 && typed.ok();
    });

    criterion(3, "Z-/X-circuit and stage existence and uniqueness, exhaustive for n<=3", [] {
        for (int n = 1; n <= 3; ++n) {
            // Valid operands.
            size_t valid_p = 0, valid_q = 0, valid_pairs = 0;
            auto ps = testing::all_paulis(n);
            for (const PauliOperator& p : ps) {
                if (!p.squares_to_identity() || p.is_identity_word()) continue;
                ++valid_p;
                if (p.letter(0).x) ++valid_q;
                for (const PauliOperator& q : ps) {
                    if (!q.squares_to_identity() || q.is_identity_word()) continue;
                    if (!PauliOperator::commutes(p, q)) ++valid_pairs;
                }
            }
            // Each enumerated circuit solves exactly one operand; bijectivity
            // onto the valid operands is existence plus uniqueness.
            PauliOperator top_z = PauliOperator::single(n, 0, kZ);
            PauliOperator bottom_z = PauliOperator::single(n, n - 1, kZ);
            PauliOperator bottom_x = PauliOperator::single(n, n - 1, kX);
            std::map<std::string, int> z_hits, x_hits, pair_hits;
            enumerate_z_circuits(n, [&](const ZCircuit& z) {
                Tableau t = Tableau::of_circuit(z_circuit_to_circuit(z, n));
                ++z_hits[t.inverse().apply(top_z).str()];
            });
            enumerate_x_circuits(n, [&](const XCircuit& x) {
                Tableau t = Tableau::of_circuit(x_circuit_to_circuit(x, n));
                ++x_hits[t.inverse().apply(bottom_x).str()];
            });
            enumerate_z_circuits(n, [&](const ZCircuit& z) {
                enumerate_x_circuits(n, [&](const XCircuit& x) {
                    Stage st{z, x};
                    Tableau inv = Tableau::of_circuit(stage_to_circuit(st, n)).inverse();
                    ++pair_hits[inv.apply(bottom_z).str() + "|" + inv.apply(bottom_x).str()];
                });
            });
            if (z_hits.size() != valid_p || x_hits.size() != valid_q ||
                pair_hits.size() != valid_pairs) {
                return false;
            }
            for (const auto& [key, count] : z_hits) {
                if (count != 1) return false;
            }
            for (const auto& [key, count] : x_hits) {
                if (count != 1) return false;
            }
            for (const auto& [key, count] : pair_hits) {
                if (count != 1) return false;
            }
            // Cross-check the construction hits the enumerated solution.
            for (const PauliOperator& p : ps) {
                if (!p.squares_to_identity() || p.is_identity_word()) continue;
                Tableau t = Tableau::of_circuit(z_circuit_to_circuit(build_z_circuit(p), n));
                if (!(t.apply(p) == top_z)) return false;
            }
        }
        return true;
    });

    criterion(4, "every enumerated X-circuit routes Z-on-top to Z-on-bottom, n<=3", [] {
        for (int n = 1; n <= 3; ++n) {
            PauliOperator top_z = PauliOperator::single(n, 0, kZ);
            PauliOperator bottom_z = PauliOperator::single(n, n - 1, kZ);
            bool ok = true;
            enumerate_x_circuits(n, [&](const XCircuit& x) {
                Tableau t = Tableau::of_circuit(x_circuit_to_circuit(x, n));
                if (!(t.apply(top_z) == bottom_z)) ok = false;
            });
            if (!ok) return false;
        }
        return true;
    });

    criterion(5, "generator action table matches the golden file", [] {
        struct Row {
            GateKind gate;
            const char* from;
        };
        const Row rows[] = {
            {GateKind::A1, "Z"},    {GateKind::A2, "X"},    {GateKind::A3, "XZ"},
            {GateKind::B1, "I.Z"},  {GateKind::B2, "X.Z"},  {GateKind::B3, "Z.Z"},
            {GateKind::B4, "XZ.Z"}, {GateKind::B5, "I.XZ"}, {GateKind::B6, "X.XZ"},
            {GateKind::B7, "Z.XZ"}, {GateKind::B8, "XZ.XZ"}, {GateKind::C1, "Z"},
            {GateKind::C2, "-Z"},   {GateKind::D1, "X.I"},  {GateKind::D1, "XZ.I"},
            {GateKind::D1, "Z.I"},  {GateKind::D2, "X.X"},  {GateKind::D2, "XZ.X"},
            {GateKind::D2, "Z.I"},  {GateKind::D3, "X.Z"},  {GateKind::D3, "XZ.Z"},
            {GateKind::D3, "Z.I"},  {GateKind::D4, "X.XZ"}, {GateKind::D4, "XZ.XZ"},
            {GateKind::D4, "Z.I"},  {GateKind::E1, "X"},    {GateKind::E1, "Z"},
            {GateKind::E2, "-X"},   {GateKind::E2, "Z"},
        };
        std::ostringstream table;
        for (const Row& row : rows) {
            Tableau t = Tableau::of_gate(Gate{row.gate, 0, 1}, gate_arity(row.gate));
            PauliOperator from = PauliOperator::parse(row.from);
            table << gate_kind_name(row.gate) << ": " << from.str() << " -> "
                  << t.apply(from).str() << "\n";
        }
        std::ifstream golden(std::string(RSTAB_TEST_GOLDEN_DIR) + "/actions_golden.txt");
        if (!golden) return false;
        std::ostringstream want;
        want << golden.rdbuf();
        return table.str() == want.str();
    });

    AgreementStats stats = run_agreement();
    criterion(6, "rewrite and synthesis agree on 3000 random circuits (worst " +
                     std::to_string(stats.worst_seconds) + " s/circuit)",
              [&] { return stats.agreement_ok && stats.within_time && stats.circuits == 3000; });
    criterion(7, "measure descent, placement legality and the clean-gate bound held over " +
                     std::to_string(stats.steps) + " rewrite steps",
              [&] { return stats.instrumentation_ok; });

    criterion(8, "letter and word products match the exact matrix oracle, exhaustive n<=2", [] {
        for (int n = 1; n <= 2; ++n) {
            auto ps = testing::all_paulis(n);
            for (const PauliOperator& p : ps) {
                PauliOperator sq = p * p;
                if (!sq.is_identity_word()) return false;
                if ((sq.sign() == 1) != p.squares_to_identity()) return false;
                for (const PauliOperator& q : ps) {
                    if (!(pauli_matrix(p) * pauli_matrix(q) == pauli_matrix(p * q))) return false;
                    if (PauliOperator::commutes(p, q) != (p * q == q * p)) return false;
                }
            }
        }
        return true;
    });

    criterion(9, "normalizing a normal form returns it unchanged; parse/format round-trips", [] {
        const RuleDatabase& db = RuleDatabase::derived();
        std::mt19937 rng(77);
        for (int n = 1; n <= 3; ++n) {
            for (int rep = 0; rep < 40; ++rep) {
                Circuit c = testing::random_circuit(rng, n, 18);
                NormalForm nf = synthesize(Tableau::of_circuit(c), &c);
                Circuit flat = nf_to_circuit(nf);
                if (!(synthesize(Tableau::of_circuit(flat), &flat) == nf)) return false;
                if (!(normalize_by_rewriting(flat, db) == nf)) return false;
                if (!(parse_circuit(format_circuit(flat)) == flat)) return false;
                if (!(parse_circuit(format_circuit(c)) == c)) return false;
            }
        }
        for (const char* name : {"empty1.rsc", "empty2.rsc", "h.rsc", "hh.rsc", "minus1.rsc",
                                 "mixed3.rsc"}) {
            Circuit c = read_circuit_file(std::string(RSTAB_TEST_DATA_DIR) + "/" + name);
            if (!(parse_circuit(format_circuit(c)) == c)) return false;
        }
        // The two normalization paths must render byte-identically.
        Circuit c = read_circuit_file(std::string(RSTAB_TEST_DATA_DIR) + "/mixed3.rsc");
        std::string via_synth = normal_form_to_json(synthesize(Tableau::of_circuit(c), &c));
        std::string via_rules = normal_form_to_json(normalize_by_rewriting(c, db));
        return via_synth == via_rules;
    });

    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
