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

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rstab/counting.hpp"
#include "rstab/exact.hpp"
#include "rstab/normal_form.hpp"
#include "rstab/rewrite.hpp"
#include "rstab/tableau.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInternalError = 3;

using namespace rstab;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    f << text << "\n";
}

const RuleDatabase& rules_from(const std::string& path) {
    static RuleDatabase loaded;
    if (path.empty()) return RuleDatabase::derived();
    loaded = RuleDatabase::load_file(path);
    return loaded;
}

int cmd_normalize(const std::string& in, const std::string& out, const std::string& method,
                  bool trace, const std::string& rules_path) {
    Circuit c = read_circuit_file(in);
    NormalForm nf;
    if (method == "synth") {
        nf = synthesize(Tableau::of_circuit(c), &c);
    } else {
        RewriteTrace tr;
        RewriteOptions opts;
        opts.trace = trace ? &tr : nullptr;
        nf = normalize_by_rewriting(c, rules_from(rules_path), opts);
        if (trace) {
            for (size_t i = 0; i < tr.steps.size(); ++i) {
                const RewriteStep& s = tr.steps[i];
                std::cerr << "step " << i << ": [" << s.family << "] " << s.lhs_key << " at "
                          << s.position << "  s =";
                for (uint32_t v : s.measure_after) std::cerr << ' ' << v;
                std::cerr << "\n";
            }
        }
    }
    write_output(out, normal_form_to_json(nf));
    return kExitOk;
}

int cmd_equal(const std::string& a, const std::string& b, bool use_matrix, int cap) {
    Circuit ca = read_circuit_file(a);
    Circuit cb = read_circuit_file(b);
    if (ca.n_qubits != cb.n_qubits) return kExitVerifyFailed;
    bool equal = use_matrix ? circuit_matrix(ca, cap) == circuit_matrix(cb, cap)
                            : fingerprint(ca, cap) == fingerprint(cb, cap);
    return equal ? kExitOk : kExitVerifyFailed;
}

int cmd_matrix(const std::string& in, int cap) {
    Circuit c = read_circuit_file(in);
    std::cout << circuit_matrix(c, cap).str();
    return kExitOk;
}

int cmd_actions() {
    struct Row {
        GateKind gate;
        const char* from;
    };
    const Row rows[] = {
        {GateKind::A1, "Z"},      {GateKind::A2, "X"},      {GateKind::A3, "XZ"},
        {GateKind::B1, "I.Z"},    {GateKind::B2, "X.Z"},    {GateKind::B3, "Z.Z"},
        {GateKind::B4, "XZ.Z"},   {GateKind::B5, "I.XZ"},   {GateKind::B6, "X.XZ"},
        {GateKind::B7, "Z.XZ"},   {GateKind::B8, "XZ.XZ"},  {GateKind::C1, "Z"},
        {GateKind::C2, "-Z"},     {GateKind::D1, "X.I"},    {GateKind::D1, "XZ.I"},
        {GateKind::D1, "Z.I"},    {GateKind::D2, "X.X"},    {GateKind::D2, "XZ.X"},
        {GateKind::D2, "Z.I"},    {GateKind::D3, "X.Z"},    {GateKind::D3, "XZ.Z"},
        {GateKind::D3, "Z.I"},    {GateKind::D4, "X.XZ"},   {GateKind::D4, "XZ.XZ"},
        {GateKind::D4, "Z.I"},    {GateKind::E1, "X"},      {GateKind::E1, "Z"},
        {GateKind::E2, "-X"},     {GateKind::E2, "Z"},
    };
    for (const Row& row : rows) {
        int arity = gate_arity(row.gate);
        Tableau t = Tableau::of_gate(Gate{row.gate, 0, 1}, arity);
        PauliOperator from = PauliOperator::parse(row.from);
        std::cout << gate_kind_name(row.gate) << ": " << from.str() << " -> "
                  << t.apply(from).str() << "\n";
    }
    return kExitOk;
}

int cmd_verify_relations(const std::string& set, const std::string& rules_path) {
    RelationSet which;
    std::string label;
    size_t expected;
    if (set == "typed") {
        which = RelationSet::Typed;
        label = "typed";
        expected = 139;
    } else if (set == "reduced") {
        which = RelationSet::Reduced;
        label = "reduced";
        expected = 16;
    } else {
        which = RelationSet::Alternative;
        label = "alternative";
        expected = 19;
    }
    const RuleDatabase* db = nullptr;
    if (which == RelationSet::Typed) db = &rules_from(rules_path);
    VerifyReport rep = verify_relations(which, db);
    std::cout << rep.checked - rep.failures.size() << "/" << rep.checked << " " << label
              << " relations verified\n";
    for (const std::string& f : rep.failures) std::cout << "FAILED: " << f << "\n";
    if (rep.checked != expected) {
        std::cout << "expected " << expected << " relations, found " << rep.checked << "\n";
        return kExitVerifyFailed;
    }
    return rep.ok() ? kExitOk : kExitVerifyFailed;
}

int cmd_count(int n) {
    std::cout << count_report_to_json(count_report(n)) << "\n";
    return kExitOk;
}

int cmd_enumerate(int n, bool check_distinct, uint64_t limit) {
    if (check_distinct) {
        BijectionReport rep = verify_bijection(n);
        std::cout << "enumerated " << rep.enumerated << ", distinct " << rep.distinct
                  << ", formula " << clifford_order(n).get_str();
        if (rep.bfs_order) std::cout << ", bfs " << *rep.bfs_order;
        std::cout << "\n";
        return rep.ok() ? kExitOk : kExitVerifyFailed;
    }
    uint64_t emitted = 0;
    enumerate_normal_forms(n, [&](const NormalForm& nf) {
        if (limit != 0 && emitted >= limit) return;
        std::cout << normal_form_to_json(nf) << "\n";
        ++emitted;
    });
    return kExitOk;
}

int cmd_derive_rules(const std::string& out) {
    const RuleDatabase& db = RuleDatabase::derived();
    db.check_sound();
    if (out.empty()) {
        std::cout << db.save();
    } else {
        db.save_file(out);
        std::cout << "wrote " << db.size() << " rules to " << out << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"real stabilizer circuit toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, rules_path;
    std::string method = "synth";
    std::string rel_set = "typed";
    bool trace = false, use_matrix = false, check_distinct = false;
    int n = 1;
    int matrix_cap = kDefaultMatrixCap;
    uint64_t limit = 0;
    std::string equal_a, equal_b;

    auto* normalize = app.add_subcommand("normalize", "rewrite a circuit into its normal form");
    normalize->add_option("--in", in_path, "input .rsc circuit")->required();
    normalize->add_option("--out", out_path, "output JSON path (stdout when omitted)");
    normalize->add_option("--method", method, "synth | rewrite")
        ->check(CLI::IsMember({"synth", "rewrite"}));
    normalize->add_flag("--trace", trace, "log rule applications and measures to stderr");
    normalize->add_option("--rules", rules_path, "rule file (default: derived in-process)");

    auto* equal = app.add_subcommand("equal", "compare two circuits as operators");
    equal->add_option("a", equal_a, "first circuit")->required();
    equal->add_option("b", equal_b, "second circuit")->required();
    equal->add_flag("--matrix", use_matrix, "compare exact matrices instead of fingerprints");
    equal->add_option("--matrix-cap", matrix_cap, "largest n for exact matrices");

    auto* matrix = app.add_subcommand("matrix", "print the exact matrix of a circuit");
    matrix->add_option("--in", in_path, "input .rsc circuit")->required();
    matrix->add_option("--matrix-cap", matrix_cap, "largest n for exact matrices");

    app.add_subcommand("actions", "print the generator action table");

    auto* verify = app.add_subcommand("verify-relations", "check a relation set exactly");
    verify->add_option("--set", rel_set, "typed | reduced | alt")
        ->check(CLI::IsMember({"typed", "reduced", "alt"}));
    verify->add_option("--rules", rules_path, "rule file for the typed set");

    auto* count = app.add_subcommand("count", "closed-form counts as JSON");
    count->add_option("-n", n, "qubit count")->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream normal forms / verify bijection");
    enumerate->add_option("-n", n, "qubit count")->required();
    enumerate->add_flag("--check-distinct", check_distinct,
                        "verify pairwise-distinct fingerprints and the group order");
    enumerate->add_option("--limit", limit, "stop after this many forms (0 = all)");

    auto* derive = app.add_subcommand("derive-rules", "derive the typed rule database");
    derive->add_option("--out", out_path, "rule file to write (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (normalize->parsed()) return cmd_normalize(in_path, out_path, method, trace, rules_path);
        if (equal->parsed()) return cmd_equal(equal_a, equal_b, use_matrix, matrix_cap);
        if (matrix->parsed()) return cmd_matrix(in_path, matrix_cap);
        if (app.get_subcommand("actions")->parsed()) return cmd_actions();
        if (verify->parsed()) return cmd_verify_relations(rel_set, rules_path);
        if (count->parsed()) return cmd_count(n);
        if (enumerate->parsed()) return cmd_enumerate(n, check_distinct, limit);
        if (derive->parsed()) return cmd_derive_rules(out_path);
    } catch (const StuckRewriteError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
