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

#ifndef RSTAB_REWRITE_HPP
#define RSTAB_REWRITE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rstab/circuit.hpp"
#include "rstab/normal_form.hpp"

namespace rstab {

/// One rewrite rule on a local window of 1..3 wires. The left-hand side is a
/// dirty gate followed by the clean generator gate(s) it is about to cross
/// (the two structural seed rules have no dirty gate); the right-hand side is
/// a clean prefix followed by dirty gates, with an optional -1 scalar.
struct RewriteRule {
    int wires = 1;
    std::vector<WireColor> colors;  // wire colors entering the window
    std::vector<Gate> lhs;          // local wire indices, dirty gate first
    std::vector<Gate> rhs_clean;
    std::vector<Gate> rhs_dirty;
    bool rhs_minus = false;
    std::string family;

    Circuit lhs_circuit() const;
    Circuit rhs_circuit() const;  // includes the scalar
    std::string lhs_key() const;  // matcher key (gates + colors)
};

struct AmbiguousRuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoCandidateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The machine-derived rule set plus (de)serialization in the .rules text
/// format: one `LHS -> RHS` per line, gates `;`-separated with circuit-file
/// tokens, `@colors PSD...` asserted on the LHS, `SCALAR -1` allowed on the
/// RHS.
class RuleDatabase {
  public:
    /// Derives the full typed rule set by enumerating every dirty-window
    /// shape and searching the unique legal right-hand side for each.
    static const RuleDatabase& derived();
    static RuleDatabase parse(const std::string& text);
    static RuleDatabase load_file(const std::string& path);

    std::string save() const;
    void save_file(const std::string& path) const;

    size_t size() const { return rules_.size(); }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const RewriteRule* find(const std::string& lhs_key) const;

    /// Exact-matrix soundness of every rule; throws std::logic_error with the
    /// offending rule and both matrices rendered.
    void check_sound() const;

    void add(RewriteRule rule);

  private:
    std::vector<RewriteRule> rules_;
    std::unordered_map<std::string, size_t> index_;
};

/// Derives the unique right-hand side for a window left-hand side, searching
/// clean prefixes of the window's family and minimal legal dirty tails.
/// Throws NoCandidateError / AmbiguousRuleError.
RewriteRule derive_rule(int wires, const std::vector<WireColor>& colors,
                        const std::vector<Gate>& lhs, const std::string& family);

/// Dirty-normal-form state: interleaved clean (generator) and dirty
/// (primitive/derived) gates plus the accumulated scalar sign.
struct DirtyState {
    int n = 0;
    int sign = +1;
    struct Entry {
        Gate gate;
        bool clean;
    };
    std::vector<Entry> seq;

    std::string str() const;  // reproducer dump
};

/// Wire labels 1..4 before each gate position: labels()[k] is the label
/// vector before seq[k] (clean gates update labels, dirty gates do not).
/// The last entry is the final labelling.
std::vector<std::vector<int>> wire_labels(const DirtyState& s);
std::vector<std::vector<int>> wire_labels(const Circuit& clean_circuit);
std::vector<std::vector<int>> wire_labels(const NormalForm& nf);

/// Wire colors before each position, dirty gates transparent.
std::vector<std::vector<WireColor>> wire_colors(const DirtyState& s);

/// Placement legality of a dirty gate given the labels and colors at its
/// position: H on 1 or double 2; Z on 1..4; X on 1 or 2; CZ on adjacent wires
/// with bottom 1 and top 1, 3 or simple 2; CXZ adjacent with bottom 1 and top
/// double 2.
bool is_dirty_placement_legal(const Gate& g, const std::vector<int>& labels,
                              const std::vector<WireColor>& colors);

/// s_i = number of dirty gates before the i-th clean gate.
using TerminationMeasure = std::vector<uint32_t>;
TerminationMeasure measure(const DirtyState& s);
bool lex_less(const TerminationMeasure& a, const TerminationMeasure& b);

struct RewriteStep {
    std::string family;
    std::string lhs_key;
    size_t position = 0;  // index of the consumed dirty gate
    TerminationMeasure measure_after;
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

struct RewriteOptions {
    /// Assert per step: measure lexicographically decreases, every dirty gate
    /// placement is legal, and the clean-gate count stays within n^2 + 2n.
    bool check_invariants = false;
    RewriteTrace* trace = nullptr;
    size_t max_steps = 10'000'000;
};

struct StuckRewriteError : std::runtime_error {
    StuckRewriteError(std::string message, std::string reproducer);
    std::string reproducer;
};

/// Appends the identity normal form and rewrites dirty gates through it until
/// none remain (input X/CXZ gates are pre-expanded to primitives; scalars are
/// absorbed into the sign slot).
NormalForm normalize_by_rewriting(const Circuit& c, const RuleDatabase& db,
                                  const RewriteOptions& opts = {});

enum class RelationSet { Typed, Reduced, Alternative };

struct RelationPair {
    std::string name;
    Circuit lhs;
    Circuit rhs;
};

/// R1..R16 and S1..S19 as primitive-gate circuit pairs.
std::vector<RelationPair> reduced_relations();
std::vector<RelationPair> alternative_relations();

struct VerifyReport {
    size_t checked = 0;
    std::vector<std::string> failures;  // names of relations that are not exact identities
    bool ok() const { return failures.empty(); }
};

/// Expands both sides of every relation in the set and asserts exact-matrix
/// equality. For the typed set, db defaults to the derived database.
VerifyReport verify_relations(RelationSet set, const RuleDatabase* db = nullptr);

}  // namespace rstab

#endif
