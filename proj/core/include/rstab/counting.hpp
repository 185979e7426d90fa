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

#ifndef RSTAB_COUNTING_HPP
#define RSTAB_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "rstab/normal_form.hpp"

namespace rstab {

/// 4^n + 2^n - 2. Requires n >= 1.
mpz_class count_z_circuits(int n);
/// The A1/A2-start partial sum: sum_{m=1..n} 2^(m-1) (2^m + 2).
mpz_class count_z_circuits_simple_start(int n);
/// The A3-start partial sum: sum_{m=1..n} 2^(m-2) (2^m - 2).
mpz_class count_z_circuits_double_start(int n);
/// 2 * 4^(n-1). Requires n >= 1.
mpz_class count_x_circuits(int n);
/// 2 * prod_{i=1..n} (4^i + 2^i - 2)(2 * 4^(i-1)); 2 at n = 0.
mpz_class clifford_order(int n);

struct CountReport {
    int n = 0;
    mpz_class z_count;
    mpz_class z_count_simple_start;
    mpz_class z_count_double_start;
    mpz_class x_count;
    mpz_class order;
    std::optional<mpz_class> enumerated_distinct;
};

CountReport count_report(int n);
std::string count_report_to_json(const CountReport& r);

/// Deterministic streams. Z-circuits on k wires are emitted with start_wire
/// descending from k-1 (so the all-A1/B1/C1 ladder comes first), gate choices
/// ascending within each slot; X-circuits with D choices ascending then E.
/// Normal forms iterate sign (+1 first), then stage choices outermost first.
void enumerate_z_circuits(int k, const std::function<void(const ZCircuit&)>& fn);
void enumerate_x_circuits(int k, const std::function<void(const XCircuit&)>& fn);
uint64_t enumerate_normal_forms(int n, const std::function<void(const NormalForm&)>& fn);

/// Size of the closure of {-1, H_i, Z_i, CZ_ij} under composition, by
/// breadth-first search over operator fingerprints.
uint64_t bfs_closure_order(int n);

struct BijectionReport {
    int n = 0;
    uint64_t enumerated = 0;
    uint64_t distinct = 0;
    bool enumerated_matches_formula = false;
    bool all_distinct = false;
    std::optional<uint64_t> bfs_order;  // filled for n <= 2
    bool bfs_matches = true;
    /// Ordinals of a genuinely colliding pair, if any.
    std::optional<std::pair<uint64_t, uint64_t>> collision;

    bool ok() const { return enumerated_matches_formula && all_distinct && bfs_matches; }
};

/// Enumerates every normal form, checks pairwise-distinct fingerprints and
/// that the count equals the closed form (and the BFS closure at n <= 2).
BijectionReport verify_bijection(int n);

}  // namespace rstab

#endif
