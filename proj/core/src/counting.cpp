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

#include "rstab/counting.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "json.hpp"

namespace rstab {

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

void require_positive(int n) {
    if (n < 1) throw std::invalid_argument("counting requires n >= 1");
}

}  // namespace

mpz_class count_z_circuits(int n) {
    require_positive(n);
    return pow2(2 * n) + pow2(n) - 2;
}

mpz_class count_z_circuits_simple_start(int n) {
    require_positive(n);
    mpz_class sum = 0;
    for (int m = 1; m <= n; ++m) sum += pow2(m - 1) * (pow2(m) + 2);
    return sum;
}

mpz_class count_z_circuits_double_start(int n) {
    require_positive(n);
    mpz_class sum = 0;
    // The m = 1 term is 2^(-1) * 0 = 0; start the integer sum at m = 2.
    for (int m = 2; m <= n; ++m) sum += pow2(m - 2) * (pow2(m) - 2);
    return sum;
}

mpz_class count_x_circuits(int n) {
    require_positive(n);
    return 2 * pow2(2 * (n - 1));
}

mpz_class clifford_order(int n) {
    if (n < 0) throw std::invalid_argument("clifford_order requires n >= 0");
    mpz_class order = 2;
    for (int i = 1; i <= n; ++i) order *= count_z_circuits(i) * count_x_circuits(i);
    return order;
}

CountReport count_report(int n) {
    CountReport r;
    r.n = n;
    r.z_count = count_z_circuits(n);
    r.z_count_simple_start = count_z_circuits_simple_start(n);
    r.z_count_double_start = count_z_circuits_double_start(n);
    r.x_count = count_x_circuits(n);
    r.order = clifford_order(n);
    return r;
}

std::string count_report_to_json(const CountReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["z_count"] = r.z_count.get_str();
    j["z_count_simple_start"] = r.z_count_simple_start.get_str();
    j["z_count_double_start"] = r.z_count_double_start.get_str();
    j["x_count"] = r.x_count.get_str();
    j["clifford_order"] = r.order.get_str();
    if (r.enumerated_distinct) j["enumerated_distinct"] = r.enumerated_distinct->get_str();
    return j.dump();
}

void enumerate_z_circuits(int k, const std::function<void(const ZCircuit&)>& fn) {
    require_positive(k);
    ZCircuit z;
    // Recursive ladder walk over the color-chained B choices.
    std::function<void(int, WireColor)> climb = [&](int rungs_left, WireColor track) {
        if (rungs_left == 0) {
            if (track != WireColor::SimpleT) return;
            for (GateKind c : {GateKind::C1, GateKind::C2}) {
                z.c = c;
                fn(z);
            }
            return;
        }
        const auto& group =
            track == WireColor::SimpleT
                ? std::array<GateKind, 4>{GateKind::B1, GateKind::B2, GateKind::B3, GateKind::B4}
                : std::array<GateKind, 4>{GateKind::B5, GateKind::B6, GateKind::B7, GateKind::B8};
        for (GateKind b : group) {
            z.bs.push_back(b);
            climb(rungs_left - 1, signature(b).out[0]);
            z.bs.pop_back();
        }
    };
    for (int m = k - 1; m >= 0; --m) {
        z.start_wire = m;
        for (GateKind a : {GateKind::A1, GateKind::A2, GateKind::A3}) {
            z.a = a;
            z.bs.clear();
            climb(m, signature(a).out[0]);
        }
    }
}

void enumerate_x_circuits(int k, const std::function<void(const XCircuit&)>& fn) {
    require_positive(k);
    XCircuit x;
    std::function<void(int)> descend = [&](int rungs_left) {
        if (rungs_left == 0) {
            for (GateKind e : {GateKind::E1, GateKind::E2}) {
                x.e = e;
                fn(x);
            }
            return;
        }
        for (GateKind d : {GateKind::D1, GateKind::D2, GateKind::D3, GateKind::D4}) {
            x.ds.push_back(d);
            descend(rungs_left - 1);
            x.ds.pop_back();
        }
    };
    descend(k - 1);
}

uint64_t enumerate_normal_forms(int n, const std::function<void(const NormalForm&)>& fn) {
    if (n < 0) throw std::invalid_argument("enumerate_normal_forms requires n >= 0");
    uint64_t count = 0;
    NormalForm nf;
    nf.n = n;
    nf.stages.resize(n);
    std::function<void(int)> per_stage = [&](int depth) {
        if (depth == n) {
            ++count;
            if (fn) fn(nf);
            return;
        }
        int k = n - depth;
        enumerate_z_circuits(k, [&](const ZCircuit& z) {
            nf.stages[depth].z = z;
            enumerate_x_circuits(k, [&](const XCircuit& x) {
                nf.stages[depth].x = x;
                per_stage(depth + 1);
            });
        });
    };
    for (int sign : {+1, -1}) {
        nf.sign = sign;
        per_stage(0);
    }
    return count;
}

namespace {

std::string operator_key(const Tableau& t, const ExactVector& col0) {
    std::string key = t.key();
    key.push_back('|');
    for (const RootTwoScalar& s : col0) {
        key += std::to_string(s.numerator());
        key.push_back(':');
        key += std::to_string(s.half_power());
        key.push_back(',');
    }
    return key;
}

}  // namespace

uint64_t bfs_closure_order(int n) {
    if (n < 1) throw std::invalid_argument("bfs_closure_order requires n >= 1");
    std::vector<Gate> generators;
    generators.push_back(Gate{GateKind::MinusOne});
    for (int q = 0; q < n; ++q) {
        generators.push_back(Gate{GateKind::H, q});
        generators.push_back(Gate{GateKind::Z, q});
    }
    for (int q = 0; q < n; ++q) {
        for (int r = q + 1; r < n; ++r) generators.push_back(Gate{GateKind::CZ, q, r});
    }

    struct State {
        Tableau tab;
        ExactVector col0;
    };
    std::vector<Tableau> gen_tabs;
    for (const Gate& g : generators) gen_tabs.push_back(Tableau::of_gate(g, n));

    State start{Tableau::identity(n), ExactVector(size_t{1} << n)};
    start.col0[0] = RootTwoScalar::one();

    std::unordered_set<std::string> seen;
    seen.insert(operator_key(start.tab, start.col0));
    std::vector<State> frontier{std::move(start)};
    while (!frontier.empty()) {
        std::vector<State> next;
        for (const State& s : frontier) {
            for (size_t gi = 0; gi < generators.size(); ++gi) {
                State t{gen_tabs[gi].compose(s.tab), s.col0};
                apply_gate_to_vector(generators[gi], n, t.col0);
                std::string key = operator_key(t.tab, t.col0);
                if (seen.insert(std::move(key)).second) next.push_back(std::move(t));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

BijectionReport verify_bijection(int n) {
    require_positive(n);
    BijectionReport rep;
    rep.n = n;

    std::vector<std::pair<uint64_t, uint64_t>> digests;  // (digest, ordinal)
    uint64_t ordinal = 0;
    enumerate_normal_forms(n, [&](const NormalForm& nf) {
        Circuit c = nf_to_circuit(nf);
        OperatorFingerprint fp = fingerprint(c);
        digests.emplace_back(fp.digest(), ordinal++);
    });
    rep.enumerated = digests.size();
    rep.enumerated_matches_formula = mpz_class(static_cast<unsigned long>(rep.enumerated)) ==
                                     clifford_order(n);

    std::sort(digests.begin(), digests.end());
    std::unordered_set<uint64_t> suspect_ordinals;
    for (size_t i = 0; i + 1 < digests.size(); ++i) {
        if (digests[i].first == digests[i + 1].first) {
            suspect_ordinals.insert(digests[i].second);
            suspect_ordinals.insert(digests[i + 1].second);
        }
    }

    uint64_t real_collisions = 0;
    if (!suspect_ordinals.empty()) {
        // Digest ties: recheck the involved forms with full fingerprints.
        std::unordered_map<uint64_t, std::vector<std::pair<uint64_t, OperatorFingerprint>>>
            by_digest;
        uint64_t ord = 0;
        enumerate_normal_forms(n, [&](const NormalForm& nf) {
            uint64_t me = ord++;
            if (!suspect_ordinals.count(me)) return;
            OperatorFingerprint fp = fingerprint(nf_to_circuit(nf));
            auto& bucket = by_digest[fp.digest()];
            for (const auto& [other, other_fp] : bucket) {
                if (other_fp == fp) {
                    ++real_collisions;
                    if (!rep.collision) rep.collision = {other, me};
                    return;
                }
            }
            bucket.emplace_back(me, std::move(fp));
        });
    }
    rep.distinct = rep.enumerated - real_collisions;
    rep.all_distinct = real_collisions == 0;

    if (n <= 2) {
        rep.bfs_order = bfs_closure_order(n);
        rep.bfs_matches = mpz_class(static_cast<unsigned long>(*rep.bfs_order)) ==
                          clifford_order(n);
    }
    return rep;
}

}  // namespace rstab
