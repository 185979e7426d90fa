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

#include "rstab/tableau.hpp"

#include <stdexcept>

namespace rstab {

Tableau Tableau::identity(size_t n) {
    Tableau t;
    t.z_img_.reserve(n);
    t.x_img_.reserve(n);
    for (size_t w = 0; w < n; ++w) {
        t.z_img_.push_back(PauliOperator::single(n, w, kZ));
        t.x_img_.push_back(PauliOperator::single(n, w, kX));
    }
    return t;
}

Tableau Tableau::of_gate(const Gate& g, size_t n) {
    Tableau t = identity(n);
    switch (g.kind) {
        case GateKind::MinusOne:
            return t;
        case GateKind::H: {
            std::swap(t.z_img_[g.q], t.x_img_[g.q]);
            return t;
        }
        case GateKind::Z: {
            t.x_img_[g.q] = -t.x_img_[g.q];
            return t;
        }
        case GateKind::CZ: {
            t.x_img_[g.q] = t.x_img_[g.q] * PauliOperator::single(n, g.r, kZ);
            t.x_img_[g.r] = PauliOperator::single(n, g.q, kZ) * t.x_img_[g.r];
            return t;
        }
        default: {
            // Derived and generator gates: compose the expansion.
            for (const Gate& e : expand(g)) t = of_gate(e, n).compose(t);
            return t;
        }
    }
}

Tableau Tableau::from_images(std::vector<PauliOperator> z_images,
                             std::vector<PauliOperator> x_images) {
    if (z_images.size() != x_images.size()) throw std::invalid_argument("image count mismatch");
    for (const auto& p : z_images) {
        if (p.size() != z_images.size()) throw std::invalid_argument("image length mismatch");
    }
    for (const auto& p : x_images) {
        if (p.size() != x_images.size()) throw std::invalid_argument("image length mismatch");
    }
    Tableau t;
    t.z_img_ = std::move(z_images);
    t.x_img_ = std::move(x_images);
    return t;
}

Tableau Tableau::of_circuit(const Circuit& c) {
    validate_circuit(c);
    Tableau t = identity(c.n_qubits);
    for (const Gate& g : c.gates) t = of_gate(g, c.n_qubits).compose(t);
    return t;
}

Tableau Tableau::compose(const Tableau& other) const {
    if (n() != other.n()) throw std::invalid_argument("tableau size mismatch");
    Tableau t;
    t.z_img_.reserve(n());
    t.x_img_.reserve(n());
    for (size_t w = 0; w < n(); ++w) {
        t.z_img_.push_back(apply(other.z_img_[w]));
        t.x_img_.push_back(apply(other.x_img_[w]));
    }
    return t;
}

PauliOperator Tableau::apply(const PauliOperator& p) const {
    if (p.size() != n()) throw std::invalid_argument("tableau/pauli size mismatch");
    PauliOperator out = PauliOperator::identity(n());
    out.set_sign(p.sign());
    for (size_t w = 0; w < n(); ++w) {
        PauliLetter l = p.letter(w);
        if (l.x) out = out * x_img_[w];
        if (l.z) out = out * z_img_[w];
    }
    return out;
}

Tableau Tableau::inverse() const {
    const size_t n2 = 2 * n();
    // Columns are the symplectic coordinates of the generator images; solve
    // the GF(2) system to find each generator's preimage word.
    std::vector<std::vector<uint8_t>> m(n2, std::vector<uint8_t>(2 * n2, 0));
    auto coords = [&](const PauliOperator& p, size_t col) {
        for (size_t w = 0; w < n(); ++w) {
            m[w][col] = p.letter(w).x;
            m[n() + w][col] = p.letter(w).z;
        }
    };
    for (size_t w = 0; w < n(); ++w) {
        coords(x_img_[w], w);
        coords(z_img_[w], n() + w);
    }
    for (size_t i = 0; i < n2; ++i) m[i][n2 + i] = 1;

    // Gauss-Jordan over GF(2).
    size_t row = 0;
    for (size_t col = 0; col < n2 && row < n2; ++col) {
        size_t pivot = row;
        while (pivot < n2 && !m[pivot][col]) ++pivot;
        if (pivot == n2) continue;
        std::swap(m[pivot], m[row]);
        for (size_t r = 0; r < n2; ++r) {
            if (r != row && m[r][col]) {
                for (size_t c2 = 0; c2 < 2 * n2; ++c2) m[r][c2] ^= m[row][c2];
            }
        }
        ++row;
    }
    if (row != n2) throw std::invalid_argument("tableau is singular");

    auto preimage = [&](const PauliOperator& target) {
        // target is a bare generator; its coordinate vector selects a column
        // of the inverse matrix.
        size_t col = 0;
        bool found = false;
        for (size_t w = 0; w < n(); ++w) {
            if (target.letter(w).x) {
                col = w;
                found = true;
            }
            if (target.letter(w).z) {
                col = n() + w;
                found = true;
            }
        }
        if (!found) throw std::logic_error("preimage of identity generator");
        PauliOperator word = PauliOperator::identity(n());
        for (size_t i = 0; i < n2; ++i) {
            if (!m[i][n2 + col]) continue;
            word = word * (i < n() ? PauliOperator::single(n(), i, kX)
                                   : PauliOperator::single(n(), i - n(), kZ));
        }
        PauliOperator image = apply(word);
        if (image.letters() != target.letters()) {
            throw std::logic_error("tableau inverse: preimage check failed");
        }
        if (image.sign() != target.sign()) word = -word;
        return word;
    };

    Tableau inv;
    inv.z_img_.reserve(n());
    inv.x_img_.reserve(n());
    for (size_t w = 0; w < n(); ++w) {
        inv.z_img_.push_back(preimage(PauliOperator::single(n(), w, kZ)));
        inv.x_img_.push_back(preimage(PauliOperator::single(n(), w, kX)));
    }
    return inv;
}

bool Tableau::is_pauli_automorphism() const {
    for (size_t w = 0; w < n(); ++w) {
        if (!z_img_[w].squares_to_identity()) return false;
        if (!x_img_[w].squares_to_identity()) return false;
    }
    for (size_t i = 0; i < n(); ++i) {
        for (size_t j = 0; j < n(); ++j) {
            if (!PauliOperator::commutes(z_img_[i], z_img_[j])) return false;
            if (!PauliOperator::commutes(x_img_[i], x_img_[j])) return false;
            bool same = i == j;
            if (PauliOperator::commutes(z_img_[i], x_img_[j]) == same) return false;
        }
    }
    return true;
}

uint64_t Tableau::pack64() const {
    if (n() > 3) throw std::invalid_argument("pack64 supports n <= 3 only");
    uint64_t out = 0;
    int bit = 0;
    auto put = [&](const PauliOperator& p) {
        for (size_t w = 0; w < n(); ++w) {
            out |= uint64_t{p.letter(w).x} << bit++;
            out |= uint64_t{p.letter(w).z} << bit++;
        }
        out |= uint64_t{p.sign() < 0} << bit++;
    };
    for (size_t w = 0; w < n(); ++w) {
        put(z_img_[w]);
        put(x_img_[w]);
    }
    // A set high bit keeps packings of different sizes distinct.
    out |= uint64_t{1} << 63;
    return out;
}

std::string Tableau::key() const {
    std::string s;
    s.reserve(2 * n() * (n() + 1));
    auto put = [&](const PauliOperator& p) {
        s.push_back(p.sign() < 0 ? '-' : '+');
        for (size_t w = 0; w < n(); ++w) {
            s.push_back(static_cast<char>('0' + (p.letter(w).x << 1 | p.letter(w).z)));
        }
    };
    for (size_t w = 0; w < n(); ++w) {
        put(z_img_[w]);
        put(x_img_[w]);
    }
    return s;
}

uint64_t OperatorFingerprint::digest() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (char c : tableau.key()) mix(static_cast<unsigned char>(c));
    for (const RootTwoScalar& s : column0) {
        mix(static_cast<uint64_t>(s.numerator()));
        mix(static_cast<uint64_t>(s.half_power()));
    }
    return h;
}

OperatorFingerprint fingerprint(const Circuit& c, int matrix_cap) {
    return OperatorFingerprint{Tableau::of_circuit(c), apply_to_basis_state(c, 0, matrix_cap)};
}

}  // namespace rstab
