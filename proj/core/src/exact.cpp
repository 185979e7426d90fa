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

#include "rstab/exact.hpp"

#include <stdexcept>

namespace rstab {

namespace {

// Wire 0 is the top wire / leftmost tensor factor, i.e. the most significant
// index bit.
size_t wire_mask(int n, int wire) {
    return size_t{1} << (n - 1 - wire);
}

void apply_primitive_gate(const Gate& g, int n, ExactVector& v) {
    switch (g.kind) {
        case GateKind::MinusOne:
            for (auto& e : v) e = -e;
            return;
        case GateKind::Z: {
            size_t m = wire_mask(n, g.q);
            for (size_t i = 0; i < v.size(); ++i) {
                if (i & m) v[i] = -v[i];
            }
            return;
        }
        case GateKind::CZ: {
            size_t m = wire_mask(n, g.q) | wire_mask(n, g.r);
            for (size_t i = 0; i < v.size(); ++i) {
                if ((i & m) == m) v[i] = -v[i];
            }
            return;
        }
        case GateKind::H: {
            size_t m = wire_mask(n, g.q);
            const RootTwoScalar inv = RootTwoScalar::inv_sqrt2();
            for (size_t i = 0; i < v.size(); ++i) {
                if (i & m) continue;
                RootTwoScalar lo = v[i], hi = v[i | m];
                v[i] = (lo + hi) * inv;
                v[i | m] = (lo - hi) * inv;
            }
            return;
        }
        default:
            throw std::logic_error("apply_primitive_gate: non-primitive gate");
    }
}

void check_cap(int n, int matrix_cap) {
    if (n > matrix_cap) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " exceeds the exact-matrix cap " + std::to_string(matrix_cap));
    }
}

}  // namespace

ExactMatrix ExactMatrix::identity(size_t dim) {
    ExactMatrix m(dim);
    for (size_t i = 0; i < dim; ++i) m.at(i, i) = RootTwoScalar::one();
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix m(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t c = 0; c < dim_; ++c) m.at(c, r) = at(r, c);
    }
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    ExactMatrix m(a.dim());
    for (size_t r = 0; r < a.dim(); ++r) {
        for (size_t c = 0; c < a.dim(); ++c) {
            RootTwoScalar acc;
            for (size_t k = 0; k < a.dim(); ++k) acc += a.at(r, k) * b.at(k, c);
            m.at(r, c) = acc;
        }
    }
    return m;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix m = *this;
    for (auto& e : m.a_) e = -e;
    return m;
}

bool ExactMatrix::is_orthogonal() const {
    return transpose() * *this == identity(dim_);
}

std::string ExactMatrix::str() const {
    std::string out;
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t c = 0; c < dim_; ++c) {
            if (c) out += '\t';
            out += at(r, c).str();
        }
        out += '\n';
    }
    return out;
}

ExactMatrix gate_matrix(const Gate& g) {
    if (g.kind == GateKind::MinusOne) return -ExactMatrix::identity(2);
    std::vector<int> wires = gate_wires(g);
    int lo = wires[0], hi = wires[0];
    for (int w : wires) {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    Gate shifted = g;
    shifted.q -= lo;
    if (shifted.r >= 0) shifted.r -= lo;
    Circuit c;
    c.n_qubits = hi - lo + 1;
    c.push(shifted);
    return circuit_matrix(c);
}

ExactMatrix circuit_matrix(const Circuit& c, int matrix_cap) {
    check_cap(c.n_qubits, matrix_cap);
    Circuit prim = expand_all(c);
    size_t dim = size_t{1} << c.n_qubits;
    ExactMatrix m(dim);
    for (size_t col = 0; col < dim; ++col) {
        ExactVector v(dim);
        v[col] = RootTwoScalar::one();
        for (const Gate& g : prim.gates) apply_primitive_gate(g, c.n_qubits, v);
        for (size_t row = 0; row < dim; ++row) m.at(row, col) = v[row];
    }
    return m;
}

void apply_gate_to_vector(const Gate& g, int n, ExactVector& v) {
    if (is_primitive_gate(g.kind)) {
        apply_primitive_gate(g, n, v);
        return;
    }
    for (const Gate& e : expand(g)) apply_gate_to_vector(e, n, v);
}

ExactVector apply_to_basis_state(const Circuit& c, size_t index, int matrix_cap) {
    check_cap(c.n_qubits, matrix_cap);
    size_t dim = size_t{1} << c.n_qubits;
    if (index >= dim) throw std::invalid_argument("basis index out of range");
    Circuit prim = expand_all(c);
    ExactVector v(dim);
    v[index] = RootTwoScalar::one();
    for (const Gate& g : prim.gates) apply_primitive_gate(g, c.n_qubits, v);
    return v;
}

ExactMatrix conjugate(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
    if (!a.is_orthogonal()) throw std::invalid_argument("conjugate: matrix is not orthogonal");
    return a * b * a.transpose();
}

ExactMatrix pauli_matrix(const PauliOperator& p) {
    size_t n = p.size();
    size_t dim = size_t{1} << n;
    size_t xmask = 0, zmask = 0;
    for (size_t w = 0; w < n; ++w) {
        if (p.letter(w).x) xmask |= wire_mask(static_cast<int>(n), static_cast<int>(w));
        if (p.letter(w).z) zmask |= wire_mask(static_cast<int>(n), static_cast<int>(w));
    }
    ExactMatrix m(dim);
    for (size_t col = 0; col < dim; ++col) {
        int s = p.sign();
        if (__builtin_parityll(col & zmask)) s = -s;
        m.at(col ^ xmask, col) = RootTwoScalar(s);
    }
    return m;
}

std::optional<PauliOperator> matrix_to_signed_pauli(const ExactMatrix& m) {
    size_t dim = m.dim();
    if (dim == 0 || (dim & (dim - 1)) != 0) return std::nullopt;
    size_t n = 0;
    while ((size_t{1} << n) < dim) ++n;

    // Column 0 must be +-e_xmask.
    size_t xmask = dim;
    for (size_t row = 0; row < dim; ++row) {
        if (!m.at(row, 0).is_zero()) {
            if (xmask != dim) return std::nullopt;
            xmask = row;
        }
    }
    if (xmask == dim) return std::nullopt;
    RootTwoScalar head = m.at(xmask, 0);
    int sign;
    if (head == RootTwoScalar::one()) {
        sign = +1;
    } else if (head == -RootTwoScalar::one()) {
        sign = -1;
    } else {
        return std::nullopt;
    }

    PauliOperator p = PauliOperator::identity(n);
    p.set_sign(sign);
    for (size_t w = 0; w < n; ++w) {
        size_t bit = wire_mask(static_cast<int>(n), static_cast<int>(w));
        uint8_t x = (xmask & bit) ? 1 : 0;
        const RootTwoScalar& e = m.at(bit ^ xmask, bit);
        uint8_t z;
        if (e == head) {
            z = 0;
        } else if (e == -head) {
            z = 1;
        } else {
            return std::nullopt;
        }
        p.set_letter(w, PauliLetter{x, z});
    }
    if (pauli_matrix(p) == m) return p;
    return std::nullopt;
}

std::string format_exact_vector(const ExactVector& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += '\t';
        out += v[i].str();
    }
    return out;
}

}  // namespace rstab
