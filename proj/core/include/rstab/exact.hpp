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

#ifndef RSTAB_EXACT_HPP
#define RSTAB_EXACT_HPP

#include <optional>
#include <string>
#include <vector>

#include "rstab/circuit.hpp"
#include "rstab/pauli.hpp"
#include "rstab/root2.hpp"

namespace rstab {

using ExactVector = std::vector<RootTwoScalar>;

/// Dense 2^n x 2^n matrix over the a/sqrt2^k ring. This is a desk-scale
/// oracle for validating the symbolic machinery, not a simulator.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    explicit ExactMatrix(size_t dim) : dim_(dim), a_(dim * dim) {}

    static ExactMatrix identity(size_t dim);

    size_t dim() const { return dim_; }
    RootTwoScalar& at(size_t row, size_t col) { return a_[row * dim_ + col]; }
    const RootTwoScalar& at(size_t row, size_t col) const { return a_[row * dim_ + col]; }

    ExactMatrix transpose() const;
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    ExactMatrix operator-() const;
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    bool is_orthogonal() const;  // M^T M == I, exact

    /// Row-major, tab-separated entries (see RootTwoScalar::str).
    std::string str() const;

  private:
    size_t dim_ = 0;
    std::vector<RootTwoScalar> a_;
};

inline constexpr int kDefaultMatrixCap = 10;

/// Exact matrix of a single gate on its minimal ambient wire span (2x2 for
/// one-qubit gates, 4x4 for adjacent pair gates, larger for distant CZ legs).
ExactMatrix gate_matrix(const Gate& g);

/// Product of per-gate matrices with the first gate in circuit order applied
/// first to states. Throws std::invalid_argument when n exceeds the cap.
ExactMatrix circuit_matrix(const Circuit& c, int matrix_cap = kDefaultMatrixCap);

/// Exact image of the standard basis vector e_index, computed gate by gate.
ExactVector apply_to_basis_state(const Circuit& c, size_t index,
                                 int matrix_cap = kDefaultMatrixCap);

/// In-place exact application of one gate to a state vector on n wires.
void apply_gate_to_vector(const Gate& g, int n, ExactVector& v);

/// A B A^T; a must be orthogonal (checked).
ExactMatrix conjugate(const ExactMatrix& a, const ExactMatrix& b);

ExactMatrix pauli_matrix(const PauliOperator& p);

/// The unique signed Pauli word whose matrix equals m, if any.
std::optional<PauliOperator> matrix_to_signed_pauli(const ExactMatrix& m);

std::string format_exact_vector(const ExactVector& v);

}  // namespace rstab

#endif
