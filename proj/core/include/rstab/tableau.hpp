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

#ifndef RSTAB_TABLEAU_HPP
#define RSTAB_TABLEAU_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rstab/circuit.hpp"
#include "rstab/exact.hpp"
#include "rstab/pauli.hpp"

namespace rstab {

/// The conjugation action of an operator on the Pauli group: the signed
/// images of each single-wire Z and X generator. Two operators share a
/// tableau iff they agree up to a global factor of -1.
class Tableau {
  public:
    Tableau() = default;

    static Tableau identity(size_t n);
    /// Action of a single gate embedded on n wires. Primitive actions are
    /// hard-coded; derived and generator gates go through their expansions.
    static Tableau of_gate(const Gate& g, size_t n);
    static Tableau of_circuit(const Circuit& c);
    static Tableau from_images(std::vector<PauliOperator> z_images,
                               std::vector<PauliOperator> x_images);

    size_t n() const { return z_img_.size(); }
    const PauliOperator& z_image(size_t wire) const { return z_img_[wire]; }
    const PauliOperator& x_image(size_t wire) const { return x_img_[wire]; }

    /// Action of (this o other): other's substitution first.
    Tableau compose(const Tableau& other) const;
    Tableau inverse() const;

    /// Rewrites p over the generators and substitutes their images with full
    /// sign bookkeeping.
    PauliOperator apply(const PauliOperator& p) const;

    /// True iff the images satisfy the two structural invariants (letter
    /// parity of each image, symplectic commutation pattern), i.e. iff the
    /// tableau is realizable as a conjugation action.
    bool is_pauli_automorphism() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

    /// Bit-packed key, usable for n <= 3 (throws otherwise).
    uint64_t pack64() const;
    /// Serialized key usable at any size.
    std::string key() const;

  private:
    std::vector<PauliOperator> z_img_, x_img_;
};

/// Canonical identity of an operator: the tableau plus the exact image of
/// e_0, which pins down the global sign.
struct OperatorFingerprint {
    Tableau tableau;
    ExactVector column0;

    friend bool operator==(const OperatorFingerprint&, const OperatorFingerprint&) = default;
    uint64_t digest() const;
};

OperatorFingerprint fingerprint(const Circuit& c, int matrix_cap = kDefaultMatrixCap);

}  // namespace rstab

#endif
