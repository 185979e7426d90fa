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

#ifndef RSTAB_PAULI_HPP
#define RSTAB_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rstab {

/// One tensor factor of a real Pauli word: X^x Z^z.
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=XZ (the matrix product X*Z).
struct PauliLetter {
    uint8_t x = 0;
    uint8_t z = 0;

    friend bool operator==(PauliLetter a, PauliLetter b) = default;
};

inline constexpr PauliLetter kI{0, 0};
inline constexpr PauliLetter kX{1, 0};
inline constexpr PauliLetter kZ{0, 1};
inline constexpr PauliLetter kXZ{1, 1};

struct SignedLetter {
    int sign;  // +1 or -1
    PauliLetter letter;
};

/// Exact product of two letters: X^x1 Z^z1 * X^x2 Z^z2 = (-1)^(z1*x2) X^(x1^x2) Z^(z1^z2).
SignedLetter letter_mul(PauliLetter a, PauliLetter b);

std::string letter_name(PauliLetter l);

/// A signed word over {I, X, Z, XZ}; index 0 is the top wire (leftmost tensor factor).
class PauliOperator {
  public:
    PauliOperator() = default;
    PauliOperator(int sign, std::vector<PauliLetter> letters);

    static PauliOperator identity(size_t n);
    /// sign * (I ... letter-at-wire ... I) on n wires.
    static PauliOperator single(size_t n, size_t wire, PauliLetter letter, int sign = +1);

    size_t size() const { return letters_.size(); }
    int sign() const { return sign_; }
    PauliLetter letter(size_t i) const { return letters_[i]; }
    const std::vector<PauliLetter>& letters() const { return letters_; }

    void set_sign(int s);
    void set_letter(size_t i, PauliLetter l) { letters_[i] = l; }

    bool is_identity_word() const;  // all letters I, either sign

    /// Letter-wise product with accumulated sign. Throws std::invalid_argument on
    /// length mismatch.
    friend PauliOperator operator*(const PauliOperator& p, const PauliOperator& q);
    PauliOperator operator-() const;

    /// True iff p*p = +I, i.e. the number of XZ letters is even.
    bool squares_to_identity() const;

    /// True iff the symplectic form sum_i (x_i^p z_i^q + z_i^p x_i^q) is even.
    /// Throws std::invalid_argument on length mismatch.
    static bool commutes(const PauliOperator& p, const PauliOperator& q);

    PauliOperator tensor(const PauliOperator& q) const;

    /// Text format: optional leading '-', letters I/X/Z/XZ joined by '.'.
    /// Examples: "Z", "-Z.XZ.I". Throws std::invalid_argument on malformed input.
    static PauliOperator parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

  private:
    int8_t sign_ = +1;
    std::vector<PauliLetter> letters_;
};

}  // namespace rstab

#endif
