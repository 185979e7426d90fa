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

#include "rstab/pauli.hpp"

#include <stdexcept>

namespace rstab {

SignedLetter letter_mul(PauliLetter a, PauliLetter b) {
    int sign = (a.z & b.x) ? -1 : +1;
    PauliLetter out{static_cast<uint8_t>(a.x ^ b.x), static_cast<uint8_t>(a.z ^ b.z)};
    return {sign, out};
}

std::string letter_name(PauliLetter l) {
    if (l == kI) return "I";
    if (l == kX) return "X";
    if (l == kZ) return "Z";
    return "XZ";
}

PauliOperator::PauliOperator(int sign, std::vector<PauliLetter> letters)
    : letters_(std::move(letters)) {
    set_sign(sign);
}

PauliOperator PauliOperator::identity(size_t n) {
    return PauliOperator(+1, std::vector<PauliLetter>(n, kI));
}

PauliOperator PauliOperator::single(size_t n, size_t wire, PauliLetter letter, int sign) {
    if (wire >= n) throw std::invalid_argument("pauli wire out of range");
    PauliOperator p = identity(n);
    p.set_letter(wire, letter);
    p.set_sign(sign);
    return p;
}

void PauliOperator::set_sign(int s) {
    if (s != 1 && s != -1) throw std::invalid_argument("pauli sign must be +1 or -1");
    sign_ = static_cast<int8_t>(s);
}

bool PauliOperator::is_identity_word() const {
    for (PauliLetter l : letters_) {
        if (!(l == kI)) return false;
    }
    return true;
}

PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
    if (p.size() != q.size()) throw std::invalid_argument("pauli length mismatch");
    PauliOperator out;
    out.letters_.resize(p.size());
    int sign = p.sign_ * q.sign_;
    for (size_t i = 0; i < p.size(); ++i) {
        SignedLetter sl = letter_mul(p.letters_[i], q.letters_[i]);
        sign *= sl.sign;
        out.letters_[i] = sl.letter;
    }
    out.sign_ = static_cast<int8_t>(sign);
    return out;
}

PauliOperator PauliOperator::operator-() const {
    PauliOperator out = *this;
    out.sign_ = static_cast<int8_t>(-out.sign_);
    return out;
}

bool PauliOperator::squares_to_identity() const {
    size_t xz_count = 0;
    for (PauliLetter l : letters_) {
        if (l == kXZ) ++xz_count;
    }
    return xz_count % 2 == 0;
}

bool PauliOperator::commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.size() != q.size()) throw std::invalid_argument("pauli length mismatch");
    unsigned acc = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        acc ^= (p.letters_[i].x & q.letters_[i].z) ^ (p.letters_[i].z & q.letters_[i].x);
    }
    return acc == 0;
}

PauliOperator PauliOperator::tensor(const PauliOperator& q) const {
    PauliOperator out;
    out.sign_ = static_cast<int8_t>(sign_ * q.sign_);
    out.letters_ = letters_;
    out.letters_.insert(out.letters_.end(), q.letters_.begin(), q.letters_.end());
    return out;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    int sign = +1;
    if (!text.empty() && text.front() == '-') {
        sign = -1;
        text.remove_prefix(1);
    }
    std::vector<PauliLetter> letters;
    size_t start = 0;
    auto take = [&](std::string_view tok) {
        if (tok == "I") return kI;
        if (tok == "X") return kX;
        if (tok == "Z") return kZ;
        if (tok == "XZ") return kXZ;
        throw std::invalid_argument("bad pauli letter: '" + std::string(tok) + "'");
    };
    if (text.empty()) throw std::invalid_argument("empty pauli word");
    while (start <= text.size()) {
        size_t dot = text.find('.', start);
        std::string_view tok =
            dot == std::string_view::npos ? text.substr(start) : text.substr(start, dot - start);
        letters.push_back(take(tok));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return PauliOperator(sign, std::move(letters));
}

std::string PauliOperator::str() const {
    std::string out;
    if (sign_ < 0) out += '-';
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += '.';
        out += letter_name(letters_[i]);
    }
    return out;
}

}  // namespace rstab
