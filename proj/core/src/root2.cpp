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

#include "rstab/root2.hpp"

#include <limits>
#include <stdexcept>

namespace rstab {

namespace {

int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min()) {
        throw std::overflow_error("RootTwoScalar numerator out of range");
    }
    return static_cast<int64_t>(v);
}

// a * 2^(e/2) for even nonnegative e.
int64_t shift_up(int64_t a, int e) {
    __int128 v = a;
    for (int i = 0; i < e / 2; ++i) v *= 2;
    return narrow(v);
}

}  // namespace

RootTwoScalar RootTwoScalar::make(int64_t numerator, int half_power) {
    if (half_power < 0) throw std::invalid_argument("half_power must be nonnegative");
    RootTwoScalar s;
    s.num_ = numerator;
    s.pow_ = half_power;
    s.canonicalize();
    return s;
}

void RootTwoScalar::canonicalize() {
    if (num_ == 0) {
        pow_ = 0;
        return;
    }
    while (pow_ >= 2 && num_ % 2 == 0) {
        num_ /= 2;
        pow_ -= 2;
    }
}

RootTwoScalar RootTwoScalar::operator-() const {
    RootTwoScalar s = *this;
    s.num_ = -s.num_;
    return s;
}

RootTwoScalar operator+(const RootTwoScalar& a, const RootTwoScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int k = a.pow_ > b.pow_ ? a.pow_ : b.pow_;
    // Entries mixed in one sum always share the parity of k; a mismatch would
    // mean the value has left the ring.
    if ((k - a.pow_) % 2 != 0 || (k - b.pow_) % 2 != 0) {
        throw std::domain_error("RootTwoScalar sum leaves the a/sqrt2^k ring");
    }
    __int128 s = static_cast<__int128>(shift_up(a.num_, k - a.pow_)) +
                 static_cast<__int128>(shift_up(b.num_, k - b.pow_));
    return RootTwoScalar::make(narrow(s), k);
}

RootTwoScalar operator-(const RootTwoScalar& a, const RootTwoScalar& b) {
    return a + (-b);
}

RootTwoScalar operator*(const RootTwoScalar& a, const RootTwoScalar& b) {
    __int128 p = static_cast<__int128>(a.num_) * b.num_;
    RootTwoScalar s;
    s.num_ = narrow(p);
    s.pow_ = a.pow_ + b.pow_;
    s.canonicalize();
    return s;
}

std::string RootTwoScalar::str() const {
    if (pow_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/r^" + std::to_string(pow_);
}

}  // namespace rstab
