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

#ifndef RSTAB_ROOT2_HPP
#define RSTAB_ROOT2_HPP

#include <cstdint>
#include <string>

namespace rstab {

/// An element a / sqrt(2)^k of the ring generated by 1/sqrt(2), held in the
/// canonical form where no reduction (a, k) -> (a/2, k-2) is possible and zero
/// is (0, 0). All arithmetic is exact; numerators that would leave the int64
/// range throw std::overflow_error instead of wrapping.
class RootTwoScalar {
  public:
    RootTwoScalar() = default;
    RootTwoScalar(int64_t integer) : num_(integer) { canonicalize(); }

    static RootTwoScalar make(int64_t numerator, int half_power);
    static RootTwoScalar zero() { return RootTwoScalar(); }
    static RootTwoScalar one() { return RootTwoScalar(1); }
    /// 1 / sqrt(2).
    static RootTwoScalar inv_sqrt2() { return make(1, 1); }

    int64_t numerator() const { return num_; }
    int half_power() const { return pow_; }
    bool is_zero() const { return num_ == 0; }

    RootTwoScalar operator-() const;
    friend RootTwoScalar operator+(const RootTwoScalar& a, const RootTwoScalar& b);
    friend RootTwoScalar operator-(const RootTwoScalar& a, const RootTwoScalar& b);
    friend RootTwoScalar operator*(const RootTwoScalar& a, const RootTwoScalar& b);
    RootTwoScalar& operator+=(const RootTwoScalar& b) { return *this = *this + b; }
    RootTwoScalar& operator*=(const RootTwoScalar& b) { return *this = *this * b; }

    friend bool operator==(const RootTwoScalar&, const RootTwoScalar&) = default;

    /// "a" when k = 0, else "a/r^k" with r denoting sqrt(2).
    std::string str() const;

  private:
    void canonicalize();

    int64_t num_ = 0;
    int32_t pow_ = 0;
};

}  // namespace rstab

#endif
