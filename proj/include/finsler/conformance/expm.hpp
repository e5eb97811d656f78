// Copyright 2026 The finsler-lorentz Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Matrix exponential used as an independent oracle by the conformance suites and tests.
// Not used by any production code path.

#include "finsler/core.hpp"

#include <cmath>

namespace finsler::conformance {

/// exp(A) by scaling and squaring: A is scaled by 2^-k until its infinity norm is below 1/4,
/// the exponential of the scaled matrix is summed by Taylor series to machine precision, and
/// the result is squared k times.
template <typename T> Mat4<T> expm(const Mat4<T> &a)
{
    double norm = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < 4; ++j) {
            row += std::abs(a(i, j));
        }
        norm = std::max(norm, row);
    }

    int squarings = 0;
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    const Mat4<T> scaled = a.scaled(std::ldexp(1.0, -squarings));

    Mat4<T> sum = Mat4<T>::identity();
    Mat4<T> term = Mat4<T>::identity();
    for (int k = 1; k <= 30; ++k) {
        term = (term * scaled).scaled(1.0 / k);
        sum = sum + term;
        if (term.max_abs() < 1e-18) {
            break;
        }
    }
    for (int i = 0; i < squarings; ++i) {
        sum = sum * sum;
    }
    return sum;
}

} // namespace finsler::conformance
