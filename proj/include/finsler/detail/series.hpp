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

// Removable-singularity coefficient functions shared by the boost, velocity and spinor maps.
// Each has a closed branch and a Taylor branch (through s^4); `select` picks the Taylor
// branch when |s| < limit_switch.

#include <cmath>

namespace finsler::detail {

enum class Branch { Auto, Closed, Series };

inline bool use_series(double s, double limit_switch, Branch branch)
{
    if (branch == Branch::Auto) {
        return std::abs(s) < limit_switch;
    }
    return branch == Branch::Series;
}

/// (1 - e^{-s}) / s
inline double decay_ratio(double s, double limit_switch, Branch branch = Branch::Auto)
{
    if (use_series(s, limit_switch, branch)) {
        return 1.0 + s * (-1.0 / 2.0 + s * (1.0 / 6.0 + s * (-1.0 / 24.0 + s * (1.0 / 120.0))));
    }
    return -std::expm1(-s) / s;
}

/// (e^{s} - 1) / s
inline double growth_ratio(double s, double limit_switch, Branch branch = Branch::Auto)
{
    return decay_ratio(-s, limit_switch, branch);
}

/// (cosh s - 1) / s^2
inline double cosh_ratio(double s, double limit_switch, Branch branch = Branch::Auto)
{
    if (use_series(s, limit_switch, branch)) {
        const double s2 = s * s;
        return 1.0 / 2.0 + s2 * (1.0 / 24.0 + s2 * (1.0 / 720.0));
    }
    const double h = std::sinh(0.5 * s) / s;
    return 2.0 * h * h;
}

/// sinh(s) / s
inline double sinh_ratio(double s, double limit_switch, Branch branch = Branch::Auto)
{
    if (use_series(s, limit_switch, branch)) {
        const double s2 = s * s;
        return 1.0 + s2 * (1.0 / 6.0 + s2 * (1.0 / 120.0));
    }
    return std::sinh(s) / s;
}

/// ln(1 + u) / u
inline double log_ratio(double u, double limit_switch, Branch branch = Branch::Auto)
{
    if (use_series(u, limit_switch, branch)) {
        return 1.0 + u * (-1.0 / 2.0 + u * (1.0 / 3.0 + u * (-1.0 / 4.0 + u * (1.0 / 5.0))));
    }
    return std::log1p(u) / u;
}

} // namespace finsler::detail
