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

// Portable seeded sampling. std::mt19937_64 output is fixed by the standard; the
// std::*_distribution adaptors are not, so every draw below is derived from raw 64-bit words.

#include "finsler/boost.hpp"
#include "finsler/core.hpp"
#include "finsler/spinor.hpp"

#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace finsler {

/// SplitMix64 finalizer.
inline constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of an isolated stream for `name` derived from a master seed (FNV-1a of the name, mixed).
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix64(master ^ h);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double canonical() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * canonical(); }

    /// Uniform on the unit sphere (Archimedes: z uniform in [-1, 1], azimuth uniform).
    UnitVector3 direction()
    {
        const double z = uniform(-1.0, 1.0);
        const double phi = uniform(0.0, 2.0 * std::numbers::pi);
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        return UnitVector3::normalize({rho * std::cos(phi), rho * std::sin(phi), z});
    }

    /// Group parameters with n uniform on the sphere and alpha uniform in [-3, 3].
    BoostParams boost_params() { return {direction(), uniform(-3.0, 3.0)}; }

    /// Anisotropy exponent uniform in [-0.9, 0.9].
    double anisotropy() { return uniform(-0.9, 0.9); }

    AnisotropySpec spec() { return {direction(), anisotropy()}; }

    /// Velocity with uniform direction and rapidity uniform in [0, max_rapidity].
    Velocity3 velocity(double max_rapidity = 3.0)
    {
        const UnitVector3 d = direction();
        return Velocity3{d.vec() * std::tanh(uniform(0.0, max_rapidity))};
    }

    /// Timelike future-directed displacement: proper length in [0.1, 10], rapidity in [0, 3].
    FourVector timelike()
    {
        const double tau = uniform(0.1, 10.0);
        const double rap = uniform(0.0, 3.0);
        const UnitVector3 d = direction();
        return {tau * std::cosh(rap), d.vec() * (tau * std::sinh(rap))};
    }

    /// Event with every component uniform in [-1, 1].
    FourVector event()
    {
        const double t = uniform(-1.0, 1.0);
        const double x = uniform(-1.0, 1.0);
        const double y = uniform(-1.0, 1.0);
        return {t, x, y, uniform(-1.0, 1.0)};
    }

    /// Bispinor with real and imaginary parts uniform in [-1, 1].
    Bispinor bispinor()
    {
        Bispinor psi;
        for (auto &c : psi) {
            const double re = uniform(-1.0, 1.0);
            c = Complex{re, uniform(-1.0, 1.0)};
        }
        return psi;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace finsler
