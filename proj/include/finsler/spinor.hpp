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

// Bispinor representation of the generalized boosts.
//
// A generalized boost acts on a bispinor as psi' = D^{-3/2} S psi, where S represents the
// Lorentz part: S^{-1} gamma^n S = L^n_m gamma^m. Gamma matrices are in the standard Dirac
// representation.

#include "finsler/boost.hpp"
#include "finsler/core.hpp"

#include <array>

namespace finsler {

using SpinorMatrix = Mat4<Complex>;
using Bispinor = std::array<Complex, 4>;
/// Row bispinor, e.g. the Dirac adjoint psi^dagger gamma^0.
using RowBispinor = std::array<Complex, 4>;

/// Scale weight of bispinors under the dilatation D.
inline constexpr double kBispinorWeight = -1.5;

struct GammaBasis {
    std::array<SpinorMatrix, 4> gamma; // gamma^0 .. gamma^3
    std::array<SpinorMatrix, 3> sigma; // Sigma^k = diag(sigma_k, sigma_k)
};

namespace detail {

using Pauli = std::array<std::array<Complex, 2>, 2>;

inline std::array<Pauli, 3> pauli()
{
    const Complex i{0.0, 1.0};
    return {{{{{0.0, 1.0}, {1.0, 0.0}}},
             {{{0.0, -i}, {i, 0.0}}},
             {{{1.0, 0.0}, {0.0, -1.0}}}}};
}

} // namespace detail

/// Standard Dirac representation: gamma^0 = diag(1,1,-1,-1),
/// gamma^k = [[0, sigma_k], [-sigma_k, 0]], Sigma^k = diag(sigma_k, sigma_k).
inline const GammaBasis &gamma_basis()
{
    static const GammaBasis basis = [] {
        GammaBasis g;
        g.gamma[0] = SpinorMatrix::identity();
        g.gamma[0](2, 2) = -1.0;
        g.gamma[0](3, 3) = -1.0;
        const auto sig = detail::pauli();
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    g.gamma[k + 1](r, c + 2) = sig[k][r][c];
                    g.gamma[k + 1](r + 2, c) = -sig[k][r][c];
                    g.sigma[k](r, c) = sig[k][r][c];
                    g.sigma[k](r + 2, c + 2) = sig[k][r][c];
                }
            }
        }
        return g;
    }();
    return basis;
}

/// a.Sigma for a real 3-vector a.
inline SpinorMatrix sigma_dot(const Vec3 &a)
{
    const auto &g = gamma_basis();
    return g.sigma[0].scaled(a.x) + g.sigma[1].scaled(a.y) + g.sigma[2].scaled(a.z);
}

/// gamma^0 (gamma.a) for a real 3-vector a.
inline SpinorMatrix alpha_dot(const Vec3 &a)
{
    const auto &g = gamma_basis();
    const SpinorMatrix gv = g.gamma[1].scaled(a.x) + g.gamma[2].scaled(a.y) + g.gamma[3].scaled(a.z);
    return g.gamma[0] * gv;
}

/// Sum of the boost generator along n and the rotation generator about nu x n:
///   K = -gamma^0 (gamma.n) - i Sigma.(nu x n),   K^2 = (nu.n)^2 I.
inline SpinorMatrix spinor_generator(const UnitVector3 &nu, const UnitVector3 &n)
{
    const Complex i{0.0, 1.0};
    return alpha_dot(n.vec()).scaled(-1.0) - sigma_dot(cross3(nu.vec(), n.vec())).scaled(i);
}

/// S(nu; n, alpha) = I cosh(s/2) + K sinh(s/2)/(nu.n),  s = nu.n alpha.
/// Equals exp(K alpha/2); for n orthogonal to nu, K is nilpotent and S = I + K alpha/2.
inline SpinorMatrix spinor_boost(const UnitVector3 &nu, const BoostParams &g, const Tolerance &tol = {},
                                 Branch branch = Branch::Auto)
{
    const double s = axial_rapidity(nu, g);
    const Branch resolved = detail::use_series(s, tol.limit_switch, branch) ? Branch::Series : Branch::Closed;
    const double half = 0.5 * s;
    // sinh(s/2)/(nu.n) = (alpha/2) sinh(s/2)/(s/2)
    const double coeff = 0.5 * g.alpha * detail::sinh_ratio(half, tol.limit_switch, resolved);
    return SpinorMatrix::identity().scaled(std::cosh(half)) + spinor_generator(nu, g.n).scaled(coeff);
}

/// Psi-bar = Psi^dagger gamma^0.
inline RowBispinor dirac_adjoint(const Bispinor &psi)
{
    return {std::conj(psi[0]), std::conj(psi[1]), -std::conj(psi[2]), -std::conj(psi[3])};
}

inline Bispinor operator*(const SpinorMatrix &m, const Bispinor &psi)
{
    Bispinor out{};
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            out[r] += m(r, c) * psi[c];
        }
    }
    return out;
}

/// row . M . psi
inline Complex sandwich(const RowBispinor &row, const SpinorMatrix &m, const Bispinor &psi)
{
    const Bispinor mpsi = m * psi;
    Complex acc{};
    for (std::size_t k = 0; k < 4; ++k) {
        acc += row[k] * mpsi[k];
    }
    return acc;
}

namespace detail {

/// Real part of a bilinear that is real by construction; a large imaginary part means the
/// arithmetic went wrong.
inline double real_bilinear(Complex value, double scale, const Tolerance &tol)
{
    FINSLER_FAIL_IF(std::abs(value.imag()) > tol.abs_tol * std::max(1.0, scale), ErrorKind::InvalidArgument,
                    "bilinear form has a non-negligible imaginary part");
    return value.real();
}

inline double norm_sq(const Bispinor &psi)
{
    double acc = 0.0;
    for (const auto &c : psi) {
        acc += std::norm(c);
    }
    return acc;
}

} // namespace detail

/// Psi-bar Psi.
inline double scalar_density(const Bispinor &psi, const Tolerance &tol = {})
{
    const RowBispinor bar = dirac_adjoint(psi);
    Complex acc{};
    for (std::size_t k = 0; k < 4; ++k) {
        acc += bar[k] * psi[k];
    }
    return detail::real_bilinear(acc, detail::norm_sq(psi), tol);
}

/// Vector current J^n = Psi-bar gamma^n Psi.
inline FourVector vector_current(const Bispinor &psi, const Tolerance &tol = {})
{
    const RowBispinor bar = dirac_adjoint(psi);
    const auto &g = gamma_basis();
    const double scale = detail::norm_sq(psi);
    FourVector j;
    for (std::size_t n = 0; n < 4; ++n) {
        j[n] = detail::real_bilinear(sandwich(bar, g.gamma[n], psi), scale, tol);
    }
    return j;
}

/// Closed-form bispinor transformation of the generalized boost with primed-frame velocity v:
///
///   h^{-3r/2} / (2 sqrt(q w)) { (q + w) I - i (nu x v).Sigma - (v - (1 - w) nu).gamma^0 gamma }
///
/// with q = 1 - v.nu, w = sqrt(1 - v^2), h = q / w.
inline SpinorMatrix bispinor_matrix(const AnisotropySpec &spec, const Velocity3 &v)
{
    require_subluminal(v);
    const Vec3 vel = v.vec();
    const Vec3 &e = spec.nu.vec();
    const double q = 1.0 - dot3(vel, e);
    const auto [w, one_minus_w] = lorentz_roots(v.speed_sq());
    const double prefactor = std::pow(q / w, 1.5 * -spec.r) / (2.0 * std::sqrt(q * w));

    const Complex i{0.0, 1.0};
    const SpinorMatrix body = SpinorMatrix::identity().scaled(q + w) -
                              sigma_dot(cross3(e, vel)).scaled(i) - alpha_dot(vel - e * one_minus_w);
    return body.scaled(prefactor);
}

inline Bispinor bispinor_transform(const AnisotropySpec &spec, const Velocity3 &v, const Bispinor &psi)
{
    return bispinor_matrix(spec, v) * psi;
}

/// [((nu_n Psi-bar gamma^n Psi) / Psi-bar Psi)^2]^{-3r/2} Psi-bar Psi with nu_n = (1, -nu).
/// Invariant under `bispinor_transform`. Throws NullDensity when |Psi-bar Psi| < abs_tol.
inline double finsler_bispinor_invariant(const AnisotropySpec &spec, const Bispinor &psi,
                                         const Tolerance &tol = {})
{
    const double density = scalar_density(psi, tol);
    FINSLER_FAIL_IF(std::abs(density) < tol.abs_tol, ErrorKind::NullDensity,
                    "the invariant form is singular at Psi-bar Psi = 0");
    if (spec.r == 0.0) {
        return density;
    }
    const FourVector j = vector_current(psi, tol);
    const double projected = j.t - dot3(spec.nu.vec(), j.spatial());
    const double ratio = projected / density;
    return std::pow(ratio * ratio, -1.5 * spec.r) * density;
}

} // namespace finsler
