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

// The 3-parameter noncompact subgroup of the Lorentz group that keeps the direction nu fixed,
// and its dilatation-extended counterpart (the generalized Lorentz boosts).
//
// Conventions:
//  - Matrices are passive: x' = L x maps initial-frame event coordinates to the primed frame.
//  - Spatial covariant components are negated contravariant ones (signature +,-,-,-).
//  - A group element is (n, alpha); the product g = g2 g1 means "apply g1 first", i.e.
//    L(g) = L(g2) L(g1).

#include "finsler/core.hpp"
#include "finsler/detail/series.hpp"

namespace finsler {

using detail::Branch;

/// Boost direction n and rapidity-like parameter alpha.
/// Canonical form keeps alpha >= 0; the identity is (nu, 0).
struct BoostParams {
    UnitVector3 n{};
    double alpha = 0.0;

    BoostParams() = default;
    BoostParams(const UnitVector3 &dir, double a) : n(dir), alpha(a)
    {
        FINSLER_FAIL_IF(!std::isfinite(alpha), ErrorKind::InvalidArgument, "alpha must be finite");
    }

    /// Same group element with alpha >= 0.
    [[nodiscard]] BoostParams canonical() const
    {
        return alpha < 0.0 ? BoostParams{-n, -alpha} : *this;
    }

    /// The vector n * alpha.
    [[nodiscard]] Vec3 vec() const { return n.vec() * alpha; }
};

inline BoostParams identity_params(const UnitVector3 &nu) { return {nu, 0.0}; }

/// Inverse element: (n, -alpha) in canonical form.
inline BoostParams inverse(const BoostParams &g) { return BoostParams{g.n, -g.alpha}.canonical(); }

/// nu . n . alpha, the additive parameter of the group.
inline double axial_rapidity(const UnitVector3 &nu, const BoostParams &g)
{
    return dot3(nu.vec(), g.n.vec()) * g.alpha;
}

// -----------------------------------------------------------------------------
// Generators
// -----------------------------------------------------------------------------

/// Generator G with dx = G x d(alpha):
///   dx^0 = -(n.x),  dx = -n x^0 - x x (nu x n).
inline Matrix4 generator(const UnitVector3 &nu, const UnitVector3 &n)
{
    const Vec3 &v = nu.vec();
    const Vec3 &d = n.vec();
    Matrix4 g;
    for (std::size_t b = 0; b < 3; ++b) {
        g(0, b + 1) = -d[b];
        g(b + 1, 0) = -d[b];
        for (std::size_t c = 0; c < 3; ++c) {
            g(b + 1, c + 1) = d[b] * v[c] - v[b] * d[c];
        }
    }
    return g;
}

/// Generator of the generalized boosts: G - r (nu.n) I.
inline Matrix4 generalized_generator(const AnisotropySpec &spec, const UnitVector3 &n)
{
    return generator(spec.nu, n) - Matrix4::identity().scaled(spec.r * dot3(spec.nu.vec(), n.vec()));
}

// -----------------------------------------------------------------------------
// Finite transformations
// -----------------------------------------------------------------------------

/// Closed-form L(nu; n, alpha). Near nu.n.alpha = 0 the coefficient functions switch to
/// their Taylor series; pass `branch` to force one side (used by continuity checks).
inline Matrix4 boost_matrix(const UnitVector3 &nu, const BoostParams &g, const Tolerance &tol = {},
                            Branch branch = Branch::Auto)
{
    const Vec3 &v = nu.vec();
    const Vec3 &d = g.n.vec();
    const double a = g.alpha;
    const double s = dot3(v, d) * a;

    const double decay = a * detail::decay_ratio(s, tol.limit_switch, branch);   // (1-e^{-s})/(nu.n)
    const double growth = a * detail::growth_ratio(s, tol.limit_switch, branch); // (e^{s}-1)/(nu.n)
    const double cosh_term = a * a * detail::cosh_ratio(s, tol.limit_switch, branch);

    Matrix4 m;
    m(0, 0) = 1.0 + cosh_term;
    for (std::size_t b = 0; b < 3; ++b) {
        m(0, b + 1) = -decay * d[b] - cosh_term * v[b];
        m(b + 1, 0) = -growth * d[b] + cosh_term * v[b];
    }
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            m(r + 1, c + 1) = (r == c ? 1.0 : 0.0) + growth * d[r] * v[c] + v[r] * m(0, c + 1);
        }
    }
    return m;
}

/// L^{-1}(nu; n, alpha) = L(nu; n, -alpha).
inline Matrix4 boost_matrix_inverse(const UnitVector3 &nu, const BoostParams &g,
                                    const Tolerance &tol = {})
{
    return boost_matrix(nu, BoostParams{g.n, -g.alpha}, tol);
}

/// D = exp(-r nu.n alpha), the dilatation accompanying a generalized boost.
inline double dilation_from_params(const AnisotropySpec &spec, const BoostParams &g)
{
    return std::exp(-spec.r * axial_rapidity(spec.nu, g));
}

/// D L(nu; n, alpha). Leaves the Finslerian interval invariant.
inline Matrix4 generalized_boost_matrix(const AnisotropySpec &spec, const BoostParams &g,
                                        const Tolerance &tol = {})
{
    const Matrix4 lorentz = boost_matrix(spec.nu, g, tol);
    if (spec.r == 0.0) {
        return lorentz;
    }
    return lorentz.scaled(dilation_from_params(spec, g));
}

// -----------------------------------------------------------------------------
// Composition
// -----------------------------------------------------------------------------

struct Composition {
    BoostParams params;
    bool identity = false; // set when the composed element is the identity to abs_tol
};

/// Parameters of g = g2 g1 (g1 applied first):
///   n alpha = [alpha1 G(s1) n1 + e^{s1} alpha2 G(s2) n2] / G(s1 + s2),  G(s) = (e^s - 1)/s,
/// with s_i = nu.n_i alpha_i. The axial rapidity is additive: s = s1 + s2.
inline Composition compose(const UnitVector3 &nu, const BoostParams &g1, const BoostParams &g2,
                           const Tolerance &tol = {})
{
    const double s1 = axial_rapidity(nu, g1);
    const double s2 = axial_rapidity(nu, g2);
    const double ls = tol.limit_switch;

    const Vec3 sum = g1.n.vec() * (g1.alpha * detail::growth_ratio(s1, ls)) +
                     g2.n.vec() * (std::exp(s1) * g2.alpha * detail::growth_ratio(s2, ls));
    const Vec3 composed = sum / detail::growth_ratio(s1 + s2, ls);

    const double len = norm3(composed);
    if (len < tol.abs_tol) {
        return {identity_params(nu), true};
    }
    return {BoostParams{UnitVector3::normalize(composed), len}, false};
}

// -----------------------------------------------------------------------------
// Velocity parametrization
// -----------------------------------------------------------------------------

/// Velocity of the primed frame measured in the initial frame:
///   v = [F n + K nu] / (1 + K),  F = (1 - e^{-s})/(nu.n),  K = (cosh s - 1)/(nu.n)^2.
inline Velocity3 velocity_from_params(const UnitVector3 &nu, const BoostParams &g,
                                      const Tolerance &tol = {}, Branch branch = Branch::Auto)
{
    const double a = g.alpha;
    const double s = axial_rapidity(nu, g);
    const double decay = a * detail::decay_ratio(s, tol.limit_switch, branch);
    const double cosh_term = a * a * detail::cosh_ratio(s, tol.limit_switch, branch);
    return Velocity3{(g.n.vec() * decay + nu.vec() * cosh_term) / (1.0 + cosh_term)};
}

/// Inverse of `velocity_from_params`. Returns alpha >= 0.
///
/// alpha carries the factor ln(w/q)/(w - q) with w = sqrt(1-v^2), q = 1 - v.nu, which is 0/0 on
/// the horosphere w = q (n orthogonal to nu). There the log ratio is taken from its series,
/// which reproduces the Abelian-subgroup inversion exactly on the horosphere.
/// |v| < abs_tol yields the identity (nu, 0).
inline BoostParams params_from_velocity(const UnitVector3 &nu, const Velocity3 &v,
                                        const Tolerance &tol = {})
{
    require_subluminal(v);
    if (v.speed() < tol.abs_tol) {
        return identity_params(nu);
    }
    const Vec3 vel = v.vec();
    const double along = dot3(vel, nu.vec());
    const double q = 1.0 - along;
    const auto [w, one_minus_w] = lorentz_roots(v.speed_sq());

    const double scale = std::sqrt(2.0 * q * one_minus_w);
    const Vec3 n = vel / scale - nu.vec() * std::sqrt(one_minus_w / (2.0 * q));

    // w - q = v.nu - (1 - w), evaluated without cancellation near the horosphere
    const double u = (along - one_minus_w) / q;
    const double alpha = scale / q * detail::log_ratio(u, tol.limit_switch);
    return {UnitVector3::normalize(n), alpha};
}

/// Composition law written in velocities: the velocity of g2 g1 from v1 = v(g1), v2 = v(g2).
/// v2 is measured in axes turned so that nu keeps its orientation. |v2| = 1 is admitted as the
/// light-speed limit (up to the unit-vector rounding slack); v2 = nu returns nu for every v1.
inline Velocity3 add_velocities(const UnitVector3 &nu, const Velocity3 &v1, const Velocity3 &v2)
{
    require_subluminal(v1, "v1");
    FINSLER_FAIL_IF(!all_finite(v2.vec()) || v2.speed_sq() > 1.0 + UnitVector3::kNormTolerance, ErrorKind::OutOfRange,
                    "v2 must satisfy |v2| <= 1");
    const Vec3 a = v1.vec();
    const Vec3 b = v2.vec();
    const Vec3 &e = nu.vec();

    const double w1 = lorentz_roots(v1.speed_sq()).root;
    const double a_nu = dot3(a, e);
    const double b_nu = dot3(b, e);
    const double ab = dot3(a, b);

    const Vec3 num = (a * (1.0 - b_nu) + b * w1) * (1.0 - a_nu) + e * ((ab + b_nu * (w1 - 1.0)) * w1);
    const double den = 1.0 - a_nu + ab * w1 + b_nu * (1.0 - a_nu + w1) * (w1 - 1.0);
    return Velocity3{num / den};
}

/// D = ((1 - v.nu)/sqrt(1 - v^2))^r.
inline double dilation_factor(const AnisotropySpec &spec, const Velocity3 &v)
{
    require_subluminal(v);
    const double level = (1.0 - dot3(v.vec(), spec.nu.vec())) / lorentz_roots(v.speed_sq()).root;
    return std::pow(level, spec.r);
}

// -----------------------------------------------------------------------------
// Remaining isometries: rotations about nu, translations
// -----------------------------------------------------------------------------

/// Passive rotation of the spatial axes by phi about nu: x' = x cos(phi) - (nu x x) sin(phi)
/// + nu (nu.x)(1 - cos(phi)). For nu = z and phi = pi/2 this is x' = y, y' = -x.
inline Matrix4 axial_rotation(const UnitVector3 &nu, double phi)
{
    const Vec3 &e = nu.vec();
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    // cross-product matrix of nu
    const double k[3][3] = {{0.0, -e.z, e.y}, {e.z, 0.0, -e.x}, {-e.y, e.x, 0.0}};
    Matrix4 m;
    m(0, 0) = 1.0;
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t col = 0; col < 3; ++col) {
            m(r + 1, col + 1) = (r == col ? c : 0.0) - s * k[r][col] + (1.0 - c) * e[r] * e[col];
        }
    }
    return m;
}

inline FourVector translate(const FourVector &x, const FourVector &a) { return x + a; }

} // namespace finsler
