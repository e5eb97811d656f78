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

// Two noncompact subgroups of the generalized boosts in closed form:
//  - the Abelian 2-parameter subgroup (n orthogonal to nu, no dilatation), whose orbits in
//    velocity space are horospheres;
//  - the 1-parameter subgroup of boosts along nu, whose orbits are equidistant cylinders.

#include "finsler/boost.hpp"
#include "finsler/core.hpp"

namespace finsler {

/// Horosphere-membership gate for velocities: |(1 - v.nu)/sqrt(1 - v^2) - 1| below this.
inline constexpr double kHorosphereTolerance = 1e-8;

/// Orthogonality gate for Abelian directions.
inline constexpr double kOrthogonalityTolerance = 1e-12;

/// Element of the Abelian subgroup: direction n orthogonal to nu, parameter alpha.
struct AbelianParams {
    UnitVector3 n;
    double alpha = 0.0;

    AbelianParams(const UnitVector3 &nu, const UnitVector3 &dir, double a) : n(dir), alpha(a)
    {
        FINSLER_FAIL_IF(std::abs(dot3(nu.vec(), dir.vec())) >= kOrthogonalityTolerance,
                        ErrorKind::NonOrthogonal, "Abelian direction must be orthogonal to nu");
        FINSLER_FAIL_IF(!std::isfinite(a), ErrorKind::InvalidArgument, "alpha must be finite");
    }

    /// From the free 2-vector n*alpha lying in the plane orthogonal to nu. The zero vector maps
    /// to alpha = 0 with an arbitrary orthogonal direction.
    static AbelianParams from_vector(const UnitVector3 &nu, const Vec3 &w)
    {
        FINSLER_FAIL_IF(std::abs(dot3(nu.vec(), w)) >= kOrthogonalityTolerance * std::max(1.0, norm3(w)),
                        ErrorKind::NonOrthogonal, "Abelian parameter vector must be orthogonal to nu");
        const double len = norm3(w);
        if (len == 0.0) {
            return {nu, any_orthogonal(nu), 0.0};
        }
        // project out the residual nu component left by rounding
        const Vec3 in_plane = w - nu.vec() * dot3(nu.vec(), w);
        return {nu, UnitVector3::normalize(in_plane), len};
    }

    [[nodiscard]] Vec3 vec() const { return n.vec() * alpha; }
    [[nodiscard]] BoostParams boost() const { return {n, alpha}; }
};

/// Element of the 1-parameter subgroup of boosts along nu.
struct AxialParams {
    double alpha = 0.0;
};

inline void require_abelian(const UnitVector3 &nu, const AbelianParams &p)
{
    FINSLER_FAIL_IF(std::abs(dot3(nu.vec(), p.n.vec())) >= kOrthogonalityTolerance,
                    ErrorKind::NonOrthogonal, "Abelian direction must be orthogonal to nu");
}

/// (1 - v.nu)/sqrt(1 - v^2); equals 1 exactly on the horosphere through v = 0.
inline double horosphere_ratio(const UnitVector3 &nu, const Velocity3 &v)
{
    return (1.0 - dot3(v.vec(), nu.vec())) / lorentz_roots(v.speed_sq()).root;
}

inline void require_on_horosphere(const UnitVector3 &nu, const Velocity3 &v)
{
    require_subluminal(v);
    FINSLER_FAIL_IF(std::abs(horosphere_ratio(nu, v) - 1.0) >= kHorosphereTolerance,
                    ErrorKind::OffHorosphere,
                    "velocity does not satisfy (1 - v.nu)/sqrt(1 - v^2) = 1");
}

// -----------------------------------------------------------------------------
// Abelian 2-parameter subgroup
// -----------------------------------------------------------------------------

/// x'_0 = (1 + a^2/2) x_0 - a (n.x) - a^2/2 (nu.x)
/// x'   = x + n (nu.x - x_0) a + nu [(x_0 - nu.x) a^2/2 - (n.x) a]
inline FourVector abelian_transform(const UnitVector3 &nu, const AbelianParams &p, const FourVector &x)
{
    require_abelian(nu, p);
    const Vec3 &e = nu.vec();
    const Vec3 &d = p.n.vec();
    const Vec3 s = x.spatial();
    const double a = p.alpha;
    const double half_sq = 0.5 * a * a;
    const double nx = dot3(d, s);
    const double ex = dot3(e, s);

    const double t = (half_sq + 1.0) * x.t - a * nx - half_sq * ex;
    const Vec3 out = s + d * ((ex - x.t) * a) + e * ((x.t - ex) * half_sq - nx * a);
    return {t, out};
}

/// Inverse of `abelian_transform`: the same map with alpha -> -alpha.
inline FourVector abelian_transform_inverse(const UnitVector3 &nu, const AbelianParams &p,
                                            const FourVector &x)
{
    return abelian_transform(nu, AbelianParams{nu, p.n, -p.alpha}, x);
}

/// v = (n a + nu a^2/2) / (1 + a^2/2). Always lies on the horosphere through v = 0.
inline Velocity3 abelian_velocity(const UnitVector3 &nu, const AbelianParams &p)
{
    require_abelian(nu, p);
    const double a = p.alpha;
    const double half_sq = 0.5 * a * a;
    return Velocity3{(p.n.vec() * a + nu.vec() * half_sq) / (1.0 + half_sq)};
}

/// Inverse of `abelian_velocity`: alpha = sqrt(2 v.nu / (1 - v.nu)) >= 0,
/// n = (v (1 + a^2/2) - nu a^2/2) / a.
inline AbelianParams abelian_params_from_velocity(const UnitVector3 &nu, const Velocity3 &v,
                                                  const Tolerance &tol = {})
{
    require_on_horosphere(nu, v);
    FINSLER_FAIL_IF(v.speed() < tol.abs_tol, ErrorKind::ZeroVelocity,
                    "the Abelian direction is undefined at v = 0");
    const double along = dot3(v.vec(), nu.vec());
    const double alpha = std::sqrt(2.0 * std::max(along, 0.0) / (1.0 - along));
    const double half_sq = 0.5 * alpha * alpha;
    const Vec3 w = v.vec() * (1.0 + half_sq) - nu.vec() * half_sq; // = n alpha
    return AbelianParams::from_vector(nu, w - nu.vec() * dot3(nu.vec(), w));
}

/// Abelian boost written in the velocity v of the primed frame (v on the horosphere):
///   x'_0 = (x_0 - v.x) / (1 - v.nu)
///   x'   = x - [(x_0 - nu.x) v - ((2 x_0 - nu.x)(v.nu) - v.x) nu] / (1 - v.nu)
inline FourVector abelian_transform_v(const UnitVector3 &nu, const Velocity3 &v, const FourVector &x)
{
    require_on_horosphere(nu, v);
    const Vec3 &e = nu.vec();
    const Vec3 vel = v.vec();
    const Vec3 s = x.spatial();
    const double q = 1.0 - dot3(vel, e);
    const double ex = dot3(e, s);
    const double vx = dot3(vel, s);

    const double t = (x.t - vx) / q;
    const Vec3 out = s - (vel * (x.t - ex) - e * ((2.0 * x.t - ex) * dot3(vel, e) - vx)) / q;
    return {t, out};
}

// -----------------------------------------------------------------------------
// 1-parameter subgroup along nu
// -----------------------------------------------------------------------------

/// x'_0 = e^{-r a} [x_0 cosh a - (nu.x) sinh a]
/// x'   = e^{-r a} [x - nu (nu.x) + nu (-x_0 sinh a + (nu.x) cosh a)]
inline FourVector axial_transform(const AnisotropySpec &spec, const AxialParams &p, const FourVector &x)
{
    const Vec3 &e = spec.nu.vec();
    const Vec3 s = x.spatial();
    const double a = p.alpha;
    const double ch = std::cosh(a);
    const double sh = std::sinh(a);
    const double ex = dot3(e, s);
    const double d = std::exp(-spec.r * a);

    const double t = d * (x.t * ch - ex * sh);
    const Vec3 out = (s - e * ex + e * (-x.t * sh + ex * ch)) * d;
    return {t, out};
}

/// Inverse of `axial_transform`:
///   x_0 = e^{r a} [x'_0 cosh a + (nu.x') sinh a]
///   x   = e^{r a} [x' - nu (nu.x') + nu (x'_0 sinh a + (nu.x') cosh a)]
inline FourVector axial_transform_inverse(const AnisotropySpec &spec, const AxialParams &p,
                                          const FourVector &xp)
{
    const Vec3 &e = spec.nu.vec();
    const Vec3 s = xp.spatial();
    const double a = p.alpha;
    const double ch = std::cosh(a);
    const double sh = std::sinh(a);
    const double ex = dot3(e, s);
    const double d = std::exp(spec.r * a);

    const double t = d * (xp.t * ch + ex * sh);
    const Vec3 out = (s - e * ex + e * (xp.t * sh + ex * ch)) * d;
    return {t, out};
}

/// Velocity of the primed frame of an axial boost: nu tanh(a).
inline Velocity3 axial_velocity(const UnitVector3 &nu, const AxialParams &p)
{
    return Velocity3{nu.vec() * std::tanh(p.alpha)};
}

struct AxialInvariants {
    double null_coordinate;  // x_0 - nu.x; scales by e^{(1-r)a}
    double interval;         // x_0^2 - x^2; scales by e^{-2ra}
    double transverse_ratio; // |x x nu| / sqrt(x_0^2 - x^2); invariant
};

inline AxialInvariants axial_invariants(const AnisotropySpec &spec, const FourVector &x)
{
    const double interval = minkowski_interval(x);
    FINSLER_FAIL_IF(!(interval > 0.0), ErrorKind::NonTimelike,
                    "transverse ratio needs x_0^2 > |x|^2");
    const Vec3 s = x.spatial();
    return {x.t - dot3(spec.nu.vec(), s), interval,
            norm3(cross3(s, spec.nu.vec())) / std::sqrt(interval)};
}

} // namespace finsler
