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

// Lobachevski geometry of 3-velocity space: the motions induced by the boosts and the two
// families of surfaces left invariant by the subgroups.

#include "finsler/boost.hpp"
#include "finsler/core.hpp"
#include "finsler/subgroups.hpp"

#include <numbers>
#include <string_view>
#include <vector>

namespace finsler {

/// Rapidity distance: artanh of the relative speed,
///   |v_rel|^2 = ((v1 - v2)^2 - |v1 x v2|^2) / (1 - v1.v2)^2.
inline double lobachevsky_distance(const Velocity3 &v1, const Velocity3 &v2)
{
    require_subluminal(v1, "v1");
    require_subluminal(v2, "v2");
    const Vec3 a = v1.vec();
    const Vec3 b = v2.vec();
    const Vec3 diff = a - b;
    const Vec3 cr = cross3(a, b);
    const double num = std::max(0.0, dot3(diff, diff) - dot3(cr, cr));
    return std::atanh(std::sqrt(num) / (1.0 - dot3(a, b)));
}

/// (1 - v.nu)/sqrt(1 - v^2); level sets are the horospheres.
inline double horosphere_level(const UnitVector3 &nu, const Velocity3 &v)
{
    require_subluminal(v);
    return horosphere_ratio(nu, v);
}

/// (v^2 - (v.nu)^2)/(1 - v^2); level sets are the equidistant cylinders about nu.
inline double cylinder_level(const UnitVector3 &nu, const Velocity3 &v)
{
    require_subluminal(v);
    const Vec3 vel = v.vec();
    const Vec3 transverse = cross3(vel, nu.vec());
    return dot3(transverse, transverse) / (1.0 - v.speed_sq());
}

/// Image of the velocity v under the boost to the frame moving with `frame_v`, i.e. the group
/// parameter of g(v) g(frame_v)^{-1}, obtained from the velocity-addition law.
inline Velocity3 induced_motion(const UnitVector3 &nu, const Velocity3 &frame_v, const Velocity3 &v,
                                const Tolerance &tol = {})
{
    require_subluminal(frame_v, "frame velocity");
    require_subluminal(v);
    const BoostParams frame = params_from_velocity(nu, frame_v, tol);
    const Velocity3 frame_inverse = velocity_from_params(nu, inverse(frame), tol);
    return add_velocities(nu, frame_inverse, v);
}

// -----------------------------------------------------------------------------
// Surface sampling
// -----------------------------------------------------------------------------

enum class SurfaceFamily { Horosphere, Cylinder };

inline constexpr std::string_view to_string(SurfaceFamily f)
{
    return f == SurfaceFamily::Horosphere ? "horosphere" : "cylinder";
}

/// rows x cols parameter grid. Horospheres use Euclidean inner coordinates in
/// [-extent, extent]^2; cylinders use axial rapidity in [-extent, extent] by azimuth in [0, 2 pi).
struct SurfaceGrid {
    std::size_t rows = 8;
    std::size_t cols = 8;
    double extent = 2.0;
};

struct SurfaceSample {
    SurfaceFamily family = SurfaceFamily::Horosphere;
    double level = 1.0;
    std::vector<Velocity3> points;
    bool degenerate = false; // cylinder of level 0: every point lies on the nu axis
};

/// Family function of a sample, evaluated at v.
inline double surface_level(SurfaceFamily family, const UnitVector3 &nu, const Velocity3 &v)
{
    return family == SurfaceFamily::Horosphere ? horosphere_level(nu, v) : cylinder_level(nu, v);
}

inline constexpr double kSurfaceTolerance = 1e-8;

namespace detail {

inline double grid_coordinate(std::size_t i, std::size_t count, double extent)
{
    if (count < 2) {
        return 0.0;
    }
    return -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(count - 1);
}

} // namespace detail

/// Deterministic grid of points on a level set. Horospheres are generated as the orbit of the
/// point tanh(-ln level) nu under the Abelian subgroup; cylinders from transverse rapidity
/// asinh(sqrt(level)). Every point is re-evaluated against the family function.
inline SurfaceSample sample_surface(const UnitVector3 &nu, SurfaceFamily family, double level,
                                    const SurfaceGrid &grid)
{
    FINSLER_FAIL_IF(!std::isfinite(level), ErrorKind::OutOfRange, "level must be finite");
    FINSLER_FAIL_IF(family == SurfaceFamily::Horosphere && !(level > 0.0), ErrorKind::OutOfRange,
                    "horosphere level must be > 0");
    FINSLER_FAIL_IF(family == SurfaceFamily::Cylinder && level < 0.0, ErrorKind::OutOfRange,
                    "cylinder level must be >= 0");
    FINSLER_FAIL_IF(!(grid.extent >= 0.0) || !std::isfinite(grid.extent), ErrorKind::OutOfRange,
                    "grid extent must be finite and >= 0");

    const UnitVector3 e1 = any_orthogonal(nu);
    const Vec3 e2 = cross3(nu.vec(), e1.vec());

    SurfaceSample out;
    out.family = family;
    out.level = level;
    out.degenerate = family == SurfaceFamily::Cylinder && level == 0.0;
    out.points.reserve(grid.rows * grid.cols);

    if (family == SurfaceFamily::Horosphere) {
        const double base = -std::log(level);
        const FourVector seed{std::cosh(base), nu.vec() * std::sinh(base)};
        for (std::size_t i = 0; i < grid.rows; ++i) {
            for (std::size_t j = 0; j < grid.cols; ++j) {
                const Vec3 xi = e1.vec() * detail::grid_coordinate(i, grid.rows, grid.extent) +
                                e2 * detail::grid_coordinate(j, grid.cols, grid.extent);
                const FourVector u = abelian_transform(nu, AbelianParams::from_vector(nu, xi), seed);
                out.points.emplace_back(u.spatial() / u.t);
            }
        }
    } else {
        const double transverse = std::tanh(std::asinh(std::sqrt(level)));
        for (std::size_t i = 0; i < grid.rows; ++i) {
            const double axial = detail::grid_coordinate(i, grid.rows, grid.extent);
            for (std::size_t j = 0; j < grid.cols; ++j) {
                const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                                   static_cast<double>(std::max<std::size_t>(grid.cols, 1));
                const Vec3 dir = e1.vec() * std::cos(phi) + e2 * std::sin(phi);
                out.points.emplace_back(dir * (transverse / std::cosh(axial)) + nu.vec() * std::tanh(axial));
            }
        }
    }

    for (const auto &p : out.points) {
        FINSLER_FAIL_IF(!p.subluminal() ||
                            std::abs(surface_level(family, nu, p) - level) > kSurfaceTolerance * std::max(1.0, level),
                        ErrorKind::OutOfRange, "grid extent too large to resolve the level set in double precision");
    }
    return out;
}

} // namespace finsler
