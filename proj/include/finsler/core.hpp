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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace finsler {

// =============================================================================
// Errors
// =============================================================================

enum class ErrorKind {
    SpacelikeInput,
    DegenerateRatio,
    IdentityResult,
    ZeroVelocity,
    NonOrthogonal,
    OffHorosphere,
    NonTimelike,
    NullDensity,
    OutOfRange,
    InvalidArgument,
};

inline constexpr std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::SpacelikeInput: return "SpacelikeInput";
    case ErrorKind::DegenerateRatio: return "DegenerateRatio";
    case ErrorKind::IdentityResult: return "IdentityResult";
    case ErrorKind::ZeroVelocity: return "ZeroVelocity";
    case ErrorKind::NonOrthogonal: return "NonOrthogonal";
    case ErrorKind::OffHorosphere: return "OffHorosphere";
    case ErrorKind::NonTimelike: return "NonTimelike";
    case ErrorKind::NullDensity: return "NullDensity";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

/// Domain error raised by library operations. `kind()` identifies the failed precondition.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

#define FINSLER_FAIL_IF(cond, kind, msg)                                                          \
    do {                                                                                           \
        if (cond) {                                                                                \
            throw ::finsler::Error((kind), (msg));                                                 \
        }                                                                                          \
    } while (0)

// =============================================================================
// Tolerances
// =============================================================================

/// Numerical tolerances shared by every operation.
/// `limit_switch` is the threshold on |nu.n.alpha| below which the series branches are used.
struct Tolerance {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double limit_switch = 1e-4;

    [[nodiscard]] bool valid() const noexcept
    {
        return abs_tol > 0.0 && rel_tol > 0.0 && limit_switch > 0.0;
    }
};

// =============================================================================
// 3-vectors
// =============================================================================

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr bool operator==(const Vec3 &) const = default;
};

constexpr Vec3 operator*(double s, const Vec3 &v) { return v * s; }

constexpr double dot3(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross3(const Vec3 &a, const Vec3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm3(const Vec3 &a) { return std::hypot(a.x, a.y, a.z); }

inline bool all_finite(const Vec3 &a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Unit 3-vector. Construction checks |u| = 1 to 1e-12; `normalize` rescales any nonzero vector.
class UnitVector3 {
  public:
    static constexpr double kNormTolerance = 1e-12;

    UnitVector3() = default; // (0,0,1)

    UnitVector3(double x, double y, double z) : UnitVector3(Vec3{x, y, z}) {}

    explicit UnitVector3(const Vec3 &v) : v_(v)
    {
        FINSLER_FAIL_IF(!all_finite(v), ErrorKind::InvalidArgument, "unit vector is not finite");
        FINSLER_FAIL_IF(std::abs(dot3(v, v) - 1.0) > kNormTolerance, ErrorKind::InvalidArgument,
                        "vector is not unit-norm");
    }

    static UnitVector3 normalize(const Vec3 &v)
    {
        const double len = norm3(v);
        FINSLER_FAIL_IF(!(len > 0.0) || !std::isfinite(len), ErrorKind::InvalidArgument,
                        "cannot normalize a zero or non-finite vector");
        UnitVector3 u;
        u.v_ = v / len;
        return u;
    }

    [[nodiscard]] const Vec3 &vec() const noexcept { return v_; }
    operator const Vec3 &() const noexcept { return v_; }
    UnitVector3 operator-() const
    {
        UnitVector3 u;
        u.v_ = -v_;
        return u;
    }
    double x() const noexcept { return v_.x; }
    double y() const noexcept { return v_.y; }
    double z() const noexcept { return v_.z; }

  private:
    Vec3 v_{0.0, 0.0, 1.0};
};

/// Some unit vector orthogonal to `u`, chosen deterministically.
inline UnitVector3 any_orthogonal(const UnitVector3 &u)
{
    const Vec3 &a = u.vec();
    const Vec3 trial = std::abs(a.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    return UnitVector3::normalize(cross3(a, trial));
}

/// 3-velocity of a frame in units with c = 1. Speed limits are checked by the operations.
struct Velocity3 {
    double vx = 0.0, vy = 0.0, vz = 0.0;

    Velocity3() = default;
    Velocity3(double x, double y, double z) : vx(x), vy(y), vz(z) {}
    explicit Velocity3(const Vec3 &v) : vx(v.x), vy(v.y), vz(v.z) {}

    [[nodiscard]] Vec3 vec() const noexcept { return {vx, vy, vz}; }
    [[nodiscard]] double speed_sq() const noexcept { return vx * vx + vy * vy + vz * vz; }
    [[nodiscard]] double speed() const noexcept { return std::hypot(vx, vy, vz); }
    [[nodiscard]] bool subluminal() const noexcept { return speed_sq() < 1.0; }
};

inline void require_subluminal(const Velocity3 &v, std::string_view what = "velocity")
{
    FINSLER_FAIL_IF(!all_finite(v.vec()) || !v.subluminal(), ErrorKind::OutOfRange,
                    std::string(what) + " must satisfy |v| < 1");
}

/// sqrt(1 - v^2) and 1 - sqrt(1 - v^2) computed without cancellation.
struct LorentzRoots {
    double root;       // sqrt(1 - v^2)
    double one_minus;  // 1 - sqrt(1 - v^2)
};

inline LorentzRoots lorentz_roots(double speed_sq)
{
    const double root = std::sqrt(1.0 - speed_sq);
    return {root, speed_sq / (1.0 + root)};
}

/// Preferred direction nu and anisotropy exponent r of the event space.
struct AnisotropySpec {
    UnitVector3 nu{};
    double r = 0.0;

    AnisotropySpec() = default;
    AnisotropySpec(const UnitVector3 &direction, double exponent) : nu(direction), r(exponent)
    {
        FINSLER_FAIL_IF(!std::isfinite(r), ErrorKind::InvalidArgument, "r must be finite");
    }
};

// =============================================================================
// 4-vectors and 4x4 matrices
// =============================================================================

/// Contravariant event coordinates (x^0, x^1, x^2, x^3), c = 1.
struct FourVector {
    double t = 0.0, x = 0.0, y = 0.0, z = 0.0;

    FourVector() = default;
    FourVector(double t_, double x_, double y_, double z_) : t(t_), x(x_), y(y_), z(z_) {}
    FourVector(double t_, const Vec3 &s) : t(t_), x(s.x), y(s.y), z(s.z) {}

    [[nodiscard]] Vec3 spatial() const noexcept { return {x, y, z}; }

    double operator[](std::size_t i) const
    {
        switch (i) {
        case 0: return t;
        case 1: return x;
        case 2: return y;
        default: return z;
        }
    }
    double &operator[](std::size_t i)
    {
        switch (i) {
        case 0: return t;
        case 1: return x;
        case 2: return y;
        default: return z;
        }
    }

    FourVector operator+(const FourVector &o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector &o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
    bool operator==(const FourVector &) const = default;
};

/// Dense 4x4 matrix, row-major. Row index is the upper (contravariant) index.
template <typename T> struct Mat4 {
    std::array<T, 16> a{};

    static Mat4 zero() { return {}; }

    static Mat4 identity()
    {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    T &operator()(std::size_t row, std::size_t col) { return a[row * 4 + col]; }
    const T &operator()(std::size_t row, std::size_t col) const { return a[row * 4 + col]; }

    Mat4 operator+(const Mat4 &o) const
    {
        Mat4 m;
        for (std::size_t i = 0; i < 16; ++i) {
            m.a[i] = a[i] + o.a[i];
        }
        return m;
    }

    Mat4 operator-(const Mat4 &o) const
    {
        Mat4 m;
        for (std::size_t i = 0; i < 16; ++i) {
            m.a[i] = a[i] - o.a[i];
        }
        return m;
    }

    Mat4 operator*(const Mat4 &o) const
    {
        Mat4 m;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t k = 0; k < 4; ++k) {
                const T lhs = (*this)(i, k);
                for (std::size_t j = 0; j < 4; ++j) {
                    m(i, j) += lhs * o(k, j);
                }
            }
        }
        return m;
    }

    template <typename S> Mat4 scaled(const S &s) const
    {
        Mat4 m;
        for (std::size_t i = 0; i < 16; ++i) {
            m.a[i] = a[i] * s;
        }
        return m;
    }

    /// Determinant by cofactor expansion over 2x2 minors.
    [[nodiscard]] T det() const
    {
        const auto &m = *this;
        const T s0 = m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
        const T s1 = m(0, 0) * m(1, 2) - m(1, 0) * m(0, 2);
        const T s2 = m(0, 0) * m(1, 3) - m(1, 0) * m(0, 3);
        const T s3 = m(0, 1) * m(1, 2) - m(1, 1) * m(0, 2);
        const T s4 = m(0, 1) * m(1, 3) - m(1, 1) * m(0, 3);
        const T s5 = m(0, 2) * m(1, 3) - m(1, 2) * m(0, 3);
        const T c5 = m(2, 2) * m(3, 3) - m(3, 2) * m(2, 3);
        const T c4 = m(2, 1) * m(3, 3) - m(3, 1) * m(2, 3);
        const T c3 = m(2, 1) * m(3, 2) - m(3, 1) * m(2, 2);
        const T c2 = m(2, 0) * m(3, 3) - m(3, 0) * m(2, 3);
        const T c1 = m(2, 0) * m(3, 2) - m(3, 0) * m(2, 2);
        const T c0 = m(2, 0) * m(3, 1) - m(3, 0) * m(2, 1);
        return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
    }

    /// Largest |entry| of this - o.
    [[nodiscard]] double max_abs_diff(const Mat4 &o) const
    {
        double worst = 0.0;
        for (std::size_t i = 0; i < 16; ++i) {
            worst = std::max(worst, static_cast<double>(std::abs(a[i] - o.a[i])));
        }
        return worst;
    }

    [[nodiscard]] double max_abs() const
    {
        double worst = 0.0;
        for (const auto &v : a) {
            worst = std::max(worst, static_cast<double>(std::abs(v)));
        }
        return worst;
    }
};

using Matrix4 = Mat4<double>;
using Complex = std::complex<double>;

inline FourVector operator*(const Matrix4 &m, const FourVector &x)
{
    FourVector out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = m(i, 0) * x.t + m(i, 1) * x.x + m(i, 2) * x.y + m(i, 3) * x.z;
    }
    return out;
}

// =============================================================================
// Intervals
// =============================================================================

/// dt^2 - |dx|^2 with signature (+,-,-,-).
inline double minkowski_interval(const FourVector &dx)
{
    return dx.t * dx.t - (dx.x * dx.x + dx.y * dx.y + dx.z * dx.z);
}

/// Finslerian line element
///   ds^2 = [(dx0 - nu.dx)^2 / (dx0^2 - dx^2)]^r (dx0^2 - dx^2).
///
/// Defined on the closed forward cone. On the light cone it is evaluated as the limit
/// (dx0 - nu.dx)^(2r) (dx0^2 - dx^2)^(1-r): zero for r < 1, (dx0 - nu.dx)^2 for r = 1.
/// Spacelike input is rejected unless r is an integer.
inline double finsler_interval_sq(const FourVector &dx, const AnisotropySpec &spec,
                                  const Tolerance &tol = {})
{
    const double base = minkowski_interval(dx);
    const double along = dx.t - dot3(spec.nu.vec(), dx.spatial());
    const double numerator = along * along;
    const double scale = dx.t * dx.t + dot3(dx.spatial(), dx.spatial());
    const bool integer_r = spec.r == std::round(spec.r);

    if (std::abs(base) <= tol.abs_tol * scale) {
        if (numerator <= tol.abs_tol * scale || spec.r < 1.0) {
            return 0.0;
        }
        FINSLER_FAIL_IF(spec.r > 1.0, ErrorKind::DegenerateRatio,
                        "lightlike displacement off the preferred null direction diverges for r > 1");
        return numerator;
    }
    FINSLER_FAIL_IF(base < 0.0 && !integer_r, ErrorKind::SpacelikeInput,
                    "spacelike displacement with non-integer r");
    return std::pow(numerator / base, spec.r) * base;
}

} // namespace finsler
