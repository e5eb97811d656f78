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

// JSON encodings:
//   FourVector            [t, x, y, z]
//   UnitVector3/Velocity3 [x, y, z]
//   Matrix4               16 numbers, row-major
//   AnisotropySpec        {"nu": [..], "r": ..}
//   BoostParams           {"n": [..], "alpha": ..}
//   Bispinor              [[re, im] x 4]
//   SurfaceSample         {"family", "level", "degenerate", "points": [[vx, vy, vz], ..]}
// plus CSV for surface samples (header "vx,vy,vz,level").

#include "finsler/boost.hpp"
#include "finsler/core.hpp"
#include "finsler/spinor.hpp"
#include "finsler/velocity_space.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <ostream>
#include <string>

namespace finsler {

using json = nlohmann::ordered_json;

namespace detail {

inline const json &expect_array(const json &j, std::size_t size, const char *what)
{
    FINSLER_FAIL_IF(!j.is_array() || j.size() != size, ErrorKind::InvalidArgument,
                    std::string(what) + " must be an array of " + std::to_string(size) + " numbers");
    for (const auto &e : j) {
        FINSLER_FAIL_IF(!e.is_number(), ErrorKind::InvalidArgument, std::string(what) + " entries must be numbers");
    }
    return j;
}

} // namespace detail

inline void to_json(json &j, const Vec3 &v) { j = json::array({v.x, v.y, v.z}); }
inline void from_json(const json &j, Vec3 &v)
{
    detail::expect_array(j, 3, "3-vector");
    v = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

inline void to_json(json &j, const UnitVector3 &u) { to_json(j, u.vec()); }
inline void from_json(const json &j, UnitVector3 &u)
{
    Vec3 v;
    from_json(j, v);
    u = UnitVector3(v);
}

inline void to_json(json &j, const Velocity3 &v) { to_json(j, v.vec()); }
inline void from_json(const json &j, Velocity3 &v)
{
    Vec3 raw;
    from_json(j, raw);
    v = Velocity3(raw);
}

inline void to_json(json &j, const FourVector &x) { j = json::array({x.t, x.x, x.y, x.z}); }
inline void from_json(const json &j, FourVector &x)
{
    detail::expect_array(j, 4, "4-vector");
    x = {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

inline void to_json(json &j, const Matrix4 &m)
{
    j = json::array();
    for (double v : m.a) {
        j.push_back(v);
    }
}
inline void from_json(const json &j, Matrix4 &m)
{
    detail::expect_array(j, 16, "matrix");
    for (std::size_t i = 0; i < 16; ++i) {
        m.a[i] = j[i].get<double>();
    }
}

inline void to_json(json &j, const AnisotropySpec &s) { j = json{{"nu", s.nu}, {"r", s.r}}; }
inline void from_json(const json &j, AnisotropySpec &s)
{
    FINSLER_FAIL_IF(!j.is_object() || !j.contains("nu") || !j.contains("r"), ErrorKind::InvalidArgument,
                    "anisotropy spec needs \"nu\" and \"r\"");
    s = AnisotropySpec(j.at("nu").get<UnitVector3>(), j.at("r").get<double>());
}

inline void to_json(json &j, const BoostParams &g) { j = json{{"n", g.n}, {"alpha", g.alpha}}; }
inline void from_json(const json &j, BoostParams &g)
{
    FINSLER_FAIL_IF(!j.is_object() || !j.contains("n") || !j.contains("alpha"), ErrorKind::InvalidArgument,
                    "boost parameters need \"n\" and \"alpha\"");
    g = BoostParams(j.at("n").get<UnitVector3>(), j.at("alpha").get<double>());
}

inline json bispinor_to_json(const Bispinor &psi)
{
    json j = json::array();
    for (const auto &c : psi) {
        j.push_back(json::array({c.real(), c.imag()}));
    }
    return j;
}

inline Bispinor bispinor_from_json(const json &j)
{
    FINSLER_FAIL_IF(!j.is_array() || j.size() != 4, ErrorKind::InvalidArgument,
                    "bispinor must be an array of 4 [re, im] pairs");
    Bispinor psi;
    for (std::size_t k = 0; k < 4; ++k) {
        detail::expect_array(j[k], 2, "bispinor component");
        psi[k] = Complex{j[k][0].get<double>(), j[k][1].get<double>()};
    }
    return psi;
}

inline json surface_to_json(const SurfaceSample &s)
{
    json points = json::array();
    for (const auto &p : s.points) {
        points.push_back(p);
    }
    return json{{"family", std::string(to_string(s.family))},
                {"level", s.level},
                {"degenerate", s.degenerate},
                {"count", s.points.size()},
                {"points", std::move(points)}};
}

/// One row per point: vx,vy,vz,level with the level re-evaluated at the point.
inline void write_surface_csv(std::ostream &out, const SurfaceSample &s, const UnitVector3 &nu)
{
    out << "vx,vy,vz,level\n";
    char buf[128];
    for (const auto &p : s.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.vx, p.vy, p.vz,
                      surface_level(s.family, nu, p));
        out << buf;
    }
}

} // namespace finsler
