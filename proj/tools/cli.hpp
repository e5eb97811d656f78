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

// Command-line front end. Every printed number comes from a library call; this file only
// parses arguments, dispatches and serializes.
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 check failure.

#include "finsler/conformance.hpp"
#include "finsler/finsler.hpp"
#include "finsler/serialization.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace finsler::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kCheckFailed = 3 };

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parses "a,b,c" into exactly `count` finite numbers.
inline std::vector<double> parse_numbers(const std::string &text, std::size_t count, const std::string &flag)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception &) {
            throw UsageError(flag + ": '" + item + "' is not a number");
        }
        if (used != item.size() || !std::isfinite(value)) {
            throw UsageError(flag + ": '" + item + "' is not a finite number");
        }
        out.push_back(value);
    }
    if (out.size() != count) {
        throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated numbers");
    }
    return out;
}

inline Vec3 parse_vec3(const std::string &text, const std::string &flag)
{
    const auto v = parse_numbers(text, 3, flag);
    return {v[0], v[1], v[2]};
}

/// Directions are normalized, so "1,1,0" is accepted.
inline UnitVector3 parse_direction(const std::string &text, const std::string &flag)
{
    const Vec3 v = parse_vec3(text, flag);
    if (norm3(v) == 0.0) {
        throw UsageError(flag + " must be a nonzero vector");
    }
    return UnitVector3::normalize(v);
}

inline FourVector parse_event(const std::string &text, const std::string &flag)
{
    const auto v = parse_numbers(text, 4, flag);
    return {v[0], v[1], v[2], v[3]};
}

inline Bispinor parse_bispinor(const std::string &text, const std::string &flag)
{
    const auto v = parse_numbers(text, 8, flag);
    return {Complex{v[0], v[1]}, Complex{v[2], v[3]}, Complex{v[4], v[5]}, Complex{v[6], v[7]}};
}

/// Group element given either as (--n, --alpha) or as --v.
struct ElementArgs {
    std::string n;
    std::optional<double> alpha;
    std::string v;

    void add_to(CLI::App *cmd, const std::string &suffix)
    {
        cmd->add_option("--n" + suffix, n, "boost direction x,y,z (normalized)");
        cmd->add_option("--alpha" + suffix, alpha, "group parameter alpha");
        cmd->add_option("--v" + suffix, v, "frame velocity vx,vy,vz (|v| < 1)");
    }

    [[nodiscard]] BoostParams resolve(const UnitVector3 &nu, const Tolerance &tol, const std::string &suffix) const
    {
        const bool by_params = !n.empty() || alpha.has_value();
        if (by_params == !v.empty()) {
            throw UsageError("give either --n" + suffix + " with --alpha" + suffix + ", or --v" + suffix);
        }
        if (by_params) {
            if (n.empty() || !alpha) {
                throw UsageError("--n" + suffix + " and --alpha" + suffix + " go together");
            }
            return BoostParams{parse_direction(n, "--n" + suffix), *alpha};
        }
        return params_from_velocity(nu, Velocity3{parse_vec3(v, "--v" + suffix)}, tol);
    }
};

inline json element_json(const AnisotropySpec &spec, const BoostParams &g, const Tolerance &tol)
{
    const Velocity3 v = velocity_from_params(spec.nu, g, tol);
    return json{{"params", g.canonical()},
                {"velocity", v},
                {"D", dilation_from_params(spec, g)}};
}

inline json report_json(const conformance::CheckReport &r)
{
    json props = json::array();
    for (const auto &p : r.properties) {
        json observed = std::isnan(p.observed) ? json(nullptr) : json(p.observed);
        props.push_back(json{{"name", p.name},
                             {"samples", p.samples},
                             {"observed", observed},
                             {"bound", p.lower_bound ? ">=" : "<="},
                             {"threshold", p.threshold},
                             {"pass", p.pass}});
    }
    return json{{"suite", r.suite}, {"seed", r.seed}, {"samples", r.samples}, {"pass", r.pass},
                {"properties", std::move(props)}};
}

/// Reads FINSLER_TOL; --tol takes precedence.
inline Tolerance resolve_tolerance(const std::optional<double> &flag)
{
    Tolerance tol;
    std::optional<double> value = flag;
    if (!value) {
        if (const char *env = std::getenv("FINSLER_TOL"); env != nullptr && *env != '\0') {
            value = parse_numbers(env, 1, "FINSLER_TOL")[0];
        }
    }
    if (value) {
        if (!(*value > 0.0)) {
            throw UsageError("tolerance must be > 0");
        }
        tol.abs_tol = *value;
        tol.rel_tol = *value;
    }
    return tol;
}

inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Generalized Lorentz boosts of a flat Finslerian event space", "finsler"};
    app.require_subcommand(1);
    std::optional<double> tol_flag;
    app.add_option("--tol", tol_flag, "absolute and relative tolerance (overrides FINSLER_TOL)");

    std::string nu_text = "0,0,1";
    double r = 0.0;
    const auto add_space = [&](CLI::App *cmd) {
        cmd->add_option("--nu", nu_text, "preferred direction x,y,z")->capture_default_str();
        cmd->add_option("--r", r, "anisotropy exponent r")->capture_default_str();
    };

    // boost
    CLI::App *boost_cmd = app.add_subcommand("boost", "generalized boost matrix and parametrizations");
    add_space(boost_cmd);
    ElementArgs boost_el;
    boost_el.add_to(boost_cmd, "");
    std::string boost_x;
    boost_cmd->add_option("--x", boost_x, "event t,x,y,z to transform");

    // compose
    CLI::App *compose_cmd = app.add_subcommand("compose", "compose g = g2 g1 (g1 applied first)");
    add_space(compose_cmd);
    ElementArgs first, second;
    first.add_to(compose_cmd, "1");
    second.add_to(compose_cmd, "2");

    // invariants
    CLI::App *inv_cmd = app.add_subcommand("invariants", "invariants of an event, velocity and/or bispinor");
    add_space(inv_cmd);
    std::string inv_x, inv_v, inv_psi;
    inv_cmd->add_option("--x", inv_x, "event t,x,y,z");
    inv_cmd->add_option("--v", inv_v, "velocity vx,vy,vz");
    inv_cmd->add_option("--psi", inv_psi, "bispinor re0,im0,re1,im1,re2,im2,re3,im3");

    // spinor
    CLI::App *spinor_cmd = app.add_subcommand("spinor", "bispinor transformation of a generalized boost");
    add_space(spinor_cmd);
    std::string sp_v, sp_psi;
    spinor_cmd->add_option("--v", sp_v, "frame velocity vx,vy,vz")->required();
    spinor_cmd->add_option("--psi", sp_psi, "bispinor re0,im0,re1,im1,re2,im2,re3,im3")->required();

    // check
    CLI::App *check_cmd = app.add_subcommand("check", "seeded randomized conformance suites");
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::vector<std::string> suite_filter;
    check_cmd->add_option("--seed", seed, "master seed")->capture_default_str();
    check_cmd->add_option("--samples", samples, "samples per suite")->capture_default_str();
    check_cmd->add_option("--suite", suite_filter, "suite name (repeatable); default all");

    // surface
    CLI::App *surface_cmd = app.add_subcommand("surface", "sample an invariant surface of velocity space");
    surface_cmd->add_option("--nu", nu_text, "preferred direction x,y,z")->capture_default_str();
    std::string family_text, format = "json", out_path = "-";
    double level = 1.0;
    SurfaceGrid grid;
    surface_cmd->add_option("--family", family_text, "horosphere | cylinder")->required();
    surface_cmd->add_option("--level", level, "level of the family function")->capture_default_str();
    surface_cmd->add_option("--rows", grid.rows, "grid rows")->capture_default_str();
    surface_cmd->add_option("--cols", grid.cols, "grid columns")->capture_default_str();
    surface_cmd->add_option("--extent", grid.extent, "grid half-width")->capture_default_str();
    surface_cmd->add_option("--format", format, "json | csv")->capture_default_str();
    surface_cmd->add_option("--out", out_path, "output path, '-' for stdout")->capture_default_str();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        const Tolerance tol = resolve_tolerance(tol_flag);
        const auto space = [&] { return AnisotropySpec{parse_direction(nu_text, "--nu"), r}; };

        if (boost_cmd->parsed()) {
            const AnisotropySpec spec = space();
            const BoostParams g = boost_el.resolve(spec.nu, tol, "");
            json doc{{"space", spec}};
            doc.update(element_json(spec, g, tol));
            const Matrix4 m = generalized_boost_matrix(spec, g, tol);
            doc["matrix"] = m;
            if (!boost_x.empty()) {
                doc["x"] = parse_event(boost_x, "--x");
                doc["x_prime"] = m * parse_event(boost_x, "--x");
            }
            out << doc.dump(2) << "\n";
            return kOk;
        }

        if (compose_cmd->parsed()) {
            const AnisotropySpec spec = space();
            const BoostParams g1 = first.resolve(spec.nu, tol, "1");
            const BoostParams g2 = second.resolve(spec.nu, tol, "2");
            const Composition c = compose(spec.nu, g1, g2, tol);
            json doc{{"space", spec}};
            doc.update(element_json(spec, c.params, tol));
            doc["identity"] = c.identity;
            doc["velocity_from_addition"] =
                add_velocities(spec.nu, velocity_from_params(spec.nu, g1, tol), velocity_from_params(spec.nu, g2, tol));
            doc["residual"] = boost_matrix(spec.nu, c.params, tol)
                                  .max_abs_diff(boost_matrix(spec.nu, g2, tol) * boost_matrix(spec.nu, g1, tol));
            out << doc.dump(2) << "\n";
            return kOk;
        }

        if (inv_cmd->parsed()) {
            const AnisotropySpec spec = space();
            if (inv_x.empty() && inv_v.empty() && inv_psi.empty()) {
                throw UsageError("invariants needs at least one of --x, --v, --psi");
            }
            json doc{{"space", spec}};
            if (!inv_x.empty()) {
                const FourVector x = parse_event(inv_x, "--x");
                const AxialInvariants ax = axial_invariants(spec, x);
                doc["event"] = json{{"x", x},
                                    {"minkowski_interval", minkowski_interval(x)},
                                    {"finsler_interval_sq", finsler_interval_sq(x, spec, tol)},
                                    {"axial_invariants",
                                     json{{"null_coordinate", ax.null_coordinate},
                                          {"interval", ax.interval},
                                          {"transverse_ratio", ax.transverse_ratio}}}};
            }
            if (!inv_v.empty()) {
                const Velocity3 v{parse_vec3(inv_v, "--v")};
                doc["velocity"] = json{{"v", v},
                                       {"horosphere_level", horosphere_level(spec.nu, v)},
                                       {"cylinder_level", cylinder_level(spec.nu, v)},
                                       {"dilation_factor", dilation_factor(spec, v)}};
            }
            if (!inv_psi.empty()) {
                const Bispinor psi = parse_bispinor(inv_psi, "--psi");
                doc["bispinor"] = json{{"psi", bispinor_to_json(psi)},
                                       {"scalar_density", scalar_density(psi, tol)},
                                       {"current", vector_current(psi, tol)},
                                       {"finsler_invariant", finsler_bispinor_invariant(spec, psi, tol)}};
            }
            out << doc.dump(2) << "\n";
            return kOk;
        }

        if (spinor_cmd->parsed()) {
            const AnisotropySpec spec = space();
            const Velocity3 v{parse_vec3(sp_v, "--v")};
            const Bispinor psi = parse_bispinor(sp_psi, "--psi");
            const Bispinor image = bispinor_transform(spec, v, psi);
            json doc{{"space", spec},
                     {"v", v},
                     {"D", dilation_factor(spec, v)},
                     {"psi", bispinor_to_json(psi)},
                     {"psi_prime", bispinor_to_json(image)},
                     {"finsler_invariant", nullptr},
                     {"finsler_invariant_prime", nullptr}};
            if (std::abs(scalar_density(psi, tol)) >= tol.abs_tol) {
                doc["finsler_invariant"] = finsler_bispinor_invariant(spec, psi, tol);
                doc["finsler_invariant_prime"] = finsler_bispinor_invariant(spec, image, tol);
            }
            out << doc.dump(2) << "\n";
            return kOk;
        }

        if (check_cmd->parsed()) {
            std::vector<const conformance::SuiteEntry *> selected;
            if (suite_filter.empty()) {
                for (const auto &s : conformance::suites()) {
                    selected.push_back(&s);
                }
            } else {
                for (const auto &name : suite_filter) {
                    const auto *s = conformance::find_suite(name);
                    if (s == nullptr) {
                        throw UsageError("unknown suite '" + name + "'");
                    }
                    selected.push_back(s);
                }
            }
            json reports = json::array();
            bool pass = true;
            for (const auto *s : selected) {
                const auto report = conformance::run_suite(*s, seed, samples, tol);
                pass = pass && report.pass;
                reports.push_back(report_json(report));
            }
            const json doc{{"seed", seed},
                           {"samples", samples},
                           {"vacuous", samples == 0},
                           {"pass", pass},
                           {"suites", std::move(reports)}};
            out << doc.dump(2) << "\n";
            return pass ? kOk : kCheckFailed;
        }

        if (surface_cmd->parsed()) {
            SurfaceFamily family;
            if (family_text == "horosphere") {
                family = SurfaceFamily::Horosphere;
            } else if (family_text == "cylinder") {
                family = SurfaceFamily::Cylinder;
            } else {
                throw UsageError("--family must be horosphere or cylinder");
            }
            if (format != "json" && format != "csv") {
                throw UsageError("--format must be json or csv");
            }
            const UnitVector3 nu = parse_direction(nu_text, "--nu");
            const SurfaceSample sample = sample_surface(nu, family, level, grid);
            if (sample.degenerate) {
                err << "warning: cylinder of level 0 degenerates to the diameter along nu\n";
            }

            std::ofstream file;
            std::ostream *sink = &out;
            if (out_path != "-") {
                file.open(out_path);
                if (!file) {
                    err << "error: cannot open '" << out_path << "' for writing\n";
                    return kUsage;
                }
                sink = &file;
            }
            if (format == "json") {
                json doc = surface_to_json(sample);
                doc["nu"] = nu;
                *sink << doc.dump(2) << "\n";
            } else {
                write_surface_csv(*sink, sample, nu);
            }
            if (file.is_open()) {
                file.close();
                if (!file) {
                    err << "error: failed writing '" << out_path << "'\n";
                    return kUsage;
                }
            }
            return kOk;
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    }
    return kUsage;
}

} // namespace finsler::cli
