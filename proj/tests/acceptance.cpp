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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Thresholds are pinned here independently of the ones carried by the suites.

#include "finsler/conformance.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

using namespace finsler;
using namespace finsler::conformance;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::size_t kSamples = 1000;

struct Requirement {
    std::string suite;
    std::string property;
    double threshold;
    bool lower_bound = false;
    std::size_t min_samples = 1;
};

struct Criterion {
    int id;
    std::string title;
    std::vector<Requirement> requirements;
};

const std::vector<Criterion> &criteria()
{
    static const std::vector<Criterion> all = {
        {1, "oracle equivalence of closed-form boosts",
         {{"oracle", "boost_vs_expm_abs", 1e-10, false, kSamples},
          {"oracle", "generalized_boost_vs_expm_abs", 1e-10, false, kSamples}}},
        {2, "group closure and composition law",
         {{"closure", "composition_vs_matrix_product_abs", 1e-10, false, kSamples},
          {"closure", "axial_rapidity_additivity_abs", 1e-12, false, kSamples}}},
        {3, "metric invariance",
         {{"metric", "finsler_interval_invariance_rel", 1e-10, false, kSamples},
          {"metric", "minkowski_interval_invariance_rel", 1e-10, false, kSamples},
          {"core", "r0_equals_minkowski_rel", 1e-12, false, kSamples}}},
        {4, "parametrization round trip",
         {{"roundtrip", "params_roundtrip_abs", 1e-9, false, kSamples},
          {"roundtrip", "params_roundtrip_near_degenerate_abs", 1e-9, false, 100}}},
        {5, "velocity addition consistency",
         {{"addition", "addition_vs_compose_abs", 1e-10, false, kSamples},
          {"addition", "add_nu_returns_nu_abs", 1e-12, false, kSamples}}},
        {6, "spinor intertwining",
         {{"spinor", "intertwining_abs", 1e-10, false, kSamples},
          {"spinor", "generator_square_abs", 1e-12, false, kSamples},
          {"spinor", "closed_form_vs_expm_abs", 1e-10, false, kSamples}}},
        {7, "bispinor two-path equality",
         {{"bispinor", "closed_form_vs_composite_rel", 1e-9, false, kSamples},
          {"bispinor", "density_weight_rel", 1e-10, false, kSamples}}},
        {8, "bispinor invariant",
         {{"bispinor_invariant", "finsler_form_invariance_rel", 1e-9, false, kSamples}}},
        {9, "subgroup invariants",
         {{"subgroups", "abelian_v_preserves_interval_abs", 1e-10, false, kSamples},
          {"subgroups", "abelian_v_preserves_null_coordinate_abs", 1e-10, false, kSamples},
          {"subgroups", "axial_null_coordinate_scaling_rel", 1e-10, false, kSamples},
          {"subgroups", "axial_interval_scaling_rel", 1e-10, false, kSamples},
          {"subgroups", "axial_transverse_ratio_rel", 1e-9, false, kSamples}}},
        {10, "velocity-space geometry",
         {{"velocity_space", "induced_motion_isometry_rel", 1e-9, false, kSamples},
          {"velocity_space", "horosphere_level_invariance_rel", 1e-9, false, kSamples},
          {"velocity_space", "cylinder_level_invariance_rel", 1e-9, false, kSamples},
          {"velocity_space", "dilation_equals_level_power_abs", 1e-12, false, kSamples}}},
        {11, "branch continuity",
         {{"continuity", "boost_branch_gap_abs", 1e-9},
          {"continuity", "velocity_branch_gap_abs", 1e-9},
          {"continuity", "spinor_branch_gap_abs", 1e-9}}},
    };
    return all;
}

const PropertyResult *lookup(const std::map<std::string, CheckReport> &reports, const Requirement &req)
{
    auto it = reports.find(req.suite);
    if (it == reports.end()) {
        return nullptr;
    }
    for (const auto &p : it->second.properties) {
        if (p.name == req.property) {
            return &p;
        }
    }
    return nullptr;
}

std::string capture(const std::string &command, int &status)
{
    std::string out;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), got);
    }
    status = pclose(pipe);
    return out;
}

} // namespace

int main()
{
    std::map<std::string, CheckReport> reports;
    for (const auto &suite : suites()) {
        reports.emplace(std::string(suite.name), run_suite(suite, kSeed, kSamples));
    }

    int failures = 0;
    for (const auto &c : criteria()) {
        bool pass = true;
        std::string detail;
        for (const auto &req : c.requirements) {
            const PropertyResult *p = lookup(reports, req);
            char buf[256];
            if (p == nullptr) {
                pass = false;
                std::snprintf(buf, sizeof buf, "%s/%s missing", req.suite.c_str(), req.property.c_str());
            } else {
                const bool ok = p->samples >= req.min_samples && !std::isnan(p->observed) &&
                                (req.lower_bound ? p->observed >= req.threshold : p->observed <= req.threshold);
                pass = pass && ok;
                std::snprintf(buf, sizeof buf, "%s=%.3g%s%.0e(n=%zu)", req.property.c_str(), p->observed,
                              req.lower_bound ? ">=" : "<=", req.threshold, p->samples);
            }
            detail += detail.empty() ? buf : std::string("; ") + buf;
        }
        failures += pass ? 0 : 1;
        std::printf("[%s] AC%d %s: %s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), detail.c_str());
    }

    // 12: byte-identical reports from two separate processes
    const std::string command = std::string("\"") + FINSLER_CLI_PATH + "\" check --seed 42 --samples 100";
    int status_a = 0, status_b = 0;
    const std::string first = capture(command, status_a);
    const std::string second = capture(command, status_b);
    const bool deterministic = status_a == 0 && status_b == 0 && !first.empty() && first == second;
    failures += deterministic ? 0 : 1;
    std::printf("[%s] AC12 CLI determinism: check --seed 42 --samples 100 twice, %zu bytes, %s\n",
                deterministic ? "PASS" : "FAIL", first.size(), first == second ? "identical" : "different");

    std::printf("%d of 12 criteria passed\n", 12 - failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
