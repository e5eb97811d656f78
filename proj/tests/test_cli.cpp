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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using finsler::json;
using namespace finsler::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json golden(const std::string &name)
{
    std::ifstream in(std::string(FINSLER_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in.good()) << name;
    return json::parse(in);
}

/// Structural equality with numbers compared to an absolute tolerance.
void expect_json_near(const json &got, const json &want, double tol, const std::string &path = "$")
{
    if (want.is_number() && got.is_number()) {
        EXPECT_NEAR(got.get<double>(), want.get<double>(), tol) << path;
        return;
    }
    ASSERT_EQ(got.type(), want.type()) << path;
    if (want.is_object()) {
        ASSERT_EQ(got.size(), want.size()) << path;
        for (auto it = want.begin(); it != want.end(); ++it) {
            ASSERT_TRUE(got.contains(it.key())) << path << "." << it.key();
            expect_json_near(got[it.key()], it.value(), tol, path + "." + it.key());
        }
    } else if (want.is_array()) {
        ASSERT_EQ(got.size(), want.size()) << path;
        for (std::size_t i = 0; i < want.size(); ++i) {
            expect_json_near(got[i], want[i], tol, path + "[" + std::to_string(i) + "]");
        }
    } else {
        EXPECT_EQ(got, want) << path;
    }
}

} // namespace

TEST(Cli, BoostMatchesGolden)
{
    const Outcome o = invoke({"boost", "--nu", "0,0,1", "--n", "0,0,1", "--alpha", "1", "--x", "1,0,0,0"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    expect_json_near(doc, golden("boost_standard.json"), 1e-14);
    EXPECT_NEAR(doc["matrix"][0].get<double>(), std::cosh(1.0), 1e-15);
    EXPECT_NEAR(doc["matrix"][3].get<double>(), -std::sinh(1.0), 1e-15);
}

TEST(Cli, BoostOrthogonalMatchesGolden)
{
    const Outcome o = invoke({"boost", "--nu", "0,0,1", "--r", "0.5", "--n", "1,0,0", "--alpha", "1"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    expect_json_near(doc, golden("boost_orthogonal.json"), 1e-14);
    EXPECT_NEAR(doc["velocity"][0].get<double>(), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(doc["D"].get<double>(), 1.0, 1e-15);
}

TEST(Cli, BoostFromVelocity)
{
    const Outcome o = invoke({"boost", "--v", "0.6666666666666666,0,0.3333333333333333"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    EXPECT_NEAR(doc["params"]["alpha"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(doc["params"]["n"][0].get<double>(), 1.0, 1e-12);
}

TEST(Cli, ElementNeedsExactlyOneForm)
{
    EXPECT_EQ(invoke({"boost"}).code, kUsage);
    EXPECT_EQ(invoke({"boost", "--n", "1,0,0", "--alpha", "1", "--v", "0.1,0,0"}).code, kUsage);
    EXPECT_EQ(invoke({"boost", "--n", "1,0,0"}).code, kUsage);
}

TEST(Cli, ComposeMatchesGolden)
{
    const Outcome o = invoke({"compose", "--n1", "0,0,1", "--alpha1", "0.5", "--n2", "0,0,1", "--alpha2", "0.5"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    expect_json_near(doc, golden("compose_parallel.json"), 1e-14);
    EXPECT_NEAR(doc["params"]["alpha"].get<double>(), 1.0, 1e-15);
    EXPECT_FALSE(doc["identity"].get<bool>());
}

TEST(Cli, ComposeInverseFlagsIdentity)
{
    const Outcome o = invoke({"compose", "--n1", "1,0,1", "--alpha1", "0.8", "--n2", "1,0,1", "--alpha2", "-0.8"});
    ASSERT_EQ(o.code, kOk) << o.err;
    EXPECT_TRUE(json::parse(o.out)["identity"].get<bool>());
}

TEST(Cli, InvariantsMatchesGolden)
{
    const Outcome o = invoke({"invariants", "--r", "0.5", "--x", "2,1,0,0", "--v", "0.6,0,0", "--psi",
                              "1,0,0,0,0,0,0,0"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    expect_json_near(doc, golden("invariants.json"), 1e-14);
    EXPECT_NEAR(doc["event"]["axial_invariants"]["transverse_ratio"].get<double>(), 1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(doc["velocity"]["cylinder_level"].get<double>(), 0.5625, 1e-15);
    EXPECT_NEAR(doc["bispinor"]["finsler_invariant"].get<double>(), 1.0, 1e-15);
}

TEST(Cli, InvariantsDomainErrors)
{
    EXPECT_EQ(invoke({"invariants", "--r", "0.5", "--x", "1,2,0,0"}).code, kDomain);
    EXPECT_EQ(invoke({"invariants", "--r", "0.5", "--psi", "1,0,0,0,1,0,0,0"}).code, kDomain);
    EXPECT_EQ(invoke({"invariants", "--v", "1,0,0"}).code, kDomain);
    EXPECT_EQ(invoke({"invariants"}).code, kUsage);
    EXPECT_EQ(invoke({"invariants", "--x", "1,2,3"}).code, kUsage);
}

TEST(Cli, SpinorKeepsInvariant)
{
    const Outcome o = invoke({"spinor", "--nu", "0,1,0", "--r", "0.4", "--v", "0.3,0.2,-0.5", "--psi",
                              "0.5,0.1,-0.2,0.3,0.1,0,0.05,-0.1"});
    ASSERT_EQ(o.code, kOk) << o.err;
    const json doc = json::parse(o.out);
    const double before = doc["finsler_invariant"].get<double>();
    EXPECT_NEAR(doc["finsler_invariant_prime"].get<double>(), before, 1e-9 * std::abs(before));
    EXPECT_EQ(invoke({"spinor", "--v", "0.1,0,0"}).code, kUsage);
}

TEST(Cli, CheckIsDeterministic)
{
    const std::vector<std::string> args{"check", "--seed", "7", "--samples", "40"};
    const Outcome a = invoke(args);
    const Outcome b = invoke(args);
    ASSERT_EQ(a.code, kOk) << a.out;
    EXPECT_EQ(a.out, b.out);
    const json doc = json::parse(a.out);
    EXPECT_TRUE(doc["pass"].get<bool>());
    EXPECT_FALSE(doc["vacuous"].get<bool>());
    EXPECT_EQ(doc["suites"].size(), 12u);
    EXPECT_NE(invoke({"check", "--seed", "8", "--samples", "40"}).out, a.out);
}

TEST(Cli, CheckZeroSamplesIsVacuousPass)
{
    const Outcome o = invoke({"check", "--samples", "0"});
    ASSERT_EQ(o.code, kOk);
    const json doc = json::parse(o.out);
    EXPECT_TRUE(doc["vacuous"].get<bool>());
    EXPECT_TRUE(doc["pass"].get<bool>());
}

TEST(Cli, CheckSuiteSelection)
{
    const Outcome o = invoke({"check", "--samples", "10", "--suite", "spinor", "--suite", "core"});
    ASSERT_EQ(o.code, kOk);
    const json doc = json::parse(o.out);
    ASSERT_EQ(doc["suites"].size(), 2u);
    EXPECT_EQ(doc["suites"][0]["suite"], "spinor");
    EXPECT_EQ(invoke({"check", "--suite", "bogus"}).code, kUsage);
}

TEST(Cli, CheckFailureExitCode)
{
    // a tolerance far too coarse breaks the near-degenerate inversions and the tight properties fail
    const Outcome o = invoke({"--tol", "0.5", "check", "--samples", "50", "--suite", "continuity"});
    const json doc = json::parse(o.out);
    EXPECT_EQ(o.code, doc["pass"].get<bool>() ? kOk : kCheckFailed);
}

TEST(Cli, SurfaceCsv)
{
    const Outcome o = invoke({"surface", "--family", "horosphere", "--level", "1", "--format", "csv"});
    ASSERT_EQ(o.code, kOk) << o.err;
    std::istringstream in(o.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "vx,vy,vz,level");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 64);
}

TEST(Cli, SurfaceJsonToFile)
{
    const auto path = std::filesystem::temp_directory_path() / "finsler_surface_test.json";
    const Outcome o = invoke({"surface", "--family", "cylinder", "--level", "0", "--rows", "3", "--cols", "4",
                              "--out", path.string()});
    ASSERT_EQ(o.code, kOk) << o.err;
    EXPECT_NE(o.err.find("warning"), std::string::npos);
    std::ifstream in(path);
    const json doc = json::parse(in);
    EXPECT_EQ(doc["count"], 12);
    EXPECT_TRUE(doc["degenerate"].get<bool>());
    std::filesystem::remove(path);
}

TEST(Cli, SurfaceUsageAndDomainErrors)
{
    EXPECT_EQ(invoke({"surface", "--family", "horosphere", "--format", "xml"}).code, kUsage);
    EXPECT_EQ(invoke({"surface", "--family", "sphere"}).code, kUsage);
    EXPECT_EQ(invoke({"surface"}).code, kUsage);
    EXPECT_EQ(invoke({"surface", "--family", "horosphere", "--level", "-1"}).code, kDomain);
}

TEST(Cli, GlobalUsage)
{
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
    EXPECT_EQ(invoke({"--help"}).code, kOk);
    EXPECT_EQ(invoke({"boost", "--nu", "0,0,0", "--n", "1,0,0", "--alpha", "1"}).code, kUsage);
    EXPECT_EQ(invoke({"--tol", "-1", "boost", "--n", "1,0,0", "--alpha", "1"}).code, kUsage);
}
