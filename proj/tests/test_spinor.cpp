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

#include "finsler/boost.hpp"
#include "finsler/conformance/expm.hpp"
#include "finsler/random.hpp"
#include "finsler/spinor.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace finsler;
using conformance::expm;

namespace {

const UnitVector3 kX{1.0, 0.0, 0.0};
const UnitVector3 kZ{0.0, 0.0, 1.0};
const Complex kI{0.0, 1.0};

const SpinorMatrix kId = SpinorMatrix::identity();

double eta(std::size_t m) { return m == 0 ? 1.0 : -1.0; }

} // namespace

TEST(GammaBasis, CliffordRelations)
{
    const auto &g = gamma_basis().gamma;
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = 0; n < 4; ++n) {
            const SpinorMatrix anti = g[m] * g[n] + g[n] * g[m];
            const SpinorMatrix want = m == n ? kId.scaled(2.0 * eta(m)) : SpinorMatrix{};
            EXPECT_LT(anti.max_abs_diff(want), 1e-15) << m << "," << n;
        }
    }
    EXPECT_EQ((g[0] * g[0]).max_abs_diff(kId), 0.0);
}

TEST(GammaBasis, SigmaIsSpinBlock)
{
    // Sigma^k = (i/2) eps_kij gamma^i gamma^j
    const auto &b = gamma_basis();
    EXPECT_LT(b.sigma[2].max_abs_diff((b.gamma[1] * b.gamma[2]).scaled(kI)), 1e-15);
    EXPECT_LT(b.sigma[0].max_abs_diff((b.gamma[2] * b.gamma[3]).scaled(kI)), 1e-15);
    EXPECT_LT(b.sigma[1].max_abs_diff((b.gamma[3] * b.gamma[1]).scaled(kI)), 1e-15);
}

TEST(DiracAdjoint, Examples)
{
    const RowBispinor upper = dirac_adjoint({1.0, 0.0, 0.0, 0.0});
    EXPECT_EQ(upper[0], Complex(1.0));
    EXPECT_EQ(upper[2], Complex(0.0));
    const RowBispinor lower = dirac_adjoint({0.0, 0.0, 1.0, 0.0});
    EXPECT_EQ(lower[2], Complex(-1.0));
    EXPECT_EQ(dirac_adjoint({kI, 0.0, 0.0, 0.0})[0], -kI);
}

TEST(SpinorGenerator, SquareIsAxialComponentSquared)
{
    Rng rng(201);
    for (int i = 0; i < 500; ++i) {
        const UnitVector3 nu = rng.direction();
        const UnitVector3 n = rng.direction();
        const SpinorMatrix k = spinor_generator(nu, n);
        const double c = dot3(nu.vec(), n.vec());
        EXPECT_LT((k * k).max_abs_diff(kId.scaled(c * c)), 1e-12);
        EXPECT_LT((k * k * k).max_abs_diff(k.scaled(c * c)), 1e-12);
    }
}

TEST(SpinorGenerator, SpecialDirections)
{
    const SpinorMatrix along = spinor_generator(kZ, kZ);
    EXPECT_LT(along.max_abs_diff(alpha_dot(kZ.vec()).scaled(-1.0)), 0.0 + 1e-16);
    EXPECT_LT((along * along).max_abs_diff(kId), 1e-15);
    const SpinorMatrix orth = spinor_generator(kZ, kX);
    EXPECT_LT((orth * orth).max_abs(), 1e-15);
}

TEST(SpinorBoost, Examples)
{
    EXPECT_EQ(spinor_boost(kZ, {kX, 0.0}).max_abs_diff(kId), 0.0);
    // nilpotent case: the series terminates after the linear term
    const double a = 1.7;
    const SpinorMatrix want = kId + spinor_generator(kZ, kX).scaled(a / 2);
    EXPECT_LT(spinor_boost(kZ, {kX, a}).max_abs_diff(want), 1e-15);
    // along nu: cosh(a/2) - sinh(a/2) alpha_z
    const SpinorMatrix along = spinor_boost(kZ, {kZ, a});
    EXPECT_NEAR(along(0, 0).real(), std::cosh(a / 2), 1e-15);
    EXPECT_NEAR(along(0, 2).real(), -std::sinh(a / 2), 1e-15);
}

TEST(SpinorBoost, MatchesExponential)
{
    Rng rng(202);
    for (int i = 0; i < 1000; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g = rng.boost_params();
        const SpinorMatrix exact = expm(spinor_generator(nu, g.n).scaled(Complex(g.alpha / 2)));
        ASSERT_LT(spinor_boost(nu, g).max_abs_diff(exact), 1e-10);
    }
}

TEST(SpinorBoost, UnimodularAndGroupLaw)
{
    Rng rng(203);
    for (int i = 0; i < 500; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g = rng.boost_params();
        EXPECT_LT(std::abs(spinor_boost(nu, g).det() - 1.0), 1e-10);
        const double a = rng.uniform(-1.5, 1.5);
        const double b = rng.uniform(-1.5, 1.5);
        const SpinorMatrix prod = spinor_boost(nu, {g.n, a}) * spinor_boost(nu, {g.n, b});
        EXPECT_LT(prod.max_abs_diff(spinor_boost(nu, {g.n, a + b})), 1e-10);
        EXPECT_LT((spinor_boost(nu, g) * spinor_boost(nu, inverse(g))).max_abs_diff(kId), 1e-10);
    }
}

TEST(SpinorBoost, Intertwines)
{
    // S^{-1} gamma^n S = Lambda^n_m gamma^m
    const auto &gam = gamma_basis().gamma;
    Rng rng(204);
    for (int i = 0; i < 500; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g = rng.boost_params();
        const SpinorMatrix s = spinor_boost(nu, g);
        const SpinorMatrix s_inv = spinor_boost(nu, inverse(g));
        const Matrix4 lam = boost_matrix(nu, g);
        for (std::size_t n = 0; n < 4; ++n) {
            SpinorMatrix want;
            for (std::size_t m = 0; m < 4; ++m) {
                want = want + gam[m].scaled(Complex(lam(n, m)));
            }
            ASSERT_LT((s_inv * gam[n] * s).max_abs_diff(want), 1e-10);
        }
    }
}

TEST(Bilinears, DensityAndCurrent)
{
    const Bispinor up{1.0, 0.0, 0.0, 0.0};
    EXPECT_EQ(scalar_density(up), 1.0);
    EXPECT_EQ(vector_current(up), (FourVector{1, 0, 0, 0}));
    const Bispinor low{0.0, 0.0, 1.0, 0.0};
    EXPECT_EQ(scalar_density(low), -1.0);
    // J^0 = Psi^dagger Psi
    Rng rng(205);
    for (int i = 0; i < 100; ++i) {
        const Bispinor psi = rng.bispinor();
        EXPECT_NEAR(vector_current(psi).t, detail::norm_sq(psi), 1e-14);
        // timelike or null current: J^2 = (Psi-bar Psi)^2 + (Psi-bar i gamma5 Psi)^2 >= (Psi-bar Psi)^2
        const FourVector j = vector_current(psi);
        EXPECT_GE(minkowski_interval(j) + 1e-12, std::pow(scalar_density(psi), 2));
    }
}

TEST(BispinorTransform, ZeroVelocityIsIdentity)
{
    Rng rng(206);
    const Bispinor psi = rng.bispinor();
    const Bispinor out = bispinor_transform({kZ, 0.4}, {0, 0, 0}, psi);
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_NEAR(std::abs(out[k] - psi[k]), 0.0, 1e-15);
    }
}

TEST(BispinorTransform, EqualsDilatedSpinorBoost)
{
    Rng rng(207);
    for (int i = 0; i < 500; ++i) {
        const AnisotropySpec spec = rng.spec();
        const Velocity3 v = rng.velocity();
        const BoostParams g = params_from_velocity(spec.nu, v);
        const double d = dilation_factor(spec, v);
        const SpinorMatrix composite = spinor_boost(spec.nu, g).scaled(std::pow(d, kBispinorWeight));
        const SpinorMatrix closed = bispinor_matrix(spec, v);
        ASSERT_LT(closed.max_abs_diff(composite), 1e-9 * composite.max_abs());
    }
}

TEST(BispinorTransform, DensityScalesWithWeight)
{
    Rng rng(208);
    for (int i = 0; i < 500; ++i) {
        const AnisotropySpec spec = rng.spec();
        const Velocity3 v = rng.velocity();
        const Bispinor psi = rng.bispinor();
        const double rho = scalar_density(psi);
        if (std::abs(rho) < 0.1) {
            continue;
        }
        const double d = dilation_factor(spec, v);
        const Bispinor out = bispinor_transform(spec, v, psi);
        const double want = std::pow(d, -3.0) * rho;
        EXPECT_NEAR(scalar_density(out), want, 1e-10 * std::abs(want));
    }
}

TEST(FinslerInvariant, Examples)
{
    Rng rng(209);
    for (int i = 0; i < 20; ++i) {
        const Bispinor psi = rng.bispinor();
        EXPECT_EQ(finsler_bispinor_invariant({rng.direction(), 0.0}, psi), scalar_density(psi));
    }
    // J = (1, 0, 0, 0) so the projected current equals the density
    for (double r : {-0.5, 0.3, 0.9}) {
        EXPECT_DOUBLE_EQ(finsler_bispinor_invariant({kZ, r}, {1.0, 0.0, 0.0, 0.0}), 1.0);
    }
}

TEST(FinslerInvariant, UnchangedByTransform)
{
    Rng rng(210);
    int checked = 0;
    while (checked < 500) {
        const AnisotropySpec spec = rng.spec();
        const Velocity3 v = rng.velocity();
        const Bispinor psi = rng.bispinor();
        if (std::abs(scalar_density(psi)) < 0.1) {
            continue;
        }
        ++checked;
        const double before = finsler_bispinor_invariant(spec, psi);
        const double after = finsler_bispinor_invariant(spec, bispinor_transform(spec, v, psi));
        ASSERT_NEAR(after, before, 1e-9 * std::abs(before));
    }
}

TEST(FinslerInvariant, NullDensity)
{
    // Psi-bar Psi = |a|^2 - |c|^2 = 0
    try {
        finsler_bispinor_invariant({kZ, 0.5}, {1.0, 0.0, 1.0, 0.0});
        FAIL() << "expected NullDensity";
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::NullDensity);
    }
}
