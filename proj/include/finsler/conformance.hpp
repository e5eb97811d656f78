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

// Randomized conformance suites. Each suite draws from its own generator, seeded from the
// master seed and the suite name, and reports the worst deviation seen for every property.
// Thresholds are fixed here; `Tolerance` only configures the library calls under test.

#include "finsler/boost.hpp"
#include "finsler/conformance/expm.hpp"
#include "finsler/core.hpp"
#include "finsler/random.hpp"
#include "finsler/spinor.hpp"
#include "finsler/subgroups.hpp"
#include "finsler/velocity_space.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace finsler::conformance {

struct PropertyResult {
    std::string name;
    std::size_t samples = 0;
    double observed = 0.0;  // worst deviation (or smallest margin for lower bounds)
    double threshold = 0.0;
    bool lower_bound = false; // pass iff observed >= threshold instead of <=
    bool pass = true;
};

struct CheckReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<PropertyResult> properties;
    bool pass = true;
};

/// Worst-case tracker for one property.
class Property {
  public:
    Property(std::string name, double threshold, bool lower_bound = false)
        : name_(std::move(name)), threshold_(threshold), lower_bound_(lower_bound),
          worst_(lower_bound ? std::numeric_limits<double>::infinity() : 0.0)
    {
    }

    void observe(double value)
    {
        ++count_;
        if (std::isnan(value)) {
            nan_ = true;
            return;
        }
        worst_ = lower_bound_ ? std::min(worst_, value) : std::max(worst_, value);
    }

    [[nodiscard]] PropertyResult result() const
    {
        PropertyResult r;
        r.name = name_;
        r.samples = count_;
        r.threshold = threshold_;
        r.lower_bound = lower_bound_;
        if (count_ == 0) {
            r.observed = 0.0;
            r.pass = true;
            return r;
        }
        r.observed = nan_ ? std::numeric_limits<double>::quiet_NaN() : worst_;
        r.pass = !nan_ && (lower_bound_ ? worst_ >= threshold_ : worst_ <= threshold_);
        return r;
    }

  private:
    std::string name_;
    double threshold_;
    bool lower_bound_;
    double worst_;
    std::size_t count_ = 0;
    bool nan_ = false;
};

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline double vec_diff(const Vec3 &a, const Vec3 &b) { return norm3(a - b); }

inline double four_diff(const FourVector &a, const FourVector &b)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// Largest |entry| relative to the largest |entry| of the reference.
template <typename T> double rel_matrix_diff(const Mat4<T> &a, const Mat4<T> &ref)
{
    return a.max_abs_diff(ref) / std::max(ref.max_abs(), 1e-300);
}

/// sum_m L^n_m gamma^m
inline SpinorMatrix mixed_gammas(const Matrix4 &lorentz, std::size_t row)
{
    const auto &g = gamma_basis();
    SpinorMatrix acc;
    for (std::size_t m = 0; m < 4; ++m) {
        acc = acc + g.gamma[m].scaled(lorentz(row, m));
    }
    return acc;
}

/// Random direction n whose axial rapidity nu.n.alpha lies strictly inside (-band, band).
inline BoostParams near_degenerate_params(Rng &rng, const UnitVector3 &nu, double band)
{
    double alpha = rng.uniform(-3.0, 3.0);
    while (std::abs(alpha) < 0.01) {
        alpha = rng.uniform(-3.0, 3.0);
    }
    const double target = rng.uniform(-0.99, 0.99) * band;
    const double cos_angle = target / alpha;
    const UnitVector3 perp = UnitVector3::normalize(cross3(nu.vec(), rng.direction().vec()));
    const double sin_angle = std::sqrt(1.0 - cos_angle * cos_angle);
    return {UnitVector3::normalize(nu.vec() * cos_angle + perp.vec() * sin_angle), alpha};
}

/// Random Abelian element with alpha in [-3, 3].
inline AbelianParams abelian_params(Rng &rng, const UnitVector3 &nu)
{
    const UnitVector3 perp = UnitVector3::normalize(cross3(nu.vec(), rng.direction().vec()));
    return {nu, perp, rng.uniform(-3.0, 3.0)};
}

// -----------------------------------------------------------------------------
// Suites
// -----------------------------------------------------------------------------

using SuiteFn = std::function<std::vector<PropertyResult>(Rng &, std::size_t, const Tolerance &)>;

/// Finsler interval: Minkowski limit, degree-2 homogeneity, joint rotation invariance.
inline std::vector<PropertyResult> suite_core(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property minkowski("r0_equals_minkowski_rel", 1e-12);
    Property homogeneity("homogeneity_rel", 1e-10);
    Property rotation("rotation_invariance_rel", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const FourVector dx = rng.timelike();
        const AnisotropySpec spec = rng.spec();
        minkowski.observe(rel_diff(finsler_interval_sq(dx, {spec.nu, 0.0}, tol), minkowski_interval(dx)));

        const double lambda = rng.uniform(0.1, 10.0);
        homogeneity.observe(rel_diff(finsler_interval_sq(dx * lambda, spec, tol),
                                     lambda * lambda * finsler_interval_sq(dx, spec, tol)));

        const UnitVector3 axis = rng.direction();
        const Matrix4 rot = axial_rotation(axis, rng.uniform(0.0, 2.0 * std::numbers::pi));
        const FourVector rotated_nu = rot * FourVector{0.0, spec.nu.vec()};
        const AnisotropySpec rotated{UnitVector3::normalize(rotated_nu.spatial()), spec.r};
        rotation.observe(rel_diff(finsler_interval_sq(rot * dx, rotated, tol), finsler_interval_sq(dx, spec, tol)));
    }
    return {minkowski.result(), homogeneity.result(), rotation.result()};
}

/// Closed-form boosts against the matrix exponential of their generators.
inline std::vector<PropertyResult> suite_oracle(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property lorentz("boost_vs_expm_abs", 1e-10);
    Property generalized("generalized_boost_vs_expm_abs", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const AnisotropySpec spec = rng.spec();
        const BoostParams g = rng.boost_params();
        lorentz.observe(boost_matrix(spec.nu, g, tol).max_abs_diff(expm(generator(spec.nu, g.n).scaled(g.alpha))));
        generalized.observe(generalized_boost_matrix(spec, g, tol)
                                .max_abs_diff(expm(generalized_generator(spec, g.n).scaled(g.alpha))));
    }
    return {lorentz.result(), generalized.result()};
}

/// Composition law against matrix products; additivity of nu.n.alpha; associativity.
inline std::vector<PropertyResult> suite_closure(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property product("composition_vs_matrix_product_abs", 1e-10);
    Property additivity("axial_rapidity_additivity_abs", 1e-12);
    Property associativity("associativity_abs", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g1 = rng.boost_params();
        const BoostParams g2 = rng.boost_params();
        const BoostParams g3 = rng.boost_params();
        const BoostParams g21 = compose(nu, g1, g2, tol).params;
        product.observe(boost_matrix(nu, g21, tol).max_abs_diff(boost_matrix(nu, g2, tol) * boost_matrix(nu, g1, tol)));
        additivity.observe(std::abs(axial_rapidity(nu, g21) - axial_rapidity(nu, g1) - axial_rapidity(nu, g2)));

        const BoostParams left = compose(nu, g21, g3, tol).params;
        const BoostParams right = compose(nu, g1, compose(nu, g2, g3, tol).params, tol).params;
        associativity.observe(vec_diff(left.vec(), right.vec()));
    }
    return {product.result(), additivity.result(), associativity.result()};
}

/// Invariance of the Finsler interval under generalized boosts; determinants.
inline std::vector<PropertyResult> suite_metric(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property finsler_inv("finsler_interval_invariance_rel", 1e-10);
    Property minkowski_inv("minkowski_interval_invariance_rel", 1e-10);
    Property det_lorentz("det_boost_minus_one_abs", 1e-10);
    Property det_general("det_generalized_vs_D4_rel", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const AnisotropySpec spec = rng.spec();
        const BoostParams g = rng.boost_params();
        const FourVector dx = rng.timelike();
        const Matrix4 general = generalized_boost_matrix(spec, g, tol);
        const Matrix4 lorentz = boost_matrix(spec.nu, g, tol);
        finsler_inv.observe(rel_diff(finsler_interval_sq(general * dx, spec, tol), finsler_interval_sq(dx, spec, tol)));
        minkowski_inv.observe(rel_diff(minkowski_interval(lorentz * dx), minkowski_interval(dx)));
        det_lorentz.observe(std::abs(lorentz.det() - 1.0));
        det_general.observe(rel_diff(general.det(), std::pow(dilation_from_params(spec, g), 4)));
    }
    return {finsler_inv.result(), minkowski_inv.result(), det_lorentz.result(), det_general.result()};
}

/// (n, alpha) -> v -> (n, alpha), including draws inside the series band.
inline std::vector<PropertyResult> suite_roundtrip(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property generic("params_roundtrip_abs", 1e-9);
    Property band("params_roundtrip_near_degenerate_abs", 1e-9);
    Property speed("speed_below_one_margin", 0.0, true);
    const auto check = [&](Property &p, const UnitVector3 &nu, const BoostParams &g) {
        const Velocity3 v = velocity_from_params(nu, g, tol);
        speed.observe(1.0 - v.speed());
        const BoostParams back = params_from_velocity(nu, v, tol);
        const BoostParams want = g.canonical();
        p.observe(std::max(vec_diff(back.n.vec(), want.n.vec()), std::abs(back.alpha - want.alpha)));
    };
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        check(generic, nu, rng.boost_params());
    }
    const std::size_t band_samples = std::min<std::size_t>(samples, 100);
    for (std::size_t i = 0; i < band_samples; ++i) {
        const UnitVector3 nu = rng.direction();
        check(band, nu, near_degenerate_params(rng, nu, tol.limit_switch));
    }
    return {generic.result(), band.result(), speed.result()};
}

/// Velocity addition against compose-then-convert; the v2 = nu fixed point.
inline std::vector<PropertyResult> suite_addition(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property consistency("addition_vs_compose_abs", 1e-10);
    Property fixed_point("add_nu_returns_nu_abs", 1e-12);
    Property speed("sum_speed_below_one_margin", 0.0, true);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g1 = rng.boost_params();
        const BoostParams g2 = rng.boost_params();
        const Velocity3 v1 = velocity_from_params(nu, g1, tol);
        const Velocity3 v2 = velocity_from_params(nu, g2, tol);
        const Velocity3 sum = add_velocities(nu, v1, v2);
        consistency.observe(vec_diff(sum.vec(), velocity_from_params(nu, compose(nu, g1, g2, tol).params, tol).vec()));
        speed.observe(1.0 - sum.speed());
        fixed_point.observe(vec_diff(add_velocities(nu, v1, Velocity3{nu.vec()}).vec(), nu.vec()));
    }
    return {consistency.result(), fixed_point.result(), speed.result()};
}

/// Spin representation: intertwining, generator powers, exponential form, group law, det.
inline std::vector<PropertyResult> suite_spinor(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property intertwining("intertwining_abs", 1e-10);
    Property square("generator_square_abs", 1e-12);
    Property cube("generator_cube_abs", 1e-12);
    Property exponential("closed_form_vs_expm_abs", 1e-10);
    Property representation("one_parameter_group_law_abs", 1e-10);
    Property unimodular("det_minus_one_abs", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        const BoostParams g = rng.boost_params();
        const SpinorMatrix s = spinor_boost(nu, g, tol);
        const SpinorMatrix s_inv = spinor_boost(nu, {g.n, -g.alpha}, tol);
        const Matrix4 lorentz = boost_matrix(nu, g, tol);
        const auto &basis = gamma_basis();
        for (std::size_t n = 0; n < 4; ++n) {
            intertwining.observe((s_inv * basis.gamma[n] * s).max_abs_diff(mixed_gammas(lorentz, n)));
        }

        const SpinorMatrix k = spinor_generator(nu, g.n);
        const double c = dot3(nu.vec(), g.n.vec());
        square.observe((k * k).max_abs_diff(SpinorMatrix::identity().scaled(c * c)));
        cube.observe((k * k * k).max_abs_diff(k.scaled(c * c)));
        exponential.observe(s.max_abs_diff(expm(k.scaled(0.5 * g.alpha))));

        const double a2 = rng.uniform(-3.0, 3.0);
        representation.observe((s * spinor_boost(nu, {g.n, a2}, tol)).max_abs_diff(spinor_boost(nu, {g.n, g.alpha + a2}, tol)));
        unimodular.observe(std::abs(s.det() - 1.0));
    }
    return {intertwining.result(), square.result(), cube.result(), exponential.result(), representation.result(),
            unimodular.result()};
}

/// Closed-form bispinor boost against D^{-3/2} S through the parameter maps; weight laws.
inline std::vector<PropertyResult> suite_bispinor(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property two_path("closed_form_vs_composite_rel", 1e-9);
    Property density("density_weight_rel", 1e-10);
    Property current("current_weight_rel", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const AnisotropySpec spec = rng.spec();
        const Velocity3 v = rng.velocity();
        Bispinor psi = rng.bispinor();
        while (std::abs(scalar_density(psi, tol)) <= 0.1) {
            psi = rng.bispinor();
        }

        const Bispinor direct = bispinor_transform(spec, v, psi);
        const BoostParams g = params_from_velocity(spec.nu, v, tol);
        const double weight = std::pow(dilation_factor(spec, v), kBispinorWeight);
        const Bispinor composite = spinor_boost(spec.nu, g, tol).scaled(weight) * psi;
        double diff = 0.0;
        double scale = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            diff = std::max(diff, std::abs(direct[k] - composite[k]));
            scale = std::max(scale, std::abs(composite[k]));
        }
        two_path.observe(diff / scale);

        const double d3 = std::pow(dilation_factor(spec, v), -3.0);
        density.observe(rel_diff(scalar_density(direct, tol), d3 * scalar_density(psi, tol)));

        const Matrix4 lorentz = boost_matrix(spec.nu, g, tol);
        const FourVector expected = (lorentz * vector_current(psi, tol)) * d3;
        const FourVector got = vector_current(direct, tol);
        double cscale = 0.0;
        for (std::size_t n = 0; n < 4; ++n) {
            cscale = std::max(cscale, std::abs(expected[n]));
        }
        current.observe(four_diff(got, expected) / cscale);
    }
    return {two_path.result(), density.result(), current.result()};
}

/// Finslerian bispinor form under the bispinor boosts, |Psi-bar Psi| > 0.1.
inline std::vector<PropertyResult> suite_bispinor_invariant(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property invariance("finsler_form_invariance_rel", 1e-9);
    for (std::size_t i = 0; i < samples; ++i) {
        const AnisotropySpec spec = rng.spec();
        const Velocity3 v = rng.velocity();
        Bispinor psi = rng.bispinor();
        while (std::abs(scalar_density(psi, tol)) <= 0.1) {
            psi = rng.bispinor();
        }
        invariance.observe(rel_diff(finsler_bispinor_invariant(spec, bispinor_transform(spec, v, psi), tol),
                                    finsler_bispinor_invariant(spec, psi, tol)));
    }
    return {invariance.result()};
}

/// Abelian and axial subgroups: invariants, scaling laws, limits and group structure.
inline std::vector<PropertyResult> suite_subgroups(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property horo_interval("abelian_v_preserves_interval_abs", 1e-10);
    Property horo_null("abelian_v_preserves_null_coordinate_abs", 1e-10);
    Property reparam("abelian_v_vs_abelian_params_abs", 1e-10);
    Property limit("abelian_vs_generalized_boost_abs", 1e-10);
    Property commute("abelian_commutativity_abs", 1e-10);
    Property closure("abelian_closure_vs_compose_abs", 1e-10);
    Property null_scale("axial_null_coordinate_scaling_rel", 1e-10);
    Property interval_scale("axial_interval_scaling_rel", 1e-10);
    Property ratio("axial_transverse_ratio_rel", 1e-9);
    Property flow("axial_flow_additivity_abs", 1e-10);
    Property axial_finsler("axial_preserves_own_finsler_rel", 1e-10);
    Property mismatch("axial_breaks_mismatched_finsler_rel", 1e-6, true);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        const AbelianParams p = abelian_params(rng, nu);
        const AbelianParams q = abelian_params(rng, nu);
        const FourVector x = rng.event();
        const Velocity3 v = abelian_velocity(nu, p);

        const FourVector xv = abelian_transform_v(nu, v, x);
        horo_interval.observe(std::abs(minkowski_interval(xv) - minkowski_interval(x)));
        horo_null.observe(std::abs((xv.t - dot3(nu.vec(), xv.spatial())) - (x.t - dot3(nu.vec(), x.spatial()))));
        reparam.observe(four_diff(xv, abelian_transform(nu, p, x)));
        const AnisotropySpec spec{nu, rng.anisotropy()};
        limit.observe(four_diff(abelian_transform(nu, p, x), generalized_boost_matrix(spec, p.boost(), tol) * x));

        commute.observe(four_diff(abelian_transform(nu, q, abelian_transform(nu, p, x)),
                                  abelian_transform(nu, p, abelian_transform(nu, q, x))));
        const BoostParams composed = compose(nu, p.boost(), q.boost(), tol).params;
        closure.observe(vec_diff(composed.vec(), p.vec() + q.vec()));

        const FourVector tx = rng.timelike();
        const AxialParams a{rng.uniform(-3.0, 3.0)};
        const AxialParams b{rng.uniform(-3.0, 3.0)};
        const FourVector ty = axial_transform(spec, a, tx);
        const AxialInvariants before = axial_invariants(spec, tx);
        const AxialInvariants after = axial_invariants(spec, ty);
        null_scale.observe(rel_diff(after.null_coordinate, std::exp((1.0 - spec.r) * a.alpha) * before.null_coordinate));
        interval_scale.observe(rel_diff(after.interval, std::exp(-2.0 * spec.r * a.alpha) * before.interval));
        ratio.observe(std::abs(after.transverse_ratio - before.transverse_ratio) /
                      std::max(before.transverse_ratio, 1e-3));
        flow.observe(four_diff(axial_transform(spec, a, axial_transform(spec, b, x)),
                               axial_transform(spec, {a.alpha + b.alpha}, x)));
        axial_finsler.observe(rel_diff(finsler_interval_sq(ty, spec, tol), finsler_interval_sq(tx, spec, tol)));

        if (std::abs(a.alpha) > 0.1) {
            const AnisotropySpec other{nu, spec.r + 0.5};
            mismatch.observe(rel_diff(finsler_interval_sq(ty, other, tol), finsler_interval_sq(tx, other, tol)));
        }
    }
    return {horo_interval.result(), horo_null.result(), reparam.result(),  limit.result(),
            commute.result(),       closure.result(),   null_scale.result(), interval_scale.result(),
            ratio.result(),         flow.result(),      axial_finsler.result(), mismatch.result()};
}

/// Induced motions of velocity space: isometry and the invariant surface families.
inline std::vector<PropertyResult> suite_velocity_space(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property isometry("induced_motion_isometry_rel", 1e-9);
    Property horosphere("horosphere_level_invariance_rel", 1e-9);
    Property cylinder("cylinder_level_invariance_rel", 1e-9);
    Property dilation("dilation_equals_level_power_abs", 1e-12);
    Property dilation_route("dilation_velocity_vs_params_rel", 1e-10);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        const Velocity3 frame = rng.velocity();
        const Velocity3 v1 = rng.velocity();
        const Velocity3 v2 = rng.velocity();
        const double d0 = lobachevsky_distance(v1, v2);
        const double d1 = lobachevsky_distance(induced_motion(nu, frame, v1, tol), induced_motion(nu, frame, v2, tol));
        isometry.observe(std::abs(d1 - d0) / std::max(d0, 1e-3));

        const Velocity3 abelian_frame = abelian_velocity(nu, abelian_params(rng, nu));
        horosphere.observe(rel_diff(horosphere_level(nu, induced_motion(nu, abelian_frame, v1, tol)),
                                    horosphere_level(nu, v1)));

        const Velocity3 axial_frame{nu.vec() * std::tanh(rng.uniform(-3.0, 3.0))};
        cylinder.observe(std::abs(cylinder_level(nu, induced_motion(nu, axial_frame, v1, tol)) - cylinder_level(nu, v1)) /
                         std::max(cylinder_level(nu, v1), 1e-3));

        const AnisotropySpec spec{nu, rng.anisotropy()};
        dilation.observe(std::abs(dilation_factor(spec, v1) - std::pow(horosphere_level(nu, v1), spec.r)));
        dilation_route.observe(rel_diff(dilation_factor(spec, v1),
                                        dilation_from_params(spec, params_from_velocity(nu, v1, tol))));
    }
    return {isometry.result(), horosphere.result(), cylinder.result(), dilation.result(), dilation_route.result()};
}

/// Closed vs series branches exactly at |nu.n.alpha| = limit_switch.
inline std::vector<PropertyResult> suite_continuity(Rng &rng, std::size_t samples, const Tolerance &tol)
{
    Property boost("boost_branch_gap_abs", 1e-9);
    Property velocity("velocity_branch_gap_abs", 1e-9);
    Property spin("spinor_branch_gap_abs", 1e-9);
    for (std::size_t i = 0; i < samples; ++i) {
        const UnitVector3 nu = rng.direction();
        UnitVector3 n = rng.direction();
        while (std::abs(dot3(nu.vec(), n.vec())) < 0.05) {
            n = rng.direction();
        }
        const double sign = rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0;
        const BoostParams g{n, sign * tol.limit_switch / dot3(nu.vec(), n.vec())};
        boost.observe(boost_matrix(nu, g, tol, Branch::Closed).max_abs_diff(boost_matrix(nu, g, tol, Branch::Series)));
        velocity.observe(vec_diff(velocity_from_params(nu, g, tol, Branch::Closed).vec(),
                                  velocity_from_params(nu, g, tol, Branch::Series).vec()));
        spin.observe(spinor_boost(nu, g, tol, Branch::Closed).max_abs_diff(spinor_boost(nu, g, tol, Branch::Series)));
    }
    return {boost.result(), velocity.result(), spin.result()};
}

// -----------------------------------------------------------------------------
// Registry and driver
// -----------------------------------------------------------------------------

struct SuiteEntry {
    std::string_view name;
    SuiteFn run;
};

inline const std::vector<SuiteEntry> &suites()
{
    static const std::vector<SuiteEntry> all = {
        {"core", suite_core},
        {"oracle", suite_oracle},
        {"closure", suite_closure},
        {"metric", suite_metric},
        {"roundtrip", suite_roundtrip},
        {"addition", suite_addition},
        {"spinor", suite_spinor},
        {"bispinor", suite_bispinor},
        {"bispinor_invariant", suite_bispinor_invariant},
        {"subgroups", suite_subgroups},
        {"velocity_space", suite_velocity_space},
        {"continuity", suite_continuity},
    };
    return all;
}

inline const SuiteEntry *find_suite(std::string_view name)
{
    for (const auto &s : suites()) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

/// Runs one suite on its own generator seeded by derive_seed(master_seed, name).
inline CheckReport run_suite(const SuiteEntry &suite, std::uint64_t master_seed, std::size_t samples,
                             const Tolerance &tol = {})
{
    CheckReport report;
    report.suite = std::string(suite.name);
    report.seed = master_seed;
    report.samples = samples;
    Rng rng(derive_seed(master_seed, suite.name));
    report.properties = suite.run(rng, samples, tol);
    for (const auto &p : report.properties) {
        report.pass = report.pass && p.pass;
    }
    return report;
}

} // namespace finsler::conformance
