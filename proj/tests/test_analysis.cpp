#include <doctest.h>

#include <cmath>
#include <random>

#include "polarix/analysis.hpp"
#include "polarix/presets.hpp"

using namespace polarix;

namespace {

std::vector<double> grid(double lo, double hi, int n) { return SweepAxis::linspace("g", lo, hi, n).values; }

SweepSpec vl_spec() {
    SweepSpec spec;
    spec.name = "vl";
    spec.base.gamma_e = 0.05;
    spec.conversions = {Conversion::designed("VL", states::vertical(), states::left_circular())};
    spec.metrics = {"fidelity", "dissipation"};
    return spec;
}

}  // namespace

TEST_CASE("linspace hits both end points exactly") {
    const auto axis = SweepAxis::linspace("x", 0.3, 0.7, 101);
    CHECK(axis.values.front() == 0.3);
    CHECK(axis.values.back() == 0.7);
    CHECK(axis.values[50] == 0.5);
    CHECK_THROWS_AS(SweepAxis::linspace("x", 0.0, 1.0, 1), InvalidArgument);
}

TEST_CASE("designed conversions use the branch nearest pi/4") {
    const auto vl = Conversion::designed("VL", states::vertical(), states::left_circular());
    CHECK(vl.theta == doctest::Approx(kPi / 4.0));
    CHECK(vl.alpha.value() == doctest::Approx(2.0));
    const auto rv = Conversion::designed("RV", states::right_circular(), states::vertical());
    CHECK(rv.theta == doctest::Approx(kPi / 4.0));
    CHECK(rv.alpha.value() == doctest::Approx(2.0));
    const auto hv = Conversion::designed("HV", states::horizontal(), states::vertical());
    CHECK(hv.alpha.value() == doctest::Approx(0.0));
}

TEST_CASE("centered V to L fidelity with gamma_e = 0.05") {
    auto spec = vl_spec();
    spec.axes = {SweepAxis::list("x", {0.34, 0.5})};
    const auto r = run_sweep(spec);
    // tests/oracles/oracle_values.txt
    CHECK(r.metric("fidelity")[1] == doctest::Approx(0.98761669624257388).epsilon(1e-13));
    CHECK(r.metric("fidelity")[0] == doctest::Approx(0.98053400420504781).epsilon(1e-13));
}

TEST_CASE("fidelity decreases away from a square cross-section") {
    auto spec = vl_spec();
    spec.axes = {SweepAxis::linspace("delta_ba", 0.0, 0.05, 26)};
    const auto f = run_sweep(spec).metric("fidelity");
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] < f[i - 1]);
}

TEST_CASE("fidelity maps are symmetric in the cross-section") {
    for (const auto& conv : robustness_conversions()) {
        SweepSpec spec;
        spec.name = "sym";
        spec.base.gamma_e = 0.05;
        spec.conversions = {conv};
        spec.metrics = {"fidelity"};
        spec.axes = {SweepAxis::linspace("x", 0.3, 0.7, 9), SweepAxis::linspace("y", 0.3, 0.7, 9)};
        const auto r = run_sweep(spec);
        const auto& f = r.metric("fidelity");
        for (int i = 0; i < 9; ++i) {
            for (int j = 0; j < 9; ++j) {
                CHECK(std::abs(f[i * 9 + j] - f[(8 - i) * 9 + j]) < 1e-10);
                CHECK(std::abs(f[i * 9 + j] - f[i * 9 + (8 - j)]) < 1e-10);
            }
        }
    }
}

TEST_CASE("results do not depend on the worker count") {
    SweepSpec spec;
    spec.name = "det";
    spec.base.gamma_e = 0.05;
    spec.conversions = robustness_conversions();
    spec.metrics = {"fidelity", "dissipation", "s3"};
    spec.axes = {SweepAxis::linspace("delta_ba", -0.05, 0.05, 17), SweepAxis::linspace("x", 0.3, 0.7, 13)};
    const auto one = run_sweep(spec, 1);
    for (unsigned t : {2u, 3u, 7u, 0u}) {
        const auto many = run_sweep(spec, t);
        CHECK(many.values == one.values);
    }
    CHECK(one.metric_names.front() == "fidelity_HV");
}

TEST_CASE("coordinates are row-major with the first axis slowest") {
    auto spec = vl_spec();
    spec.axes = {SweepAxis::list("x", {0.4, 0.5}), SweepAxis::list("y", {0.1, 0.2, 0.3})};
    const auto r = run_sweep(spec);
    CHECK(r.shape() == std::vector<std::size_t>{2, 3});
    CHECK(r.coordinates(4) == std::vector<double>{0.5, 0.2});
}

TEST_CASE("sweep validation") {
    auto spec = vl_spec();
    spec.axes = {SweepAxis::list("bogus", {0.0, 1.0})};
    CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
    spec.axes = {SweepAxis::list("x", {0.4, 0.5}), SweepAxis::list("x", {0.4, 0.5})};
    CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
    spec.axes = {SweepAxis::list("x", {0.4, 0.5})};
    spec.metrics = {"omega"};
    CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
    spec.metrics = {"fidelity"};
    spec.conversions.clear();
    CHECK_THROWS_AS(run_sweep(spec), InvalidArgument);
}

TEST_CASE("a failing grid point names its coordinates") {
    auto spec = vl_spec();
    spec.axes = {SweepAxis::list("k", {1.3, 0.9})};
    try {
        run_sweep(spec);
        FAIL("expected an error");
    } catch (const PhysicsError& e) {
        CHECK(std::string(e.what()).find("k=0.90000000000000002") != std::string::npos);
    }
}

TEST_CASE("Poincare trajectories") {
    SUBCASE("alpha sweep at theta = pi/4 stays in the s1-s3 plane") {
        const auto r = poincare_trajectory(kPi / 4.0, {-2.0, 0.0, 2.0});
        CHECK(r.metric("s3")[0] == doctest::Approx(-1.0));
        CHECK(r.metric("s1")[1] == doctest::Approx(-1.0));
        CHECK(r.metric("s3")[2] == doctest::Approx(1.0));
        for (double s2 : r.metric("s2")) CHECK(std::abs(s2) < 1e-15);
    }
    SUBCASE("theta sweep at alpha = 0 follows the equator") {
        const auto thetas = grid(0.0, kPi / 2.0, 9);
        const auto r = stokes_vs_theta(Alpha::finite(0.0), thetas);
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            CHECK(r.metric("s1")[i] == doctest::Approx(std::cos(4.0 * thetas[i])));
            CHECK(r.metric("s2")[i] == doctest::Approx(std::sin(4.0 * thetas[i])));
            CHECK(std::abs(r.metric("s3")[i]) < 1e-15);
        }
    }
    SUBCASE("circle invariant") {
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> u(0.0, kPi / 2.0);
        const double theta = u(rng);
        const auto r = poincare_trajectory(theta, grid(-30.0, 30.0, 61));
        for (std::size_t i = 0; i < r.size(); ++i) {
            const double ds1 = r.metric("s1")[i] - std::pow(std::cos(2 * theta), 2);
            const double ds2 = r.metric("s2")[i] - std::sin(2 * theta) * std::cos(2 * theta);
            const double ds3 = r.metric("s3")[i];
            CHECK(std::sqrt(ds1 * ds1 + ds2 * ds2 + ds3 * ds3) == doctest::Approx(std::sin(2 * theta)).epsilon(1e-10));
        }
    }
}

TEST_CASE("drive curves mark infeasible points as missing") {
    const auto r = drive_curves(2.0, {-1.0}, {-3.0, -1.0, 0.0});
    const auto& omega = r.metric("omega");
    CHECK(omega[0] == doctest::Approx(2.0 * std::sqrt(2.0)));
    CHECK(std::isnan(omega[1]));
    CHECK(std::isnan(omega[2]));
    CHECK(r.constants.front().first == "alpha_condition");
}

TEST_CASE("mode map is laid out on the x-y grid") {
    const auto r = mode_map(ideal_geometry(), kPi / 2.0, 5, 3);
    CHECK(r.shape() == std::vector<std::size_t>{5, 3});
    // x = 0.5, y = 0.5 sits at flat index 2 * 3 + 1
    CHECK(std::abs(r.metric("chi")[7]) == doctest::Approx(kPi / 4.0));
    CHECK(r.coordinates(7) == std::vector<double>{0.5, 0.5});
}

TEST_CASE("every preset builds a valid spec") {
    PresetOptions opts;
    opts.points = 5;
    for (const auto& name : sweep_preset_names()) {
        for (const auto& spec : preset_specs(name, opts)) CHECK_NOTHROW(spec.validate());
    }
    CHECK_THROWS_AS(preset_specs("fig9", opts), InvalidArgument);
}
